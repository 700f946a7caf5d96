#include "bifree/mobius.hpp"

#include <stdexcept>

namespace bifree {

std::vector<Partition> NCMobius::interval(const Partition& lo, const Partition& hi) {
  if (!leq(lo, hi)) throw std::invalid_argument("interval: lower is not <= upper");
  // Elements of [lo, hi] merge lo's blocks within each block of hi. Enumerate
  // per-hi-block set partitions of the contained lo-blocks and take products.
  const int n = lo.size();
  std::vector<std::vector<int>> lo_blocks_in_hi(hi.num_blocks());
  for (int b = 0; b < lo.num_blocks(); ++b)
    lo_blocks_in_hi[hi.block_of(lo.blocks()[b].front())].push_back(b);

  std::vector<Partition> out;
  struct Grouping {
    std::vector<std::vector<int>> groups;  // groups of lo-block ids
  };
  std::vector<std::vector<Grouping>> groupings(hi.num_blocks());
  for (int h = 0; h < hi.num_blocks(); ++h) {
    int k = int(lo_blocks_in_hi[h].size());
    for (const Partition& q : all_partitions(k)) {
      Grouping g;
      for (const auto& qb : q.blocks()) {
        std::vector<int> grp;
        for (int idx : qb) grp.push_back(lo_blocks_in_hi[h][idx]);
        g.groups.push_back(std::move(grp));
      }
      groupings[h].push_back(std::move(g));
    }
  }

  std::vector<int> pick(hi.num_blocks(), 0);
  while (true) {
    std::vector<std::vector<int>> blocks;
    for (int h = 0; h < hi.num_blocks(); ++h)
      for (const auto& grp : groupings[h][pick[h]].groups) {
        std::vector<int> merged;
        for (int lb : grp)
          merged.insert(merged.end(), lo.blocks()[lb].begin(), lo.blocks()[lb].end());
        blocks.push_back(std::move(merged));
      }
    Partition rho = Partition::from_blocks(n, std::move(blocks));
    if (is_noncrossing(rho)) out.push_back(std::move(rho));

    int h = 0;
    while (h < hi.num_blocks() && ++pick[h] == int(groupings[h].size())) pick[h++] = 0;
    if (h == hi.num_blocks()) break;
  }
  return out;
}

Rational NCMobius::mu(const Partition& lo, const Partition& hi) {
  if (lo.size() != hi.size()) throw std::invalid_argument("mobius: size mismatch");
  if (!is_noncrossing(lo) || !is_noncrossing(hi))
    throw std::invalid_argument("mobius: arguments must be noncrossing");
  if (!leq(lo, hi)) throw std::invalid_argument("mobius: lower is not <= upper");
  auto key = std::make_pair(lo.rgs(), hi.rgs());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Rational value(lo == hi ? 1 : 0);
  if (lo != hi) {
    for (const Partition& rho : interval(lo, hi))
      if (rho != lo) value -= mu(rho, hi);
  }
  memo_.emplace(std::move(key), value);
  return value;
}

NCLattice::NCLattice(int n_) : n(n_) {
  elements = enumerate_nc(n);
  for (int i = 0; i < int(elements.size()); ++i) index[elements[i].rgs()] = i;
  below.resize(elements.size());
  mu.resize(elements.size());
  NCMobius mob;
  for (int i = 0; i < int(elements.size()); ++i)
    for (int j = 0; j < int(elements.size()); ++j)
      if (leq(elements[j], elements[i])) {
        below[i].push_back(j);
        mu[i][j] = mob.mu(elements[j], elements[i]);
      }
}

int NCLattice::index_of(const Partition& p) const {
  auto it = index.find(p.rgs());
  if (it == index.end()) throw std::invalid_argument("partition is not noncrossing of this size");
  return it->second;
}

}  // namespace bifree
