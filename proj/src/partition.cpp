#include "bifree/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bifree {

void Partition::rebuild_from_block_of() {
  int nb = 0;
  for (int b : block_of_) nb = std::max(nb, b + 1);
  blocks_.assign(nb, {});
  for (int i = 0; i < n_; ++i) blocks_[block_of_[i]].push_back(i);
}

Partition Partition::singletons(int n) {
  Partition p;
  p.n_ = n;
  p.block_of_.resize(n);
  for (int i = 0; i < n; ++i) p.block_of_[i] = i;
  p.rebuild_from_block_of();
  return p;
}

Partition Partition::full(int n) {
  Partition p;
  p.n_ = n;
  p.block_of_.assign(n, 0);
  p.rebuild_from_block_of();
  return p;
}

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  if (n < 1) throw std::invalid_argument("partition ground set must be nonempty");
  std::vector<int> owner(n, -1);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    for (int x : b) {
      if (x < 0 || x >= n) throw std::invalid_argument("block element out of range");
      if (owner[x] != -1) throw std::invalid_argument("blocks are not disjoint");
      owner[x] = 0;
    }
  }
  for (int i = 0; i < n; ++i)
    if (owner[i] == -1) throw std::invalid_argument("blocks do not cover the ground set");

  // Canonicalize into RGS form (block index = order of first occurrence).
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Partition p;
  p.n_ = n;
  p.block_of_.assign(n, -1);
  for (int bi = 0; bi < int(blocks.size()); ++bi)
    for (int x : blocks[bi]) p.block_of_[x] = bi;
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::kernel(std::span<const int> J) {
  if (J.empty()) throw std::invalid_argument("kernel of an empty tuple");
  Partition p;
  p.n_ = int(J.size());
  p.block_of_.resize(p.n_);
  std::map<int, int> seen;
  for (int i = 0; i < p.n_; ++i) {
    auto [it, inserted] = seen.emplace(J[i], int(seen.size()));
    p.block_of_[i] = it->second;
  }
  p.rebuild_from_block_of();
  return p;
}

Partition Partition::parse(const std::string& literal) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  int depth = 0;
  int num = -1;
  int maxv = 0;
  auto flush_num = [&] {
    if (num >= 0) {
      if (num < 1) throw parse_error("partition literals are 1-based");
      cur.push_back(num - 1);
      maxv = std::max(maxv, num);
      num = -1;
    }
  };
  for (char c : literal) {
    if (c == '[') {
      ++depth;
      if (depth > 2) throw parse_error("bad partition literal: " + literal);
    } else if (c == ']') {
      flush_num();
      if (depth == 2 && !cur.empty()) {
        blocks.push_back(cur);
        cur.clear();
      }
      --depth;
      if (depth < 0) throw parse_error("bad partition literal: " + literal);
    } else if (c >= '0' && c <= '9') {
      if (depth != 2) throw parse_error("bad partition literal: " + literal);
      num = (num < 0 ? 0 : num * 10) + (c - '0');
    } else if (c == ',' || c == ' ' || c == '\t') {
      flush_num();
    } else {
      throw parse_error("bad partition literal: " + literal);
    }
  }
  if (depth != 0) throw parse_error("unbalanced partition literal: " + literal);
  if (blocks.empty()) throw parse_error("empty partition literal: " + literal);
  return from_blocks(maxv, std::move(blocks));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << ',';
    os << '[';
    for (size_t k = 0; k < blocks_[b].size(); ++k) {
      if (k) os << ',';
      os << blocks_[b][k] + 1;
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

bool leq(const Partition& pi, const Partition& sigma) {
  if (pi.size() != sigma.size()) throw std::invalid_argument("leq: size mismatch");
  // Every block of pi must sit in a single block of sigma.
  for (const auto& b : pi.blocks()) {
    int target = sigma.block_of(b.front());
    for (int x : b)
      if (sigma.block_of(x) != target) return false;
  }
  return true;
}

bool is_noncrossing(const Partition& pi) {
  const int n = pi.size();
  // Crossing iff i1<i2<i3<i4 with i1,i3 in one block and i2,i4 in another.
  for (int i2 = 0; i2 < n; ++i2)
    for (int i3 = i2 + 1; i3 < n; ++i3) {
      if (pi.block_of(i2) == pi.block_of(i3)) continue;
      bool left = false, right = false;
      for (int i1 = 0; i1 < i2 && !left; ++i1)
        if (pi.block_of(i1) == pi.block_of(i3)) left = true;
      if (!left) continue;
      for (int i4 = i3 + 1; i4 < n && !right; ++i4)
        if (pi.block_of(i4) == pi.block_of(i2)) right = true;
      if (right) return false;
    }
  return true;
}

namespace {

void check_bound(int n) {
  if (n < 1 || n > kEnumerationBound)
    throw std::invalid_argument("enumeration supported for 1 <= n <= " +
                                std::to_string(kEnumerationBound));
}

// Generates partitions as RGS strings in lexicographic order. With `nc_prune`
// only noncrossing partitions are produced: extending position `pos` by an
// existing block b creates a crossing exactly when some other block has an
// element strictly between last(b) and pos as well as one before last(b).
struct RgsGen {
  int n;
  bool nc_prune;
  std::vector<Partition>& out;
  std::vector<int> rgs;
  std::vector<int> last;  // last occurrence per block id

  RgsGen(int n_, bool nc, std::vector<Partition>& o) : n(n_), nc_prune(nc), out(o), rgs(n_), last(n_, -1) {}

  bool extension_ok(int pos, int b) const {
    int lb = last[b];
    for (int j = lb + 1; j < pos; ++j) {
      int c = rgs[j];
      if (c == b) continue;
      for (int t = lb - 1; t >= 0; --t)
        if (rgs[t] == c) return false;
    }
    return true;
  }

  void run(int pos, int used) {
    if (pos == n) {
      std::vector<std::vector<int>> blocks(used);
      for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i);
      out.push_back(Partition::from_blocks(n, std::move(blocks)));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      if (b < used && nc_prune && !extension_ok(pos, b)) continue;
      rgs[pos] = b;
      int saved = last[b];
      last[b] = pos;
      run(pos + 1, std::max(used, b + 1));
      last[b] = saved;
    }
  }
};

void gen_rgs(int n, bool nc_prune, std::vector<Partition>& out) {
  RgsGen g(n, nc_prune, out);
  g.run(0, 0);
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  check_bound(n);
  std::vector<Partition> out;
  gen_rgs(n, false, out);
  return out;
}

std::vector<Partition> enumerate_nc(int n) {
  check_bound(n);
  std::vector<Partition> out;
  gen_rgs(n, true, out);
  return out;
}

Partition apply_perm(const Partition& pi, std::span<const int> perm) {
  if (int(perm.size()) != pi.size()) throw std::invalid_argument("apply_perm: size mismatch");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(pi.num_blocks());
  for (const auto& b : pi.blocks()) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int x : b) nb.push_back(perm[x]);
    blocks.push_back(std::move(nb));
  }
  return Partition::from_blocks(pi.size(), std::move(blocks));
}

}  // namespace bifree
