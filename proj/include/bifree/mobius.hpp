#pragma once

#include <map>
#include <vector>

#include "bifree/partition.hpp"
#include "bifree/rational.hpp"

namespace bifree {

/// Möbius function of intervals of the noncrossing partition lattice NC(n),
/// computed by the defining recursion sum_{lo <= rho <= hi} mu(rho, hi) = [lo == hi]
/// over noncrossing rho, memoized. Values are exact rationals (they are in
/// fact integers) for uniformity with the cumulant coefficients.
class NCMobius {
 public:
  Rational mu(const Partition& lo, const Partition& hi);

  /// All noncrossing rho with lo <= rho <= hi.
  static std::vector<Partition> interval(const Partition& lo, const Partition& hi);

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> memo_;
};

/// Precomputed NC(n) lattice: order relation and full Möbius table. Build once,
/// then share read-only across workers.
struct NCLattice {
  explicit NCLattice(int n);

  int n;
  std::vector<Partition> elements;            // lexicographic RGS order
  std::vector<std::vector<int>> below;        // below[i] = indices j with elements[j] <= elements[i]
  std::vector<std::map<int, Rational>> mu;    // mu[i][j] = mu(elements[j], elements[i]) for j in below[i]
  std::map<std::vector<int>, int> index;      // rgs -> position

  int index_of(const Partition& p) const;
};

}  // namespace bifree
