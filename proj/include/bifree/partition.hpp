#pragma once

#include <span>
#include <string>
#include <vector>

#include "bifree/rational.hpp"

namespace bifree {

/// Set partition of {1..n}, stored canonically: 0-based internally, each block
/// sorted ascending and blocks ordered by their minima. String/JSON literals
/// are 1-based ("[[1,2],[3,5,9],[4,7],[6,8]]").
class Partition {
 public:
  Partition() = default;

  static Partition singletons(int n);
  static Partition full(int n);

  /// Validating constructor from 0-based blocks (must cover {0..n-1} exactly once).
  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);

  /// ker(J): i,j in the same block iff J[i] == J[j].
  static Partition kernel(std::span<const int> J);

  /// 1-based list-of-lists literal.
  static Partition parse(const std::string& literal);

  int size() const { return n_; }
  int num_blocks() const { return int(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int i) const { return block_of_[i]; }

  /// Restricted-growth string: rgs[i] = index of i's block among blocks ordered
  /// by first occurrence. Equality/order contract of the canonical form.
  const std::vector<int>& rgs() const { return block_of_; }

  bool operator==(const Partition& o) const { return n_ == o.n_ && block_of_ == o.block_of_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return block_of_ < o.block_of_;
  }

  std::string to_string() const;  // 1-based literal

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // doubles as the canonical RGS

  void rebuild_from_block_of();
};

bool leq(const Partition& pi, const Partition& sigma);
bool is_noncrossing(const Partition& pi);

inline constexpr int kEnumerationBound = 12;

/// All set partitions of {1..n} in lexicographic RGS order.
std::vector<Partition> all_partitions(int n);

/// All noncrossing partitions in lexicographic RGS order; |result| = Catalan(n).
std::vector<Partition> enumerate_nc(int n);

/// Image partition with every element i replaced by perm[i] (0-based images).
Partition apply_perm(const Partition& pi, std::span<const int> perm);

}  // namespace bifree
