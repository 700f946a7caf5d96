#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bifree/mobius.hpp"
#include "bifree/partition.hpp"

namespace bifree {

inline constexpr int kFaceLeft = 0;
inline constexpr int kFaceRight = 1;

/// Face word chi over a finite alphabet. The bi-free case uses the two-symbol
/// alphabet {l, r} = {0, 1}; the generalized case uses {0..alphabet-1}.
struct Coloring {
  std::vector<int> faces;
  int alphabet = 2;

  int size() const { return int(faces.size()); }
  int operator[](int i) const { return faces[i]; }
  bool operator<(const Coloring& o) const { return faces < o.faces; }
  bool operator==(const Coloring& o) const { return faces == o.faces; }

  static Coloring parse_lr(const std::string& s);  // "lrllrrlrr"
  static Coloring from_symbols(std::vector<int> symbols, int alphabet);
  std::string to_lr_string() const;  // requires alphabet == 2
  std::string key() const;           // stable map key for any alphabet
};

using Perm = std::vector<int>;  // perm[t] = image of t, 0-based

Perm inverse_perm(const Perm& p);
bool is_perm(const Perm& p);

/// The bi-free twist: left positions ascending, then right positions descending.
Perm s_chi_bifree(const Coloring& chi);

/// Assignment chi -> s_chi: the built-in bi-free rule, the identity rule, or an
/// explicit user table. Table lookups for colorings missing from the table are
/// an error (no silent default).
class TwistFamily {
 public:
  enum class Kind { BiFree, Identity, Table };

  static TwistFamily bifree() { return TwistFamily(Kind::BiFree); }
  static TwistFamily identity() { return TwistFamily(Kind::Identity); }
  static TwistFamily table(std::map<std::string, Perm> entries);

  Kind kind() const { return kind_; }
  Perm s_chi(const Coloring& chi) const;

 private:
  explicit TwistFamily(Kind k) : kind_(k) {}
  Kind kind_;
  std::map<std::string, Perm> table_;
};

/// Cached coloring + twist pair: s_chi and its inverse, computed once.
struct BNCContext {
  Coloring chi;
  TwistFamily twist;
  Perm s;      // s_chi
  Perm s_inv;  // s_chi^{-1}

  BNCContext(Coloring chi_, TwistFamily twist_);
  static BNCContext bifree(const Coloring& chi) { return BNCContext(chi, TwistFamily::bifree()); }

  int size() const { return chi.size(); }
};

/// s_chi^{-1}(pi): each index replaced by its preimage, canonicalized.
Partition untwist(const Partition& pi, const BNCContext& ctx);
/// s_chi(p): forward image.
Partition twist(const Partition& p, const BNCContext& ctx);

bool is_bnc(const Partition& pi, const BNCContext& ctx);

/// BNC(chi) as the forward image of NC(n); count is Catalan(n).
std::vector<Partition> enumerate_bnc(const BNCContext& ctx);

/// mu_BNC(pi, sigma) = mu_NC(untwist pi, untwist sigma).
Rational mobius_bnc(const Partition& pi, const Partition& sigma, const BNCContext& ctx,
                    NCMobius& mob);

}  // namespace bifree
