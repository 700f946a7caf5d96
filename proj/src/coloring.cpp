#include "bifree/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace bifree {

Coloring Coloring::parse_lr(const std::string& s) {
  if (s.empty()) throw parse_error("empty coloring");
  Coloring c;
  c.alphabet = 2;
  c.faces.reserve(s.size());
  for (char ch : s) {
    if (ch == 'l' || ch == 'L')
      c.faces.push_back(kFaceLeft);
    else if (ch == 'r' || ch == 'R')
      c.faces.push_back(kFaceRight);
    else
      throw parse_error(std::string("coloring symbols must be 'l' or 'r', got '") + ch + "'");
  }
  return c;
}

Coloring Coloring::from_symbols(std::vector<int> symbols, int alphabet) {
  if (symbols.empty()) throw parse_error("empty coloring");
  for (int s : symbols)
    if (s < 0 || s >= alphabet) throw parse_error("coloring symbol outside the declared alphabet");
  Coloring c;
  c.faces = std::move(symbols);
  c.alphabet = alphabet;
  return c;
}

std::string Coloring::to_lr_string() const {
  if (alphabet != 2) throw std::logic_error("to_lr_string requires the {l,r} alphabet");
  std::string s;
  s.reserve(faces.size());
  for (int f : faces) s.push_back(f == kFaceLeft ? 'l' : 'r');
  return s;
}

std::string Coloring::key() const {
  if (alphabet == 2) return to_lr_string();
  std::string s;
  for (int f : faces) {
    s += std::to_string(f);
    s.push_back('.');
  }
  return s;
}

bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= int(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (int t = 0; t < int(p.size()); ++t) inv[p[t]] = t;
  return inv;
}

Perm s_chi_bifree(const Coloring& chi) {
  if (chi.alphabet != 2)
    throw std::invalid_argument("the bi-free twist rule is only defined on the {l,r} alphabet");
  Perm s;
  s.reserve(chi.size());
  for (int i = 0; i < chi.size(); ++i)
    if (chi[i] == kFaceLeft) s.push_back(i);
  for (int i = chi.size() - 1; i >= 0; --i)
    if (chi[i] == kFaceRight) s.push_back(i);
  return s;
}

TwistFamily TwistFamily::table(std::map<std::string, Perm> entries) {
  for (const auto& [key, perm] : entries)
    if (!is_perm(perm))
      throw std::invalid_argument("twist table entry for '" + key + "' is not a permutation");
  TwistFamily f(Kind::Table);
  f.table_ = std::move(entries);
  return f;
}

Perm TwistFamily::s_chi(const Coloring& chi) const {
  switch (kind_) {
    case Kind::BiFree:
      return s_chi_bifree(chi);
    case Kind::Identity: {
      Perm id(chi.size());
      for (int i = 0; i < chi.size(); ++i) id[i] = i;
      return id;
    }
    case Kind::Table: {
      auto it = table_.find(chi.key());
      if (it == table_.end())
        throw std::invalid_argument("twist table has no entry for coloring " + chi.key());
      if (int(it->second.size()) != chi.size())
        throw std::invalid_argument("twist table entry length mismatch for " + chi.key());
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

BNCContext::BNCContext(Coloring chi_, TwistFamily twist_)
    : chi(std::move(chi_)), twist(std::move(twist_)) {
  s = twist.s_chi(chi);
  s_inv = inverse_perm(s);
}

Partition untwist(const Partition& pi, const BNCContext& ctx) {
  if (pi.size() != ctx.size()) throw std::invalid_argument("untwist: size mismatch");
  return apply_perm(pi, ctx.s_inv);
}

Partition twist(const Partition& p, const BNCContext& ctx) {
  if (p.size() != ctx.size()) throw std::invalid_argument("twist: size mismatch");
  return apply_perm(p, ctx.s);
}

bool is_bnc(const Partition& pi, const BNCContext& ctx) {
  return is_noncrossing(untwist(pi, ctx));
}

std::vector<Partition> enumerate_bnc(const BNCContext& ctx) {
  std::vector<Partition> out;
  for (const Partition& p : enumerate_nc(ctx.size())) out.push_back(twist(p, ctx));
  return out;
}

Rational mobius_bnc(const Partition& pi, const Partition& sigma, const BNCContext& ctx,
                    NCMobius& mob) {
  Partition lo = untwist(pi, ctx);
  Partition hi = untwist(sigma, ctx);
  if (!is_noncrossing(lo) || !is_noncrossing(hi))
    throw std::invalid_argument("mobius_bnc: arguments are not bi-noncrossing for this coloring");
  if (!leq(lo, hi)) throw std::invalid_argument("mobius_bnc: pi is not <= sigma in BNC");
  return mob.mu(lo, hi);
}

}  // namespace bifree
