// Dense univariate polynomials over a FieldSpec. Internal helper for minimal
// polynomials and idempotent splitting: division, xgcd, root finding.
#pragma once

#include "reckon/field.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace reckon {

// Coefficients low-to-high; normalized so the leading coefficient is nonzero
// (the zero polynomial is the empty vector).
struct Poly {
  FieldSpec field;
  std::vector<Rat> c;

  explicit Poly(FieldSpec f) : field(std::move(f)) {}
  Poly(FieldSpec f, std::vector<Rat> coeffs) : field(std::move(f)), c(std::move(coeffs)) {
    trim();
  }

  void trim() {
    while (!c.empty() && field.is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = field.add(field.mul(acc, x), c[i]);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Rat lead_inv = field.inv(c.back());
    Poly r(field);
    r.c.reserve(c.size());
    for (const auto& a : c) r.c.push_back(field.mul(a, lead_inv));
    return r;
  }
};

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.field);
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = a.field.add(r.c[i + j], a.field.mul(a.c[i], b.c[j]));
  r.trim();
  return r;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(a.field);
  r.c.assign(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    Rat x = i < a.c.size() ? a.c[i] : Rat(0);
    Rat y = i < b.c.size() ? b.c[i] : Rat(0);
    r.c[i] = a.field.add(x, y);
  }
  r.trim();
  return r;
}

inline Poly poly_scale(const Poly& a, const Rat& s) {
  Poly r(a.field);
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(a.field.mul(x, s));
  r.trim();
  return r;
}

// quotient, remainder with b != 0
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  const FieldSpec& f = a.field;
  Poly rem = a, quot(f);
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  quot.c.assign(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, Rat(0));
  Rat lead_inv = f.inv(b.c.back());
  while (!rem.is_zero() && rem.c.size() >= b.c.size()) {
    std::size_t shift = rem.c.size() - b.c.size();
    Rat coef = f.mul(rem.c.back(), lead_inv);
    quot.c[shift] = f.add(quot.c[shift], coef);
    for (std::size_t i = 0; i < b.c.size(); ++i)
      rem.c[i + shift] = f.sub(rem.c[i + shift], f.mul(coef, b.c[i]));
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

// g = gcd(a,b) monic, with u*a + v*b = g.
struct PolyXgcd {
  Poly g, u, v;
};
inline PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
  const FieldSpec& f = a.field;
  Poly r0 = a, r1 = b;
  Poly s0(f, {Rat(1)}), s1(f);
  Poly t0(f), t1(f, {Rat(1)});
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_add(s0, poly_scale(poly_mul(q, s1), Rat(-1)));
    Poly t = poly_add(t0, poly_scale(poly_mul(q, t1), Rat(-1)));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
    t0 = t1;
    t1 = t;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat lead_inv = f.inv(r0.c.back());
  return {poly_scale(r0, lead_inv), poly_scale(s0, lead_inv), poly_scale(t0, lead_inv)};
}

namespace detail {

inline std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> ds;
  if (n == 0) return ds;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
  return ds;
}

}  // namespace detail

// All roots of p in the coefficient field, each listed once, deterministic
// order. Over Q this is the rational-root search on the integer-scaled
// polynomial; over GF(p) it is exhaustive.
inline std::vector<Rat> field_roots(const Poly& p) {
  std::vector<Rat> roots;
  if (p.is_zero() || p.degree() == 0) return roots;
  const FieldSpec& f = p.field;
  if (!f.is_rationals()) {
    for (std::uint32_t a = 0; a < f.characteristic(); ++a) {
      Rat x(a);
      if (f.is_zero(p.eval(x))) roots.push_back(x);
    }
    return roots;
  }
  // clear denominators
  BigInt lcm = 1;
  for (const auto& c : p.c) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<BigInt> ic;
  ic.reserve(p.c.size());
  for (const auto& c : p.c) ic.push_back(numerator(Rat(c * lcm)));
  // strip trailing zero coefficients: root 0
  std::size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low + 1 >= ic.size()) return roots;
  BigInt a0 = ic[low], an = ic.back();
  auto ps = detail::divisors(a0);
  auto qs = detail::divisors(an);
  std::sort(ps.begin(), ps.end());
  std::sort(qs.begin(), qs.end());
  for (const auto& num : ps)
    for (const auto& den : qs) {
      if (boost::multiprecision::gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        Rat cand(sign * num, den);
        if (f.is_zero(p.eval(cand))) roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace reckon
