// Exact coefficient fields: the rationals and prime fields GF(p).
//
// Every scalar in the engine is a boost cpp_rational kept in canonical form
// for its field: ordinary reduced fractions over Q, or integer residues in
// [0, p) with denominator 1 over GF(p). All arithmetic is exact; there is no
// floating point anywhere in the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace reckon {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

  // p must be prime and < 2^16; inverses are tabulated once per field value.
  static FieldSpec gf(std::uint32_t p) {
    if (p < 2 || p >= (1u << 16) || !is_prime(p))
      throw std::invalid_argument("FieldSpec::gf: p must be a prime < 2^16, got " +
                                  std::to_string(p));
    FieldSpec f(Kind::prime_field, p);
    auto table = std::make_shared<std::vector<std::uint32_t>>(p, 0u);
    for (std::uint32_t a = 1; a < p; ++a) (*table)[a] = mod_inverse(a, p);
    f.inv_table_ = std::move(table);
    return f;
  }

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  // Canonical representative of an arbitrary rational in this field.
  Rat norm(const Rat& x) const {
    if (kind_ == Kind::rationals) return x;
    BigInt num = numerator(x) % p_;
    if (num < 0) num += p_;
    BigInt den = denominator(x) % p_;
    std::uint32_t d = static_cast<std::uint32_t>(den);
    if (d == 0) throw std::domain_error("FieldSpec::norm: denominator divisible by p");
    if (d != 1) num = (num * (*inv_table_)[d]) % p_;
    return Rat(num);
  }

  Rat add(const Rat& a, const Rat& b) const {
    return kind_ == Kind::rationals ? Rat(a + b) : norm(Rat(numerator(a) + numerator(b)));
  }
  Rat sub(const Rat& a, const Rat& b) const {
    return kind_ == Kind::rationals ? Rat(a - b) : norm(Rat(numerator(a) - numerator(b)));
  }
  Rat mul(const Rat& a, const Rat& b) const {
    return kind_ == Kind::rationals ? Rat(a * b) : norm(Rat(numerator(a) * numerator(b)));
  }
  Rat neg(const Rat& a) const {
    return kind_ == Kind::rationals ? Rat(-a) : norm(Rat(-numerator(a)));
  }
  Rat inv(const Rat& a) const {
    if (is_zero(a)) throw std::domain_error("FieldSpec::inv: division by zero");
    if (kind_ == Kind::rationals) return Rat(1) / a;
    std::uint32_t v = static_cast<std::uint32_t>(numerator(a));
    return Rat((*inv_table_)[v]);
  }
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

  bool is_zero(const Rat& a) const { return numerator(a) == 0; }
  bool is_one(const Rat& a) const { return a == 1; }

  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }

  std::string name() const {
    return kind_ == Kind::rationals ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
  }

 private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
  }

  Kind kind_;
  std::uint32_t p_;
  std::shared_ptr<const std::vector<std::uint32_t>> inv_table_;
};

// Parses "a", "-a" or "a/b" into a field scalar.
inline Rat parse_scalar(const FieldSpec& f, const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return f.norm(Rat(BigInt(s)));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return f.norm(Rat(num, den));
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_scalar: bad scalar '" + s + "'");
  }
}

inline std::string scalar_to_string(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

}  // namespace reckon
