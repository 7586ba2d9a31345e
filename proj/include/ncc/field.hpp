#ifndef NCC_FIELD_HPP
#define NCC_FIELD_HPP

// Exact coefficient fields. A field descriptor is a small value type that owns the
// arithmetic for its element type; matrices and algebras carry one descriptor and
// refuse to mix descriptors.
//
//   RationalField  -- Q with arbitrary-precision numerator/denominator (GMP)
//   PrimeField     -- F_p for a prime p < 2^31, canonical representatives in [0, p)

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "ncc/errors.hpp"

namespace ncc {

class RationalField {
 public:
  using element = mpq_class;

  element zero() const { return element(0); }
  element one() const { return element(1); }
  element from_int(long long v) const {
    element r;
    mpz_set_si(r.get_num_mpz_t(), static_cast<long>(v));
    return r;
  }
  /// Accepts "a", "-a", "a/b".
  element from_string(const std::string& s) const {
    element r;
    if (r.set_str(s, 10) != 0) throw Error("not a rational number: '" + s + "'");
    if (r.get_den() == 0) throw DivisionByZero();
    r.canonicalize();
    return r;
  }
  element from_ratio(long long num, long long den) const {
    if (den == 0) throw DivisionByZero();
    element r(from_int(num));
    r /= from_int(den);
    return r;
  }

  bool is_zero(const element& a) const { return sgn(a) == 0; }
  bool equal(const element& a, const element& b) const { return a == b; }
  element add(const element& a, const element& b) const { return a + b; }
  element sub(const element& a, const element& b) const { return a - b; }
  element mul(const element& a, const element& b) const { return a * b; }
  element neg(const element& a) const { return -a; }
  element inv(const element& a) const {
    if (is_zero(a)) throw DivisionByZero();
    return element(1) / a;
  }
  element div(const element& a, const element& b) const { return mul(a, inv(b)); }
  /// a += b * c
  void fma(element& a, const element& b, const element& c) const { a += b * c; }

  std::string to_string(const element& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  bool operator==(const RationalField&) const = default;
};

class PrimeField {
 public:
  using element = std::uint32_t;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw Error("F_p requires a prime p < 2^31, got " + std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }

  element zero() const { return 0; }
  element one() const { return 1; }
  element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<element>(r);
  }
  element from_string(const std::string& s) const {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (num < 0) num += p_;
    if (den == 0) throw Error("denominator of '" + s + "' vanishes mod " + std::to_string(p_));
    return div(static_cast<element>(num.get_ui()), static_cast<element>(den.get_ui()));
  }
  element from_ratio(long long num, long long den) const {
    return div(from_int(num), from_int(den));
  }

  bool is_zero(element a) const { return a == 0; }
  bool equal(element a, element b) const { return a == b; }
  element add(element a, element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<element>(s >= p_ ? s - p_ : s);
  }
  element sub(element a, element b) const {
    return a >= b ? a - b : static_cast<element>(std::uint64_t{a} + p_ - b);
  }
  element mul(element a, element b) const {
    return static_cast<element>((std::uint64_t{a} * b) % p_);
  }
  element neg(element a) const { return a == 0 ? 0 : p_ - a; }
  element inv(element a) const {
    if (a == 0) throw DivisionByZero();
    return pow(a, p_ - 2);
  }
  element div(element a, element b) const { return mul(a, inv(b)); }
  void fma(element& a, element b, element c) const { a = add(a, mul(b, c)); }

  std::string to_string(element a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  element pow(element base, std::uint32_t e) const {
    std::uint64_t r = 1, b = base;
    while (e) {
      if (e & 1) r = (r * b) % p_;
      b = (b * b) % p_;
      e >>= 1;
    }
    return static_cast<element>(r);
  }
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

template <class K>
concept Field = requires(const K& k, const typename K::element& a) {
  { k.zero() } -> std::same_as<typename K::element>;
  { k.one() } -> std::same_as<typename K::element>;
  { k.add(a, a) } -> std::same_as<typename K::element>;
  { k.mul(a, a) } -> std::same_as<typename K::element>;
  { k.inv(a) } -> std::same_as<typename K::element>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.name() } -> std::same_as<std::string>;
};

}  // namespace ncc

#endif  // NCC_FIELD_HPP
