#ifndef NSG_FIELD_HPP
#define NSG_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "nsg/errors.hpp"

namespace nsg {

using Rational = mpq_class;

/// Runtime description of the coefficient field: the rationals or a prime
/// field F_p. Parsed from "q" or "fp:<p>".
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  unsigned long p = 0;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(unsigned long p);
  static FieldSpec parse(const std::string& text);
  std::string str() const;
  bool operator==(const FieldSpec&) const = default;
};

/// Exact rational arithmetic (gmp). Stateless.
struct FieldQ {
  using Elem = Rational;
  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static bool eq(const Elem& a, const Elem& b) { return a == b; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem div(const Elem& a, const Elem& b) {
    if (is_zero(b)) throw Error("division by zero");
    return a / b;
  }
  static Elem from_rational(const Rational& q) { return q; }
  static std::string str(const Elem& a) { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

/// F_p for a prime p < 2^31. Elements are canonical representatives in
/// [0, p).
struct FieldFp {
  unsigned long p;
  using Elem = std::uint64_t;

  explicit FieldFp(unsigned long prime);

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem from_rational(const Rational& q) const;
  std::string str(Elem a) const { return std::to_string(a); }
  FieldSpec spec() const { return FieldSpec::prime(p); }
};

bool is_prime(unsigned long n);

}  // namespace nsg

#endif
