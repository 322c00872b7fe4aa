#include "nsg/field.hpp"

namespace nsg {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(unsigned long p) {
  if (!is_prime(p)) throw ParseError("field characteristic " + std::to_string(p) + " is not prime");
  FieldSpec s;
  s.kind = Kind::prime;
  s.p = p;
  return s;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    try {
      return prime(std::stoul(text.substr(3)));
    } catch (const std::invalid_argument&) {
      throw ParseError("cannot parse field spec '" + text + "'");
    }
  }
  throw ParseError("cannot parse field spec '" + text + "' (expected q or fp:<p>)");
}

std::string FieldSpec::str() const {
  return kind == Kind::rationals ? "q" : "fp:" + std::to_string(p);
}

FieldFp::FieldFp(unsigned long prime) : p(prime) {
  if (!is_prime(p)) throw Error("FieldFp needs a prime modulus");
  if (p >= (1ul << 31)) throw Error("FieldFp modulus too large");
}

FieldFp::Elem FieldFp::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in F_p");
  // extended Euclid
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error("element not invertible in F_p");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<Elem>(t);
}

FieldFp::Elem FieldFp::from_rational(const Rational& q) const {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = num % pz;
  if (n < 0) n += pz;
  mpz_class d = den % pz;
  if (d < 0) d += pz;
  if (d == 0) throw Error("rational has zero denominator mod p");
  Elem nn = static_cast<Elem>(n.get_ui());
  Elem dd = static_cast<Elem>(d.get_ui());
  return mul(nn, inv(dd));
}

}  // namespace nsg
