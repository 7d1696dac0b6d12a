#include "ficat/field.hpp"

#include <regex>

#include "ficat/error.hpp"

namespace ficat {

CoefField CoefField::prime(std::uint32_t p) {
  if (p < 2 || p >= 65536) throw PreconditionError("bad_field", "prime field characteristic out of range");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw PreconditionError("bad_field", std::to_string(p) + " is not prime");
  return CoefField{p};
}

CoefField CoefField::parse(const std::string& s) {
  if (s == "Q" || s == "QQ") return rationals();
  static const std::regex re(R"((?:F_?|GF\()(\d+)\)?)");
  std::smatch m;
  if (std::regex_match(s, m, re)) return prime(static_cast<std::uint32_t>(std::stoul(m[1])));
  throw PreconditionError("bad_field", "unknown coefficient field '" + s + "'");
}

std::string CoefField::name() const { return p ? "F" + std::to_string(p) : "Q"; }

Rational CoefField::reduce(const Rational& x) const {
  if (!p) return x;
  using boost::multiprecision::mpz_int;
  mpz_int num = boost::multiprecision::numerator(x), den = boost::multiprecision::denominator(x);
  mpz_int P = p;
  mpz_int d = den % P;
  if (d == 0) throw PreconditionError("bad_coefficient", "denominator divisible by the characteristic");
  std::uint32_t di = static_cast<std::uint32_t>(d);
  std::uint32_t inv = FpOps{p}.inv(di);
  mpz_int n = num % P;
  if (n < 0) n += P;
  return Rational(mpz_int(n * inv % P));
}

FpOps::E FpOps::inv(E a) const {
  if (a % p == 0) throw PreconditionError("division_by_zero", "inverse of zero in F_p");
  E result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FpOps::E FpOps::from_rational(const Rational& r) const {
  return static_cast<E>(CoefField{p}.reduce(r).convert_to<long long>());
}

KOps::E KOps::inv(const E& a) const {
  if (a == 0) throw PreconditionError("division_by_zero", "inverse of zero");
  return k.reduce(1 / a);
}

}  // namespace ficat
