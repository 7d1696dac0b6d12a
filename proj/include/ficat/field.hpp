#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ficat {

using Rational = boost::multiprecision::mpq_rational;

// Exact coefficient field: Q when p == 0, else F_p.
struct CoefField {
  std::uint32_t p = 0;

  static CoefField rationals() { return {}; }
  // Throws PreconditionError unless p is a prime below 2^16.
  static CoefField prime(std::uint32_t p);
  // "Q", "F2", "F_2", "GF(2)".
  static CoefField parse(const std::string& s);

  bool is_rational() const { return p == 0; }
  std::string name() const;
  // Canonical representative: x itself over Q, an integer in [0, p) over F_p.
  Rational reduce(const Rational& x) const;

  friend bool operator==(const CoefField&, const CoefField&) = default;
};

// Arithmetic policies for the elimination templates.
struct FpOps {
  using E = std::uint32_t;
  std::uint32_t p;
  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(E a) const { return a == 0; }
  E add(E a, E b) const { return (a + b) % p; }
  E sub(E a, E b) const { return (a + p - b) % p; }
  E neg(E a) const { return a ? p - a : 0; }
  E mul(E a, E b) const { return static_cast<E>(static_cast<std::uint64_t>(a) * b % p); }
  E inv(E a) const;
  E from_int(long long v) const { return static_cast<E>(((v % static_cast<long long>(p)) + p) % p); }
  E from_rational(const Rational& r) const;
  Rational to_rational(E a) const { return Rational(a); }
};

struct QOps {
  using E = Rational;
  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(const E& a) const { return a == 0; }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E neg(const E& a) const { return -a; }
  E mul(const E& a, const E& b) const { return a * b; }
  E inv(const E& a) const { return 1 / a; }
  E from_int(long long v) const { return E(v); }
  E from_rational(const Rational& r) const { return r; }
  Rational to_rational(const E& a) const { return a; }
};

// Rational-valued arithmetic reduced into the given field; slower but uniform.
struct KOps {
  using E = Rational;
  CoefField k;
  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(const E& a) const { return a == 0; }
  E add(const E& a, const E& b) const { return k.reduce(a + b); }
  E sub(const E& a, const E& b) const { return k.reduce(a - b); }
  E neg(const E& a) const { return k.reduce(-a); }
  E mul(const E& a, const E& b) const { return k.reduce(a * b); }
  E inv(const E& a) const;
  E from_int(long long v) const { return k.reduce(Rational(v)); }
  E from_rational(const Rational& r) const { return k.reduce(r); }
  Rational to_rational(const E& a) const { return a; }
};

template <class Fn>
decltype(auto) with_field(const CoefField& k, Fn&& fn) {
  if (k.p) return fn(FpOps{k.p});
  return fn(QOps{});
}

}  // namespace ficat
