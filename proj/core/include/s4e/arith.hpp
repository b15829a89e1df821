#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace s4e {

using Int = mpz_class;
using Rat = mpq_class;

// Non-negative residue of a modulo |m|.
Int mod(const Int &a, const Int &m);
// Floor division.
Int fdiv(const Int &a, const Int &b);
// Inverse of a modulo m; throws if not a unit.
Int inv_mod(const Int &a, const Int &m);
Int gcd(const Int &a, const Int &b);
Int lcm(const Int &a, const Int &b);
Int pow(const Int &b, unsigned long e);
// (g, x, y) with a*x + b*y = g = gcd(a,b) >= 0.
std::tuple<Int, Int, Int> ext_gcd(const Int &a, const Int &b);

bool is_prime(const Int &n);
// Prime factorization of |n| (n != 0) with multiplicities, primes ascending.
std::vector<std::pair<Int, int>> factor(const Int &n);
std::vector<Int> prime_divisors(const Int &n);

// n = p^v * u with u a p-unit. Throws std::domain_error on zero.
int valuation(const Int &n, const Int &p);
int valuation(const Rat &q, const Int &p);
// The largest power of p dividing n.
Int p_part(const Int &n, const Int &p);

// Legendre symbol (a/p) for odd prime p, a coprime to p.
int legendre(const Int &a, const Int &p);

Rat make_rat(const Int &num, const Int &den);
std::string to_string(const Rat &q);
std::string to_string(const Int &n);

// Element of Q/Z, stored as the representative in [0,1).
class ResidueQZ {
public:
  ResidueQZ() = default;
  ResidueQZ(const Rat &q) : v_(reduce(q)) {}
  ResidueQZ(long num, long den) : v_(reduce(make_rat(num, den))) {}

  const Rat &value() const { return v_; }
  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }

  ResidueQZ operator+(const ResidueQZ &o) const { return ResidueQZ(v_ + o.v_); }
  ResidueQZ operator-(const ResidueQZ &o) const { return ResidueQZ(v_ - o.v_); }
  ResidueQZ operator-() const { return ResidueQZ(-v_); }
  ResidueQZ operator*(const Int &k) const { return ResidueQZ(Rat(v_ * k)); }
  ResidueQZ &operator+=(const ResidueQZ &o) { return *this = *this + o; }
  bool operator==(const ResidueQZ &o) const { return v_ == o.v_; }
  bool operator<(const ResidueQZ &o) const { return v_ < o.v_; }

  // p-primary component of the residue.
  ResidueQZ p_component(const Int &p) const;

private:
  static Rat reduce(const Rat &q);
  Rat v_{0};
};

std::ostream &operator<<(std::ostream &os, const ResidueQZ &r);
std::string to_string(const ResidueQZ &r);

} // namespace s4e
