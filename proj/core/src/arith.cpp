#include "s4e/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace s4e {

Int mod(const Int &a, const Int &m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int fdiv(const Int &a, const Int &b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int inv_mod(const Int &a, const Int &m) {
  Int r;
  if (m == 1)
    return 0;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw std::domain_error("inv_mod: " + a.get_str() + " is not a unit mod " +
                            m.get_str());
  return r;
}

Int gcd(const Int &a, const Int &b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int &a, const Int &b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int pow(const Int &b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

std::tuple<Int, Int, Int> ext_gcd(const Int &a, const Int &b) {
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return {g, x, y};
}

bool is_prime(const Int &n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

Int pollard_rho(const Int &n) {
  if (mpz_even_p(n.get_mpz_t()))
    return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int &v) { return mod(v * v + c, n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = x - y;
      d = gcd(abs(diff), n);
    }
    if (d != n)
      return d;
  }
}

void factor_into(Int n, std::vector<Int> &out) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<Int, int>> factor(const Int &n0) {
  if (n0 == 0)
    throw std::domain_error("factor: zero");
  Int n = abs(n0);
  std::vector<Int> primes;
  for (unsigned long p = 2; p < 10000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, int>> res;
  for (auto &p : primes) {
    if (!res.empty() && res.back().first == p)
      ++res.back().second;
    else
      res.emplace_back(p, 1);
  }
  return res;
}

std::vector<Int> prime_divisors(const Int &n) {
  std::vector<Int> r;
  for (auto &[p, e] : factor(n))
    r.push_back(p);
  return r;
}

int valuation(const Int &n, const Int &p) {
  if (n == 0)
    throw std::domain_error("valuation of zero is undefined");
  Int m = abs(n);
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rat &q, const Int &p) {
  if (q == 0)
    throw std::domain_error("valuation of zero is undefined");
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Int p_part(const Int &n, const Int &p) {
  if (n == 0)
    return 0;
  return pow(p, valuation(n, p));
}

int legendre(const Int &a, const Int &p) {
  return mpz_legendre(mod(a, p).get_mpz_t(), p.get_mpz_t());
}

Rat make_rat(const Int &num, const Int &den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat &q) { return q.get_str(); }
std::string to_string(const Int &n) { return n.get_str(); }

Rat ResidueQZ::reduce(const Rat &q) {
  Rat r(q);
  r.canonicalize();
  Int fl = fdiv(r.get_num(), r.get_den());
  r -= fl;
  r.canonicalize();
  return r;
}

ResidueQZ ResidueQZ::p_component(const Int &p) const {
  Int b = v_.get_den();
  int v = valuation(b, p);
  if (v == 0)
    return ResidueQZ();
  Int pv = pow(p, v);
  Int u = b / pv;
  Int x = mod(v_.get_num() * inv_mod(u, pv), pv);
  return ResidueQZ(make_rat(x, pv));
}

std::ostream &operator<<(std::ostream &os, const ResidueQZ &r) {
  return os << r.value().get_str();
}

std::string to_string(const ResidueQZ &r) { return r.value().get_str(); }

} // namespace s4e
