#pragma once

// Exact symbolic normal ordering of ladder-operator polynomials.
//
// An OperatorPoly stores a normal-ordered expansion sum c_{pq} a^dag^p a^q with
// exact rational coefficients.  normal_order_power produces the closed-form
// expansion (a^dag + a)^m = sum over even r of t_r C(m,r) :(a^dag+a)^{m-r}:
// with t_r = r!/(2^{r/2} (r/2)!) = (r-1)!!, and brute_force_normal_order
// re-derives the same map from nothing but [a, a^dag] = 1, serving as an
// independent oracle.

#include "aho/fock.hpp"
#include "aho/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace aho {

// t_r = r!/(2^{r/2}(r/2)!) = (r-1)!! for even r.
inline Int t_coeff(long r) {
  if (r < 0 || r % 2 != 0) throw std::domain_error("t_coeff: r must be even and >= 0");
  return factorial(r) / (Int(1) << (r / 2)) / factorial(r / 2);
}

struct OperatorPoly {
  // (a^dag power, a power) -> coefficient; zero coefficients are never stored.
  std::map<std::pair<long, long>, Rat> terms;

  void add(long p, long q, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(p, q);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  OperatorPoly& operator+=(const OperatorPoly& o) {
    for (const auto& [k, v] : o.terms) add(k.first, k.second, v);
    return *this;
  }
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator*(const Rat& s, OperatorPoly p) {
    if (s == 0) return OperatorPoly{};
    for (auto& [k, v] : p.terms) v *= s;
    return p;
  }
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) { return a.terms == b.terms; }
};

// :(a^dag + a)^m: = sum_r C(m,r) a^dag^r a^{m-r} (plain binomial expansion).
inline OperatorPoly colon_power(long m) {
  if (m < 0) throw std::domain_error("colon_power: m must be >= 0");
  OperatorPoly p;
  for (long r = 0; r <= m; ++r) p.add(r, m - r, Rat(binomial(m, r)));
  return p;
}

// (a^dag + a)^m fully normal ordered via the closed-form expansion.
inline OperatorPoly normal_order_power(long m) {
  if (m < 0) throw std::domain_error("normal_order_power: m must be >= 0");
  OperatorPoly p;
  for (long r = 0; r <= m; r += 2) p += Rat(t_coeff(r) * binomial(m, r)) * colon_power(m - r);
  return p;
}

// Same map obtained by repeated right-multiplication with (a^dag + a), using
// only a^q a^dag = a^dag a^q + q a^{q-1}.  Independent of the closed form.
inline OperatorPoly brute_force_normal_order(long m) {
  if (m < 0) throw std::domain_error("brute_force_normal_order: m must be >= 0");
  if (m > 16) throw std::invalid_argument("brute_force_normal_order: m > 16 exceeds cost guard");
  OperatorPoly p;
  p.add(0, 0, Rat(1));
  for (long step = 0; step < m; ++step) {
    OperatorPoly next;
    for (const auto& [k, v] : p.terms) {
      const auto [pp, qq] = k;
      next.add(pp, qq + 1, v);          // term * a
      next.add(pp + 1, qq, v);          // commute a^dag through a^qq ...
      if (qq > 0) next.add(pp, qq - 1, Rat(qq) * v); // ... picking up q a^{q-1}
    }
    p = std::move(next);
  }
  return p;
}

// One induction step: :(a^dag+a)^m: (a^dag+a) = :(a^dag+a)^{m+1}: + m :(a^dag+a)^{m-1}:
inline OperatorPoly colon_multiply_step(const OperatorPoly& p, long m) {
  if (!(p == colon_power(m))) throw std::invalid_argument("colon_multiply_step: input is not :(a^dag+a)^m:");
  OperatorPoly out = colon_power(m + 1);
  if (m >= 1) out += Rat(m) * colon_power(m - 1);
  return out;
}

// <n| p |n> exactly; only balanced a^dag^k a^k terms contribute, with
// <n| a^dag^k a^k |n> = n!/(n-k)!.
inline Rat number_expectation(const OperatorPoly& p, long n) {
  if (n < 0) throw std::domain_error("number_expectation: n must be >= 0");
  Rat acc = 0;
  for (const auto& [k, v] : p.terms) {
    if (k.first != k.second) continue;
    if (k.first > n) continue;
    acc += v * Rat(falling_factorial(n, k.first));
  }
  return acc;
}

// Render into a truncated Fock matrix.
inline Mat poly_to_matrix(const OperatorPoly& p, long dim) {
  auto [a, ad] = ladder_ops(dim);
  long max_p = 0, max_q = 0;
  for (const auto& [k, v] : p.terms) {
    max_p = std::max(max_p, k.first);
    max_q = std::max(max_q, k.second);
  }
  std::vector<Mat> apow(max_q + 1), adpow(max_p + 1);
  apow[0] = Mat::Identity(dim, dim);
  for (long q = 1; q <= max_q; ++q) apow[q] = apow[q - 1] * a;
  adpow[0] = Mat::Identity(dim, dim);
  for (long q = 1; q <= max_p; ++q) adpow[q] = adpow[q - 1] * ad;
  Mat out = Mat::Zero(dim, dim);
  for (const auto& [k, v] : p.terms) out += to_double(v) * (adpow[k.first] * apow[k.second]);
  return out;
}

} // namespace aho
