#pragma once

// Exact big-integer/rational arithmetic helpers and a small polynomial type.
// All symbolic manipulation in the library is done over these; doubles appear
// only at evaluation boundaries.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace aho {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }
inline double to_double(const Int& i) { return i.template convert_to<double>(); }

inline Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

// Generalized binomial coefficient for integer upper argument (may be
// negative): C(n,k) = n(n-1)...(n-k+1)/k!, which is always an integer.
inline Int binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Int num = 1;
  for (long i = 0; i < k; ++i) num *= (n - i);
  return num / factorial(k);
}

// Falling factorial n(n-1)...(n-k+1).
inline Int falling_factorial(long n, long k) {
  Int p = 1;
  for (long i = 0; i < k; ++i) p *= (n - i);
  return p;
}

// Polynomial with exact rational coefficients, ascending powers.
struct Polynomial {
  std::vector<Rat> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rat& v) { return Polynomial({v}); }
  static Polynomial x() { return Polynomial({Rat(0), Rat(1)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  long degree() const { return static_cast<long>(c.size()) - 1; } // -1 for zero poly
  Rat coeff(std::size_t k) const { return k < c.size() ? c[k] : Rat(0); }

  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  double eval(double x) const {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c.empty() || b.c.empty()) return Polynomial();
    std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Rat& s, Polynomial p) {
    for (auto& v : p.c) v *= s;
    p.trim();
    return p;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c == b.c; }

  // P(x + s)
  Polynomial shift(const Rat& s) const {
    Polynomial out;
    Polynomial pw = constant(1);
    Polynomial lin({s, Rat(1)});
    for (std::size_t k = 0; k < c.size(); ++k) {
      out += c[k] * pw;
      pw = pw * lin;
    }
    return out;
  }

  Polynomial derivative() const {
    if (c.size() <= 1) return Polynomial();
    std::vector<Rat> r(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) r[k - 1] = c[k] * Rat(static_cast<long>(k));
    return Polynomial(std::move(r));
  }
};

// Reciprocal of a power series (a[0] != 0), to `len` coefficients.
inline std::vector<Rat> invert_series(const std::vector<Rat>& a, std::size_t len) {
  if (a.empty() || a[0] == 0) throw std::domain_error("invert_series: zero constant term");
  std::vector<Rat> b(len, Rat(0));
  b[0] = Rat(1) / a[0];
  for (std::size_t n = 1; n < len; ++n) {
    Rat s = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (k < a.size()) s += a[k] * b[n - k];
    b[n] = -s / a[0];
  }
  return b;
}

} // namespace aho
