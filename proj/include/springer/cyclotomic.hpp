// Exact arithmetic in cyclotomic fields Q(zeta_N), power-basis representation.
#pragma once

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace springer {

using Rational = mpq_class;

namespace detail {

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Coefficients of the N-th cyclotomic polynomial, ascending degree.
inline const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, std::vector<mpz_class>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by prod of Phi_d over proper divisors d of n
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& phid = cyclotomic_polynomial(d);
    // exact division p /= phid
    std::vector<mpz_class> quot(p.size() - phid.size() + 1, 0);
    std::vector<mpz_class> rem = p;
    for (size_t k = quot.size(); k-- > 0;) {
      mpz_class c = rem[k + phid.size() - 1];  // leading of phid is 1
      quot[k] = c;
      if (c != 0)
        for (size_t j = 0; j < phid.size(); ++j) rem[k + j] -= c * phid[j];
    }
    for (const auto& r : rem)
      if (r != 0) throw std::logic_error("cyclotomic division not exact");
    p = std::move(quot);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace detail

// An element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1},
// reduced modulo the N-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coords_(1, 0) {}
  Cyclotomic(long v) : conductor_(1), coords_(1, Rational(v)) {}    // NOLINT
  Cyclotomic(const Rational& v) : conductor_(1), coords_(1, v) {}   // NOLINT

  // zeta_N^k
  static Cyclotomic zeta(unsigned n, unsigned k = 1) {
    Cyclotomic z;
    z.conductor_ = n;
    z.coords_.assign(detail::euler_phi(n), 0);
    std::vector<Rational> raw(k % n + 1, 0);
    raw[k % n] = 1;
    z.coords_ = reduce(raw, n);
    return z;
  }

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }
  Rational rational_value() const {
    if (!is_rational()) throw std::logic_error("not a rational value");
    return coords_[0];
  }

  Cyclotomic lift(unsigned m) const {
    if (m % conductor_ != 0) throw std::invalid_argument("lift: conductor must divide target");
    if (m == conductor_) return *this;
    unsigned stride = m / conductor_;
    std::vector<Rational> raw((coords_.size() - 1) * stride + 1, 0);
    for (size_t i = 0; i < coords_.size(); ++i) raw[i * stride] = coords_[i];
    Cyclotomic out;
    out.conductor_ = m;
    out.coords_ = reduce(raw, m);
    return out;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.lift(m), y = b.lift(m);
    for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.lift(m), y = b.lift(m);
    std::vector<Rational> raw(x.coords_.size() + y.coords_.size() - 1, 0);
    for (size_t i = 0; i < x.coords_.size(); ++i) {
      if (x.coords_[i] == 0) continue;
      for (size_t j = 0; j < y.coords_.size(); ++j) raw[i + j] += x.coords_[i] * y.coords_[j];
    }
    Cyclotomic out;
    out.conductor_ = m;
    out.coords_ = reduce(raw, m);
    return out;
  }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  // Complex conjugation: zeta -> zeta^{N-1}.
  Cyclotomic conj() const {
    std::vector<Rational> raw((coords_.size() - 1) * (conductor_ - 1) + 1, 0);
    if (conductor_ == 1) return *this;
    for (size_t i = 0; i < coords_.size(); ++i) raw[i * (conductor_ - 1)] += coords_[i];
    Cyclotomic out;
    out.conductor_ = conductor_;
    out.coords_ = reduce(raw, conductor_);
    return out;
  }

  Cyclotomic abs_squared() const { return *this * conj(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = std::lcm(a.conductor_, b.conductor_);
    return a.lift(m).coords_ == b.lift(m).coords_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Division by a nonzero rational.
  Cyclotomic operator/(const Rational& d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    Cyclotomic out = *this;
    for (auto& c : out.coords_) c /= d;
    return out;
  }

  std::string to_string() const {
    if (is_rational()) {
      return coords_[0].get_str();
    }
    std::string out;
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      std::string term;
      Rational a = coords_[i];
      if (i == 0) {
        term = a.get_str();
      } else {
        if (a == -1)
          term = "-";
        else if (a != 1)
          term = a.get_str() + "*";
        term += "z" + std::to_string(conductor_);
        if (i > 1) term += "^" + std::to_string(i);
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  static std::vector<Rational> reduce(std::vector<Rational> raw, unsigned n) {
    const auto& phi = detail::cyclotomic_polynomial(n);
    size_t deg = phi.size() - 1;  // = euler_phi(n)
    for (size_t k = raw.size(); k-- > deg;) {
      Rational c = raw[k];
      if (c == 0) continue;
      raw[k] = 0;
      for (size_t j = 0; j < deg; ++j) raw[k - deg + j] -= c * Rational(phi[j]);
    }
    raw.resize(deg, 0);
    // pad if shorter
    while (raw.size() < deg) raw.emplace_back(0);
    return raw;
  }

  unsigned conductor_;
  std::vector<Rational> coords_;
};

enum class CycloOp { add, mul, conj };

inline Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, CycloOp op) {
  switch (op) {
    case CycloOp::add: return a + b;
    case CycloOp::mul: return a * b;
    case CycloOp::conj: return a.conj();
  }
  throw std::logic_error("bad op");
}

}  // namespace springer
