// Sparse integer polynomials in the indeterminate q, exact arithmetic via GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace springer {

using Integer = mpz_class;

// A polynomial in q with arbitrary-precision integer coefficients, stored as a
// sparse exponent -> coefficient map. Zero coefficients are never stored; the
// zero polynomial is the empty map.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c) { set_coeff(0, Integer(c)); }          // NOLINT(google-explicit-constructor)
  IntPolynomial(const Integer& c) { set_coeff(0, c); }         // NOLINT(google-explicit-constructor)

  static IntPolynomial monomial(unsigned exp, Integer coeff = 1) {
    IntPolynomial p;
    p.set_coeff(exp, std::move(coeff));
    return p;
  }
  static IntPolynomial q(unsigned exp = 1) { return monomial(exp); }

  const std::map<unsigned, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // degree of the zero polynomial is undefined; callers must check is_zero()
  unsigned degree() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    return terms_.rbegin()->first;
  }
  Integer coeff(unsigned exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  void set_coeff(unsigned exp, Integer c) {
    if (c == 0)
      terms_.erase(exp);
    else
      terms_[exp] = std::move(c);
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }
  IntPolynomial operator-() const {
    IntPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
    return a.terms_ < b.terms_;
  }

  void add_term(unsigned exp, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Exact Horner evaluation at an integer point.
  Integer eval(const Integer& v) const {
    Integer acc = 0;
    unsigned prev = 0;
    bool first = true;
    // iterate descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (first) {
        acc = it->second;
        prev = it->first;
        first = false;
        continue;
      }
      for (unsigned k = it->first; k < prev; ++k) acc *= v;
      acc += it->second;
      prev = it->first;
    }
    for (unsigned k = 0; k < prev; ++k) acc *= v;
    return acc;
  }

  // q -> q^{-1} twisted by q^shift: returns q^shift * p(1/q); shift must cover the degree.
  IntPolynomial reverse(unsigned shift) const {
    IntPolynomial out;
    for (const auto& [e, c] : terms_) {
      if (e > shift) throw std::invalid_argument("reverse: shift smaller than degree");
      out.terms_[shift - e] = c;
    }
    return out;
  }

  // Canonical text form, descending degree: "q^14", "-q^11", "q^8+q^4", "3q^2-q+7", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Integer abs = c < 0 ? Integer(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? "-" : "+";
      }
      if (e == 0) {
        out += abs.get_str();
      } else {
        if (abs != 1) out += abs.get_str();
        out += "q";
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  // Parses the polynomial grammar:
  //   poly := term (('+'|'-') term)* ; term := coeff? 'q' ('^' uint)? | coeff ; coeff := uint ;
  // leading '-' allowed, whitespace ignored. Throws std::invalid_argument on bad input.
  static IntPolynomial parse(const std::string& text) {
    IntPolynomial out;
    size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip();
    if (i == text.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
        skip();
      } else if (!first) {
        break;
      }
      // term
      std::string digits;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
      skip();
      Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
      unsigned exp = 0;
      if (i < text.size() && text[i] == 'q') {
        ++i;
        exp = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          std::string ed;
          while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
          if (ed.empty()) throw std::invalid_argument("expected exponent after '^'");
          unsigned long v = std::stoul(ed);
          exp = static_cast<unsigned>(v);
        }
      } else if (digits.empty()) {
        throw std::invalid_argument("expected term at position " + std::to_string(i));
      }
      out.add_term(exp, sign < 0 ? Integer(-coeff) : coeff);
      first = false;
      skip();
      if (i == text.size()) break;
      if (text[i] != '+' && text[i] != '-')
        throw std::invalid_argument("unexpected character '" + std::string(1, text[i]) + "'");
    }
    if (i != text.size()) throw std::invalid_argument("trailing garbage in polynomial");
    return out;
  }

 private:
  std::map<unsigned, Integer> terms_;
};

inline IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
  return IntPolynomial(c) * p;
}

enum class PolyOp { add, sub, mul };

inline IntPolynomial poly_arith(const IntPolynomial& a, const IntPolynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::logic_error("bad op");
}

inline Integer poly_eval(const IntPolynomial& a, const Integer& v) { return a.eval(v); }

}  // namespace springer
