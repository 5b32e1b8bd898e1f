// Z[q]-linear combinations of formal unit-modulus unknowns nu_x.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "springer/int_polynomial.hpp"

namespace springer {

// A formal unknown root of unity, identified by its CHEVIE unipotent-character
// number. Carries no numeric value; the contradiction test only uses |nu| = 1.
struct UnitSymbol {
  unsigned id = 0;
  friend bool operator<(UnitSymbol a, UnitSymbol b) { return a.id < b.id; }
  friend bool operator==(UnitSymbol a, UnitSymbol b) { return a.id == b.id; }
  std::string to_string() const { return "nu_" + std::to_string(id); }
};

class SymbolicCombination {
 public:
  SymbolicCombination() = default;

  void add(UnitSymbol s, const IntPolynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.emplace(s, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<UnitSymbol, IntPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SymbolicCombination& operator+=(const SymbolicCombination& o) {
    for (const auto& [s, p] : o.terms_) add(s, p);
    return *this;
  }
  friend SymbolicCombination operator*(const IntPolynomial& c, const SymbolicCombination& v) {
    SymbolicCombination out;
    for (const auto& [s, p] : v.terms_) out.add(s, c * p);
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, p] : terms_) {
      std::string ps = p.to_string();
      if (!out.empty()) {
        if (ps[0] == '-') {
          out += " - ";
          ps = ps.substr(1);
        } else {
          out += " + ";
        }
      }
      bool needs_parens = ps.find('+') != std::string::npos || ps.find('-') != std::string::npos;
      out += needs_parens ? "(" + ps + ")*" + s.to_string() : ps + "*" + s.to_string();
    }
    return out;
  }

 private:
  std::map<UnitSymbol, IntPolynomial> terms_;
};

// Regroups a combination by monomial q-degree: each monomial of each stored
// polynomial is split into its own (symbol, coefficient) entry.
inline std::map<unsigned, std::vector<std::pair<UnitSymbol, Integer>>> symbolic_collect(
    const SymbolicCombination& c) {
  std::map<unsigned, std::vector<std::pair<UnitSymbol, Integer>>> out;
  for (const auto& [s, p] : c.terms())
    for (const auto& [e, coeff] : p.terms()) out[e].emplace_back(s, coeff);
  return out;
}

}  // namespace springer
