// Root systems from Cartan data and Weyl groups acting as permutations of roots.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace springer {

struct CartanDatum {
  std::string type_label;
  std::vector<std::vector<int>> matrix;  // matrix[i][j] = <alpha_j, alpha_i^vee>
  unsigned rank() const { return static_cast<unsigned>(matrix.size()); }

  void validate() const {
    unsigned n = rank();
    if (n == 0) throw std::invalid_argument("empty Cartan matrix");
    for (unsigned i = 0; i < n; ++i) {
      if (matrix[i].size() != n) throw std::invalid_argument("non-square Cartan matrix");
      if (matrix[i][i] != 2) throw std::invalid_argument("Cartan diagonal entry != 2");
      for (unsigned j = 0; j < n; ++j) {
        if (i != j && matrix[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
        if (i != j && ((matrix[i][j] == 0) != (matrix[j][i] == 0)))
          throw std::invalid_argument("asymmetric zero pattern in Cartan matrix");
      }
    }
  }

  static CartanDatum chain(const std::string& label, unsigned n) {  // A_n
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (unsigned i = 0; i < n; ++i) {
      m[i][i] = 2;
      if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
    }
    return {label, m};
  }
  static CartanDatum A(unsigned n) { return chain("A" + std::to_string(n), n); }
  static CartanDatum B(unsigned n) {
    auto d = chain("B" + std::to_string(n), n);
    // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
    d.matrix[n - 1][n - 2] = -2;
    return d;
  }
  static CartanDatum C(unsigned n) {
    auto d = chain("C" + std::to_string(n), n);
    d.matrix[n - 2][n - 1] = -2;
    return d;
  }
  static CartanDatum D(unsigned n) {
    auto d = chain("D" + std::to_string(n), n);
    for (unsigned k = 0; k < n; ++k) d.matrix[n - 1][k] = d.matrix[k][n - 1] = 0;
    d.matrix[n - 1][n - 1] = 2;
    d.matrix[n - 1][n - 3] = d.matrix[n - 3][n - 1] = -1;
    return d;
  }
  // alpha_1 short, alpha_2 long
  static CartanDatum G2() { return {"G2", {{2, -3}, {-1, 2}}}; }
  static CartanDatum F4() {
    return {"F4", {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}};
  }
  // E-series in the numbering of the E8 diagram: 1-3-4-5-6-7-8 chain, 2 joined to 4.
  static CartanDatum E(unsigned n) {
    if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (unsigned i = 0; i < n; ++i) m[i][i] = 2;
    auto join = [&](unsigned a, unsigned b) { m[a - 1][b - 1] = m[b - 1][a - 1] = -1; };
    join(1, 3);
    join(3, 4);
    join(2, 4);
    join(4, 5);
    if (n >= 6) join(5, 6);
    if (n >= 7) join(6, 7);
    if (n >= 8) join(7, 8);
    return {"E" + std::to_string(n), m};
  }

  static CartanDatum from_label(const std::string& label) {
    if (label == "G2") return G2();
    if (label == "F4") return F4();
    if (label == "E6") return E(6);
    if (label == "E7") return E(7);
    if (label == "E8") return E(8);
    if (label.size() >= 2 && (label[0] == 'A' || label[0] == 'B' || label[0] == 'C' || label[0] == 'D')) {
      unsigned n = static_cast<unsigned>(std::stoul(label.substr(1)));
      if (n == 0) throw std::invalid_argument("rank 0");
      switch (label[0]) {
        case 'A': return A(n);
        case 'B': return n >= 2 ? B(n) : A(1);
        case 'C': return n >= 3 ? C(n) : (n == 2 ? B(2) : A(1));
        case 'D': return n >= 3 ? D(n) : A(1);
      }
    }
    throw std::invalid_argument("unknown Cartan type '" + label + "'");
  }
};

class RootSystem;

// A Weyl group element stored as the permutation it induces on the root list.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> perm, unsigned len) : perm_(std::move(perm)), length_(len) {}

  const std::vector<int>& perm() const { return perm_; }
  unsigned length() const { return length_; }
  int apply(int root_index) const { return perm_[root_index]; }
  bool is_identity() const {
    for (size_t i = 0; i < perm_.size(); ++i)
      if (perm_[i] != static_cast<int>(i)) return false;
    return true;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.perm_ < b.perm_; }

 private:
  friend class RootSystem;
  std::vector<int> perm_;
  unsigned length_ = 0;
};

class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
    datum_.validate();
    build();
  }

  const CartanDatum& datum() const { return datum_; }
  unsigned rank() const { return datum_.rank(); }
  const std::vector<std::vector<int>>& roots() const { return roots_; }
  unsigned positive_count() const { return npos_; }
  size_t root_count() const { return roots_.size(); }
  int root_index(const std::vector<int>& coords) const {
    auto it = index_.find(coords);
    if (it == index_.end()) throw std::invalid_argument("not a root");
    return it->second;
  }
  bool is_positive(int idx) const { return idx < static_cast<int>(npos_); }
  int negate_root(int idx) const {
    return idx < static_cast<int>(npos_) ? idx + static_cast<int>(npos_) : idx - static_cast<int>(npos_);
  }
  int simple_root_index(unsigned s) const { return simple_index_[s]; }
  // <root, alpha_s^vee>
  int pairing(int root_idx, unsigned s) const { return pairing_[s][root_idx]; }
  const std::vector<int>& simple_reflection_table(unsigned s) const { return refl_[s]; }

  WeylElement identity() const {
    std::vector<int> p(roots_.size());
    std::iota(p.begin(), p.end(), 0);
    return WeylElement(std::move(p), 0);
  }
  WeylElement simple_reflection(unsigned s) const {
    check_simple(s);
    return WeylElement(refl_[s], 1);
  }

  // (a*b)(x) = a(b(x))
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const {
    std::vector<int> p(roots_.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = a.perm_[b.perm_[i]];
    WeylElement w(std::move(p), 0);
    w.length_ = compute_length(w.perm_);
    return w;
  }
  WeylElement inverse(const WeylElement& a) const {
    std::vector<int> p(roots_.size());
    for (size_t i = 0; i < p.size(); ++i) p[a.perm_[i]] = static_cast<int>(i);
    return WeylElement(std::move(p), a.length_);
  }

  WeylElement element_from_word(const std::vector<unsigned>& word) const {
    auto w = identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      check_simple(*it);
      // prepend letters so that word (s1,...,sl) |-> s1 s2 ... sl
      std::vector<int> p(roots_.size());
      const auto& sp = refl_[*it];
      for (size_t i = 0; i < p.size(); ++i) p[i] = sp[w.perm_[i]];
      w.perm_ = std::move(p);
    }
    w.length_ = compute_length(w.perm_);
    return w;
  }

  // true iff l(s w) < l(w), i.e. w^{-1}(alpha_s) < 0
  bool left_descent(unsigned s, const WeylElement& w) const {
    check_simple(s);
    // find preimage of alpha_s under w
    int target = simple_index_[s];
    // w.perm_[j] == target  =>  w(root_j) = alpha_s  =>  w^{-1}(alpha_s) = root_j
    for (size_t j = 0; j < w.perm_.size(); ++j)
      if (w.perm_[j] == target) return !is_positive(static_cast<int>(j));
    throw std::logic_error("permutation not surjective");
  }
  bool right_descent(const WeylElement& w, unsigned s) const {
    check_simple(s);
    return !is_positive(w.perm_[simple_index_[s]]);
  }

  // Canonical reduced word: repeatedly strip the smallest s with l(s w) < l(w).
  std::vector<unsigned> reduced_word(WeylElement w) const {
    std::vector<unsigned> word;
    auto inv = inverse(w);  // track w^{-1} to read descents cheaply
    while (true) {
      bool found = false;
      for (unsigned s = 0; s < rank(); ++s) {
        if (!is_positive(inv.perm_[simple_index_[s]])) {
          word.push_back(s);
          // w <- s*w ; inv <- inv*s
          const auto& sp = refl_[s];
          std::vector<int> p(roots_.size());
          for (size_t i = 0; i < p.size(); ++i) p[i] = inv.perm_[sp[i]];
          inv.perm_ = std::move(p);
          found = true;
          break;
        }
      }
      if (!found) break;
    }
    return word;
  }

  WeylElement longest_element(const std::vector<unsigned>& subset) const {
    for (auto s : subset) check_simple(s);
    auto w = identity();
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto s : subset) {
        if (!right_descent(w, s)) {
          w = multiply(w, simple_reflection(s));
          grew = true;
        }
      }
    }
    return w;
  }
  WeylElement longest_element() const {
    std::vector<unsigned> all(rank());
    std::iota(all.begin(), all.end(), 0u);
    return longest_element(all);
  }

  unsigned element_order(const WeylElement& w) const {
    auto x = w;
    unsigned n = 1;
    while (!x.is_identity()) {
      x = multiply(x, w);
      ++n;
      if (n > 1u << 24) throw std::logic_error("order runaway");
    }
    return n;
  }

 private:
  void check_simple(unsigned s) const {
    if (s >= rank()) throw std::out_of_range("simple index out of range");
  }

  void build() {
    unsigned n = rank();
    std::vector<std::vector<int>> pos;
    std::map<std::vector<int>, int> seen;
    for (unsigned i = 0; i < n; ++i) {
      std::vector<int> v(n, 0);
      v[i] = 1;
      seen.emplace(v, 1);
      pos.push_back(std::move(v));
    }
    // close the positive roots under simple reflections
    for (size_t head = 0; head < pos.size(); ++head) {
      auto b = pos[head];
      for (unsigned i = 0; i < n; ++i) {
        int c = 0;
        for (unsigned j = 0; j < n; ++j) c += b[j] * datum_.matrix[i][j];
        auto sb = b;
        sb[i] -= c;
        bool positive = false, negative = false;
        for (int x : sb) {
          if (x > 0) positive = true;
          if (x < 0) negative = true;
        }
        if (positive && negative) throw std::invalid_argument("Cartan datum is not of finite type");
        if (negative) continue;
        if (seen.emplace(sb, 1).second) pos.push_back(std::move(sb));
      }
      if (pos.size() > 1u << 20) throw std::invalid_argument("root system too large");
    }
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
      int ha = std::accumulate(a.begin(), a.end(), 0);
      int hb = std::accumulate(b.begin(), b.end(), 0);
      return ha != hb ? ha < hb : a < b;
    });
    npos_ = static_cast<unsigned>(pos.size());
    roots_ = pos;
    for (const auto& r : pos) {
      std::vector<int> neg(r.size());
      for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
      roots_.push_back(std::move(neg));
    }
    for (size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], static_cast<int>(i));

    simple_index_.resize(n);
    for (unsigned i = 0; i < n; ++i) {
      std::vector<int> v(n, 0);
      v[i] = 1;
      simple_index_[i] = index_.at(v);
    }
    pairing_.assign(n, std::vector<int>(roots_.size()));
    refl_.assign(n, std::vector<int>(roots_.size()));
    for (unsigned i = 0; i < n; ++i) {
      for (size_t k = 0; k < roots_.size(); ++k) {
        int c = 0;
        for (unsigned j = 0; j < n; ++j) c += roots_[k][j] * datum_.matrix[i][j];
        pairing_[i][k] = c;
        auto sb = roots_[k];
        sb[i] -= c;
        refl_[i][k] = index_.at(sb);
      }
    }
  }

  unsigned compute_length(const std::vector<int>& perm) const {
    unsigned cnt = 0;
    for (unsigned i = 0; i < npos_; ++i)
      if (!is_positive(perm[i])) ++cnt;
    return cnt;
  }

  CartanDatum datum_;
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  unsigned npos_ = 0;
  std::vector<int> simple_index_;
  std::vector<std::vector<int>> pairing_;  // pairing_[s][root]
  std::vector<std::vector<int>> refl_;
};

inline RootSystem build_root_system(const CartanDatum& c) { return RootSystem(c); }

}  // namespace springer
