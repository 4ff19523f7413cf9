#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "formal_sum.hpp"
#include "rational.hpp"

namespace mtt {

/// Matrix entry w_{ij} or a named scalar (q, v, x, y).
struct Variable {
  enum class Kind : unsigned char { Matrix, Scalar };

  Kind kind = Kind::Scalar;
  int row = 0;
  int col = 0;
  char name = 0;

  static constexpr Variable w(int i, int j) { return {Kind::Matrix, i, j, 0}; }
  static constexpr Variable scalar(char c) { return {Kind::Scalar, 0, 0, c}; }

  constexpr auto operator<=>(const Variable&) const = default;

  std::string to_string() const {
    if (kind == Kind::Matrix) return "w[" + std::to_string(row) + "," + std::to_string(col) + "]";
    return std::string(1, name);
  }
};

/// Product of variables with positive exponents, sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(const Variable& v, int exponent = 1) {
    if (exponent > 0) factors_.push_back({v, exponent});
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int exponent(const Variable& v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v, [](const Factor& f, const Variable& x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        r.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.push_back({i->first, i->second + j->second});
        ++i;
        ++j;
      }
    }
    return r;
  }

  /// Same monomial with the exponent of v replaced.
  Monomial with_exponent(const Variable& v, int e) const {
    Monomial r;
    for (const auto& f : factors_)
      if (!(f.first == v)) r.factors_.push_back(f);
    if (e > 0) {
      auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), v, [](const Factor& f, const Variable& x) { return f.first < x; });
      r.factors_.insert(it, {v, e});
    }
    return r;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  std::string to_string() const {
    std::string s;
    for (const auto& [v, e] : factors_) {
      if (!s.empty()) s += " * ";
      s += v.to_string();
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<Factor> factors_;
};

/// Exact multivariate polynomial over the rationals.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  MultiPoly() = default;
  MultiPoly(const Coefficient& c) { add_term(Monomial{}, c); }  // NOLINT: implicit constant
  MultiPoly(int c) : MultiPoly(Coefficient{c}) {}               // NOLINT
  explicit MultiPoly(const Variable& v) { add_term(Monomial(v), 1); }

  static MultiPoly variable(const Variable& v) { return MultiPoly(v); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient{0} : it->second;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Coefficient constant_value() const { return coefficient(Monomial{}); }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const Coefficient& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  bool operator==(const MultiPoly&) const = default;

  /// "p/q * w[1,2]^2 * q + ..." in canonical monomial order; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += to_fraction_string(c);
      if (!m.is_one()) s += " * " + m.to_string();
    }
    return s;
  }

 private:
  Terms terms_;
};

inline MultiPoly pow(const MultiPoly& base, int e) {
  MultiPoly r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// m-fold formal partial derivative.
inline MultiPoly derivative(const MultiPoly& p, const Variable& v, int m = 1) {
  if (m < 1) throw std::invalid_argument("derivative order must be at least 1");
  MultiPoly r;
  for (const auto& [mono, c] : p.terms()) {
    const int e = mono.exponent(v);
    if (e < m) continue;
    Coefficient falling = 1;
    for (int t = 0; t < m; ++t) falling *= (e - t);
    r.add_term(mono.with_exponent(v, e - m), c * falling);
  }
  return r;
}

/// Substitutes polynomials for variables; unassigned variables stay.
inline MultiPoly substitute(const MultiPoly& p, const std::map<Variable, MultiPoly>& assignment) {
  MultiPoly r;
  for (const auto& [mono, c] : p.terms()) {
    MultiPoly term = c;
    Monomial rest;
    for (const auto& [v, e] : mono.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        rest = rest * Monomial(v, e);
      else
        term *= pow(it->second, e);
    }
    MultiPoly restp;
    restp.add_term(rest, 1);
    r += term * restp;
  }
  return r;
}

/// Exact substitution of rational values; partial assignments leave the
/// remaining variables in place.
inline MultiPoly evaluate(const MultiPoly& p, const std::map<Variable, Coefficient>& assignment) {
  std::map<Variable, MultiPoly> as;
  for (const auto& [v, c] : assignment) as.emplace(v, MultiPoly(c));
  return substitute(p, as);
}

/// Square matrix of polynomials, 1-based access.
class WeightMatrix {
 public:
  explicit WeightMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  }

  /// Entry (i,j) = w_{ij}.
  static WeightMatrix symbolic(int n) {
    WeightMatrix m(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) m(i, j) = MultiPoly(Variable::w(i, j));
    return m;
  }

  int size() const { return n_; }
  MultiPoly& operator()(int i, int j) { return entries_[index(i, j)]; }
  const MultiPoly& operator()(int i, int j) const { return entries_[index(i, j)]; }

  bool operator==(const WeightMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<MultiPoly> entries_;
};

/// W-hat: off-diagonal entries kept, diagonal (i,i) = -sum_{j != i} W_{ij}.
inline WeightMatrix laplace_matrix(const WeightMatrix& w) {
  WeightMatrix r = w;
  for (int i = 1; i <= w.size(); ++i) {
    MultiPoly d;
    for (int j = 1; j <= w.size(); ++j)
      if (j != i) d -= w(i, j);
    r(i, i) = d;
  }
  return r;
}

/// <W|s>: linear extension of G -> prod_{[ij] in G} W_{ij}. Terms that are
/// equal up to edge numbering are merged before multiplying.
inline MultiPoly pairing(const WeightMatrix& w, const FormalSum& s) {
  if (w.size() != s.vertex_count()) throw std::invalid_argument("weight matrix size does not match vertex count");
  std::map<std::vector<Edge>, Coefficient> multisets;
  for (const auto& [g, c] : s.terms()) {
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end());
    multisets[std::move(edges)] += c;
  }
  MultiPoly out;
  for (const auto& [edges, c] : multisets) {
    if (c == 0) continue;
    MultiPoly term = c;
    for (const Edge& e : edges) term *= w(e.tail, e.head);
    out += term;
  }
  return out;
}

namespace detail {

inline MultiPoly cofactor_expand(const WeightMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.empty()) return 1;
  if (rows.size() == 1) return m(rows[0], cols[0]);
  MultiPoly det;
  const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  std::vector<int> sub_cols;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const MultiPoly& entry = m(rows[0], cols[c]);
    if (entry.is_zero()) continue;
    sub_cols.assign(cols.begin(), cols.end());
    sub_cols.erase(sub_cols.begin() + c);
    MultiPoly term = entry * cofactor_expand(m, sub_rows, sub_cols);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

inline std::vector<int> remaining(int n, const std::vector<int>& removed) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) out.push_back(i);
  return out;
}

}  // namespace detail

/// Cofactor expansion along the first row.
inline MultiPoly determinant(const WeightMatrix& m) {
  const auto all = detail::remaining(m.size(), {});
  return detail::cofactor_expand(m, all, all);
}

/// Determinant of M with the listed rows and columns removed; no cofactor
/// sign is applied. The empty matrix has determinant 1.
inline MultiPoly minor(const WeightMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs as many rows as columns removed");
  for (int r : rows)
    if (r < 1 || r > m.size()) throw std::out_of_range("row index out of range");
  for (int c : cols)
    if (c < 1 || c > m.size()) throw std::out_of_range("column index out of range");
  const auto keep_rows = detail::remaining(m.size(), rows);
  const auto keep_cols = detail::remaining(m.size(), cols);
  if (keep_rows.size() != keep_cols.size()) throw std::invalid_argument("matrix is not square after deletion");
  return detail::cofactor_expand(m, keep_rows, keep_cols);
}

}  // namespace mtt
