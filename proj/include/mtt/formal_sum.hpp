#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "graph.hpp"
#include "rational.hpp"

namespace mtt {

/// Homogeneous element of Graph_{n,k} (or Undir_{n,k}): a finite rational
/// combination of edge-numbered graphs with the same n and k. Terms are kept
/// in lexicographic order of the edge sequence; zero coefficients are never
/// stored.
template <class Graph>
class BasicFormalSum {
 public:
  using Terms = std::map<Graph, Coefficient>;

  BasicFormalSum(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  }

  explicit BasicFormalSum(const Graph& g, const Coefficient& c = 1) : BasicFormalSum(g.vertex_count(), g.edge_count()) {
    add_term(g, c);
  }

  int vertex_count() const { return n_; }
  int degree() const { return k_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(const Graph& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Coefficient{0} : it->second;
  }

  void add_term(const Graph& g, const Coefficient& c) {
    if (g.vertex_count() != n_ || g.edge_count() != k_)
      throw std::invalid_argument("term of shape (" + std::to_string(g.vertex_count()) + "," + std::to_string(g.edge_count()) +
                                  ") added to a sum of shape (" + std::to_string(n_) + "," + std::to_string(k_) + ")");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicFormalSum& operator+=(const BasicFormalSum& o) {
    check_shape(o);
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }

  BasicFormalSum& operator-=(const BasicFormalSum& o) {
    check_shape(o);
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }

  BasicFormalSum& operator*=(const Coefficient& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [g, coef] : terms_) coef *= c;
    return *this;
  }

  friend BasicFormalSum operator+(BasicFormalSum a, const BasicFormalSum& b) { return a += b; }
  friend BasicFormalSum operator-(BasicFormalSum a, const BasicFormalSum& b) { return a -= b; }
  friend BasicFormalSum operator-(BasicFormalSum a) { return a *= Coefficient{-1}; }
  friend BasicFormalSum operator*(const Coefficient& c, BasicFormalSum a) { return a *= c; }

  bool operator==(const BasicFormalSum&) const = default;

 private:
  void check_shape(const BasicFormalSum& o) const {
    if (o.n_ != n_ || o.k_ != k_) throw std::invalid_argument("formal sums of different shape");
  }

  int n_;
  int k_;
  Terms terms_;
};

using FormalSum = BasicFormalSum<DirectedGraph>;
using UndirectedSum = BasicFormalSum<UndirectedGraph>;

template <class Graph>
BasicFormalSum<Graph> scale(const Coefficient& c, BasicFormalSum<Graph> s) {
  return s *= c;
}

/// Bilinear extension of edge-sequence concatenation; degree k1 + k2.
template <class Graph>
BasicFormalSum<Graph> concat_product(const BasicFormalSum<Graph>& a, const BasicFormalSum<Graph>& b) {
  if (a.vertex_count() != b.vertex_count()) throw std::invalid_argument("vertex-count mismatch in product");
  BasicFormalSum<Graph> out(a.vertex_count(), a.degree() + b.degree());
  for (const auto& [g1, c1] : a.terms())
    for (const auto& [g2, c2] : b.terms()) out.add_term(concatenate(g1, g2), c1 * c2);
  return out;
}

template <class Graph>
BasicFormalSum<Graph> operator*(const BasicFormalSum<Graph>& a, const BasicFormalSum<Graph>& b) {
  return concat_product(a, b);
}

/// U(B): every graph with coefficient +1.
template <class Range>
FormalSum u_sum(int n, int k, const Range& graphs) {
  FormalSum out(n, k);
  for (const DirectedGraph& g : graphs) out.add_term(g, 1);
  return out;
}

/// X(B): every graph with coefficient (-1)^{beta0}.
template <class Range>
FormalSum x_sum(int n, int k, const Range& graphs) {
  FormalSum out(n, k);
  for (const DirectedGraph& g : graphs) out.add_term(g, sign_power(beta0(g)));
  return out;
}

inline UndirectedSum forget(const FormalSum& s) {
  UndirectedSum out(s.vertex_count(), s.degree());
  for (const auto& [g, c] : s.terms()) out.add_term(forget(g), c);
  return out;
}

/// Element of Graph_n = sum over degrees; only nonzero components are kept.
class GradedElement {
 public:
  explicit GradedElement(int n) : n_(n) {}

  int vertex_count() const { return n_; }
  const std::map<int, FormalSum>& components() const { return parts_; }

  FormalSum component(int k) const {
    auto it = parts_.find(k);
    return it == parts_.end() ? FormalSum(n_, k) : it->second;
  }

  GradedElement& operator+=(const FormalSum& s) {
    if (s.vertex_count() != n_) throw std::invalid_argument("vertex-count mismatch in graded sum");
    auto it = parts_.try_emplace(s.degree(), n_, s.degree()).first;
    it->second += s;
    if (it->second.is_zero()) parts_.erase(it);
    return *this;
  }

  GradedElement& operator-=(const FormalSum& s) { return *this += -s; }

  bool operator==(const GradedElement&) const = default;

 private:
  int n_;
  std::map<int, FormalSum> parts_;
};

}  // namespace mtt
