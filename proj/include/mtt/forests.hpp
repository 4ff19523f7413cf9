#pragma once

#include <vector>

#include "graph.hpp"
#include "poly.hpp"

namespace mtt {

/// Rooted spanning forests on 1..n whose roots are exactly `roots`, every
/// edge pointing from a vertex to its parent. Built from parent functions,
/// independently of the graph-space enumeration.
inline std::vector<std::vector<Edge>> rooted_forests(int n, const VertexSet& roots) {
  const VertexMask root_mask = to_mask(roots);
  std::vector<Vertex> free;
  for (Vertex v = 1; v <= n; ++v)
    if (!(root_mask & vertex_bit(v))) free.push_back(v);

  std::vector<std::vector<Edge>> out;
  if (roots.empty()) return out;
  std::vector<Vertex> parent(n + 1, 0);
  std::vector<int> choice(free.size(), 1);
  auto leads_to_root = [&](Vertex v) {
    for (int steps = 0; steps <= n; ++steps) {
      if (root_mask & vertex_bit(v)) return true;
      v = parent[v];
    }
    return false;
  };
  while (true) {
    bool valid = true;
    for (std::size_t i = 0; i < free.size(); ++i) {
      parent[free[i]] = choice[i];
      if (choice[i] == free[i]) valid = false;
    }
    if (valid)
      for (Vertex v : free) valid = valid && leads_to_root(v);
    if (valid) {
      std::vector<Edge> edges;
      for (Vertex v : free) edges.push_back({v, parent[v]});
      out.push_back(std::move(edges));
    }
    std::size_t i = free.size();
    while (i > 0 && ++choice[i - 1] > n) choice[--i] = 1;
    if (i == 0) break;
  }
  return out;
}

/// Sum over rooted forests of prod w_{v, parent(v)}.
inline MultiPoly forest_polynomial(int n, const VertexSet& roots) {
  MultiPoly sum;
  for (const auto& forest : rooted_forests(n, roots)) {
    Monomial m;
    for (const Edge& e : forest) m = m * Monomial(Variable::w(e.tail, e.head));
    sum.add_term(m, 1);
  }
  return sum;
}

}  // namespace mtt
