#pragma once

#include <vector>

#include "formal_sum.hpp"

namespace mtt {

/// B_p: a term whose p-th edge is the loop [aa] becomes -sum_{b != a} R_{ab;p};
/// other terms are fixed.
template <class Graph>
BasicFormalSum<Graph> b_op(int p, const BasicFormalSum<Graph>& s) {
  if (p < 1 || p > s.degree()) throw std::out_of_range("B_p position outside 1..k");
  const int n = s.vertex_count();
  BasicFormalSum<Graph> out(n, s.degree());
  for (const auto& [g, c] : s.terms()) {
    const Edge& e = g.edges()[p - 1];
    if (!e.is_loop()) {
      out.add_term(g, c);
      continue;
    }
    for (Vertex b = 1; b <= n; ++b)
      if (b != e.tail) out.add_term(replace_edge(g, p, e.tail, b), -c);
  }
  return out;
}

/// Delta = B_1 ... B_k, computed in one pass: every loop [aa] is replaced by
/// each [ab], b != a, with a sign flip per loop. Identity for k = 0.
template <class Graph>
BasicFormalSum<Graph> laplace(const BasicFormalSum<Graph>& s) {
  const int n = s.vertex_count();
  BasicFormalSum<Graph> out(n, s.degree());
  std::vector<int> loops;
  std::vector<Vertex> choice;
  for (const auto& [g, c] : s.terms()) {
    loops.clear();
    for (int p = 0; p < g.edge_count(); ++p)
      if (g.edges()[p].is_loop()) loops.push_back(p);
    if (loops.empty()) {
      out.add_term(g, c);
      continue;
    }
    if (n == 1) continue;
    const Coefficient signed_c = (loops.size() % 2 == 0) ? c : Coefficient(-c);
    // odometer over the (n-1) replacement heads of each loop
    choice.assign(loops.size(), 0);
    std::vector<Edge> edges = g.edges();
    auto head_for = [&](std::size_t i) {
      Vertex a = g.edges()[loops[i]].tail;
      Vertex b = choice[i] + 1;
      return b >= a ? b + 1 : b;
    };
    while (true) {
      for (std::size_t i = 0; i < loops.size(); ++i) {
        Edge e{g.edges()[loops[i]].tail, head_for(i)};
        if constexpr (!Graph::directed) Graph::normalize(e);
        edges[loops[i]] = e;
      }
      out.add_term(Graph::trusted(n, edges), signed_c);
      std::size_t i = loops.size();
      while (i > 0 && ++choice[i - 1] == n - 1) choice[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

inline GradedElement laplace(const GradedElement& x) {
  GradedElement out(x.vertex_count());
  for (const auto& [k, part] : x.components()) out += laplace(part);
  return out;
}

}  // namespace mtt
