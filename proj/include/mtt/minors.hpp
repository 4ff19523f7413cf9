#pragma once

#include <functional>
#include <optional>

#include "enumerate.hpp"
#include "formal_sum.hpp"

namespace mtt {

/// (-1)^k on acyclic graphs, 0 otherwise.
inline Coefficient alpha(const DirectedGraph& g) { return is_acyclic(g) ? sign_power(g.edge_count()) : Coefficient{0}; }

/// (-1)^{beta1} on strongly semiconnected graphs, 0 otherwise.
inline Coefficient sigma(const DirectedGraph& g) {
  return is_strongly_semiconnected(g) ? sign_power(beta1(g)) : Coefficient{0};
}

/// SumSub(f; G) = sum of f(H) over all 2^k subgraphs H of G.
template <bool D, class F>
Coefficient sum_over_subgraphs(F&& f, const Multigraph<D>& g, std::uint64_t cap = kDefaultCap) {
  Coefficient total = 0;
  for_each_subgraph(g, [&](const Multigraph<D>& h, std::uint64_t) { total += f(h); }, cap);
  return total;
}

namespace detail {

inline Coefficient minor_prefactor(int k) { return Coefficient(sign_power(k)) / Coefficient(factorial(k)); }

inline FormalSum collect(const DirectedSpace& space, int k, const ExecPolicy& policy,
                         const std::function<void(const DirectedGraph&, FormalSum&)>& visit) {
  const int n = space.vertex_count();
  return parallel_reduce(
      space.size(), policy.jobs, FormalSum(n, k),
      [&](std::uint64_t b, std::uint64_t e) {
        FormalSum local(n, k);
        space.for_each(b, e, [&](const DirectedGraph& g) { visit(g, local); });
        return local;
      },
      [](FormalSum& acc, FormalSum&& part) { acc += part; });
}

}  // namespace detail

/// det_{n,k}^I = ((-1)^k / k!) X(SSC_{n,k}^I).
inline FormalSum universal_det(int n, int k, const VertexSet& I, const ExecPolicy& policy = {}) {
  detail::check_vertex_set(n, I);
  FormalSum out(n, k);
  if (k < n - static_cast<int>(I.size())) return out;
  const DirectedSpace space = class_space(n, k, GraphClass::StronglySemiconnected, I, policy.cap);
  const VertexMask marked = to_mask(I);
  const Coefficient pre = detail::minor_prefactor(k);
  const Coefficient neg = -pre;
  return detail::collect(space, k, policy, [&](const DirectedGraph& g, FormalSum& acc) {
    if (in_class(g, GraphClass::StronglySemiconnected, marked)) acc.add_term(g, beta0(g) % 2 ? neg : pre);
  });
}

/// det_{n,k}^{i/j} = ((-1)^k / k!) X({G : ([ij])*G in SSC_{n,k+1}^0}), with
/// the sign taken from beta0(G).
inline FormalSum universal_codim1(int n, int k, Vertex i, Vertex j, const ExecPolicy& policy = {}) {
  detail::check_vertex_set(n, {i, j});
  const DirectedSpace space(n, k, policy.cap);
  const Coefficient pre = detail::minor_prefactor(k);
  const Coefficient neg = -pre;
  return detail::collect(space, k, policy, [&](const DirectedGraph& g, FormalSum& acc) {
    std::vector<Edge> edges;
    edges.reserve(k + 1);
    edges.push_back({i, j});
    edges.insert(edges.end(), g.edges().begin(), g.edges().end());
    if (in_class(DirectedGraph::trusted(n, std::move(edges)), GraphClass::StronglySemiconnected, VertexMask{0}))
      acc.add_term(g, beta0(g) % 2 ? neg : pre);
  });
}

/// Theta_n = det_{n,n+1}^0 - sum_{i != j} ([ij]) * det_{n,n-2}^{{i,j}}
///           - sum_i det_{n,n-1}^{{i}}.
inline GradedElement theta(int n, const ExecPolicy& policy = {}) {
  if (n < 2) throw std::invalid_argument("theta requires n >= 2");
  GradedElement out(n);
  out += universal_det(n, n + 1, {}, policy);
  FormalSum low(n, n - 1);
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = 1; j <= n; ++j) {
      if (i == j) continue;
      const FormalSum edge(DirectedGraph(n, {{i, j}}));
      low -= concat_product(edge, universal_det(n, n - 2, {std::min(i, j), std::max(i, j)}, policy));
    }
    low -= universal_det(n, n - 1, {i}, policy);
  }
  out += low;
  return out;
}

}  // namespace mtt
