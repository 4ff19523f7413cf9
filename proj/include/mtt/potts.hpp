#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "enumerate.hpp"
#include "formal_sum.hpp"
#include "poly.hpp"

namespace mtt {

inline const Variable kQ = Variable::scalar('q');
inline const Variable kV = Variable::scalar('v');
inline const Variable kX = Variable::scalar('x');
inline const Variable kY = Variable::scalar('y');

inline UndirectedGraph shave(const UndirectedGraph& u) {
  std::vector<Edge> edges;
  for (const Edge& e : u.edges())
    if (!e.is_loop()) edges.push_back(e);
  return UndirectedGraph::trusted(u.vertex_count(), std::move(edges));
}

/// Z_G(q,v) = sum over edge subsets H of q^{beta0(H)} v^{|H|}.
inline MultiPoly potts(const UndirectedGraph& u, std::uint64_t cap = kDefaultCap) {
  // coefficient table indexed by (beta0, |H|)
  std::map<std::pair<int, int>, Coefficient> counts;
  for_each_subgraph(u, [&](const UndirectedGraph& h, std::uint64_t) { counts[{beta0(h), h.edge_count()}] += 1; }, cap);
  MultiPoly z;
  for (const auto& [key, c] : counts) z.add_term(Monomial(kQ, key.first) * Monomial(kV, key.second), c);
  return z;
}

/// Z_G(q0, v0) evaluated directly in exact arithmetic.
inline Coefficient potts_value(const UndirectedGraph& u, const Coefficient& q0, const Coefficient& v0, std::uint64_t cap = kDefaultCap) {
  Coefficient total = 0;
  for_each_subgraph(
      u,
      [&](const UndirectedGraph& h, std::uint64_t) {
        Coefficient term = 1;
        for (int i = 0, b = beta0(h); i < b; ++i) term *= q0;
        for (int i = 0; i < h.edge_count(); ++i) term *= v0;
        total += term;
      },
      cap);
  return total;
}

namespace detail {

class TutteSolver {
 public:
  explicit TutteSolver(std::uint64_t cap) : cap_(cap) {}

  MultiPoly solve(const UndirectedGraph& u) {
    // T is invariant under edge renumbering: memoize on the sorted multiset.
    std::vector<Edge> key = u.edges();
    std::sort(key.begin(), key.end());
    const UndirectedGraph canon = UndirectedGraph::trusted(u.vertex_count(), std::move(key));
    if (auto it = memo_.find(canon); it != memo_.end()) return it->second;
    if (++calls_ > cap_) throw ScaleCapExceeded("tutte recursion exceeds cap " + std::to_string(cap_));

    MultiPoly result;
    int p = 0;
    for (int q = 1; q <= canon.edge_count(); ++q)
      if (!canon.edge(q).is_loop()) {
        p = q;
        break;
      }
    if (p == 0) {
      result = pow(MultiPoly(kY), canon.edge_count());
    } else {
      const UndirectedGraph deleted = delete_edge(canon, p);
      const UndirectedGraph contracted = contract_edge(canon, p);
      if (beta0(deleted) > beta0(canon))
        result = MultiPoly(kX) * solve(contracted);
      else
        result = solve(deleted) + solve(contracted);
    }
    memo_.emplace(canon, result);
    return result;
  }

 private:
  std::uint64_t cap_;
  std::uint64_t calls_ = 0;
  std::map<UndirectedGraph, MultiPoly> memo_;
};

}  // namespace detail

/// Tutte polynomial T_G(x,y) by deletion-contraction: bridge -> x T(G/e),
/// ordinary edge -> T(G-e) + T(G/e), loops only -> y^loops.
inline MultiPoly tutte(const UndirectedGraph& u, std::uint64_t cap = kDefaultCap) { return detail::TutteSolver(cap).solve(u); }

/// Number of orientations of u lying in SSC_{n,k} or AC_{n,k}.
inline std::uint64_t count_orientations(const UndirectedGraph& u, GraphClass cls, std::uint64_t cap = kDefaultCap) {
  std::uint64_t count = 0;
  for (const DirectedGraph& g : orientations(u, cap))
    if (in_class(g, cls)) ++count;
  return count;
}

/// sum_{G in Upsilon_{n,k}} Z_G(q0,v0) G, or Z of the shaved graph when
/// `shaved` is set.
inline UndirectedSum universal_potts(int n, int k, const Coefficient& q0, const Coefficient& v0, bool shaved,
                                     const ExecPolicy& policy = {}) {
  const UndirectedSpace space(n, k, policy.cap);
  return parallel_reduce(
      space.size(), policy.jobs, UndirectedSum(n, k),
      [&](std::uint64_t b, std::uint64_t e) {
        UndirectedSum local(n, k);
        space.for_each(b, e, [&](const UndirectedGraph& u) {
          local.add_term(u, potts_value(shaved ? shave(u) : u, q0, v0, policy.cap));
        });
        return local;
      },
      [](UndirectedSum& acc, UndirectedSum&& part) { acc += part; });
}

}  // namespace mtt
