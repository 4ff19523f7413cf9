#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "parallel.hpp"

namespace mtt {

/// All graphs with n vertices and k numbered edges whose edges are drawn
/// from a fixed alphabet, in lexicographic order of the edge sequence.
/// The default alphabet gives Gamma_{n,k} (directed: n^2 choices per edge)
/// or Upsilon_{n,k} (undirected: n(n+1)/2 choices per edge).
template <bool Directed>
class GraphSpace {
 public:
  using Graph = Multigraph<Directed>;

  GraphSpace(int n, int k, std::uint64_t cap = kDefaultCap) : GraphSpace(n, k, default_alphabet(n), cap) {}

  /// `alphabet` must be sorted and valid for n.
  GraphSpace(int n, int k, std::vector<Edge> alphabet, std::uint64_t cap = kDefaultCap)
      : n_(n), k_(k), alphabet_(std::move(alphabet)) {
    if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (k < 0) throw std::invalid_argument("edge count must be nonnegative");
    size_ = alphabet_.empty() ? (k == 0 ? 1 : 0)
                              : capped_power(alphabet_.size(), static_cast<unsigned>(k), cap,
                                             "graph space (" + std::to_string(n) + "," + std::to_string(k) + ")");
  }

  static std::vector<Edge> default_alphabet(int n) {
    std::vector<Edge> a;
    for (Vertex t = 1; t <= n; ++t)
      for (Vertex h = Directed ? 1 : t; h <= n; ++h) a.push_back({t, h});
    return a;
  }

  /// Directed edges with tail in `tails` and head in `heads`.
  static std::vector<Edge> alphabet(const VertexSet& tails, const VertexSet& heads) {
    std::vector<Edge> a;
    for (Vertex t : tails)
      for (Vertex h : heads)
        if (Directed || t <= h) a.push_back({t, h});
    return a;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return k_; }
  std::uint64_t size() const { return size_; }

  Graph at(std::uint64_t index) const {
    std::vector<Edge> edges(k_);
    for (int p = k_ - 1; p >= 0; --p) {
      edges[p] = alphabet_[index % alphabet_.size()];
      index /= alphabet_.size();
    }
    return Graph::trusted(n_, std::move(edges));
  }

  /// Calls f(graph) for indices in [begin, end) in order.
  template <class F>
  void for_each(std::uint64_t begin, std::uint64_t end, F&& f) const {
    if (begin >= end) return;
    if (k_ == 0) {
      f(Graph::trusted(n_, {}));
      return;
    }
    std::vector<std::size_t> digits(k_);
    std::uint64_t idx = begin;
    for (int p = k_ - 1; p >= 0; --p) {
      digits[p] = idx % alphabet_.size();
      idx /= alphabet_.size();
    }
    std::vector<Edge> edges(k_);
    for (int p = 0; p < k_; ++p) edges[p] = alphabet_[digits[p]];
    for (std::uint64_t i = begin; i < end; ++i) {
      f(Graph::trusted(n_, edges));
      for (int p = k_ - 1; p >= 0; --p) {
        if (++digits[p] < alphabet_.size()) {
          edges[p] = alphabet_[digits[p]];
          break;
        }
        digits[p] = 0;
        edges[p] = alphabet_[0];
      }
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for_each(0, size_, std::forward<F>(f));
  }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using reference = const Graph&;
    using pointer = const Graph*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const GraphSpace* space, std::uint64_t index) : space_(space), index_(index) {
      if (index_ < space_->size_) current_.emplace(space_->at(index_));
    }
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      if (++index_ < space_->size_)
        current_.emplace(space_->at(index_));
      else
        current_.reset();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const { return index_ == o.index_; }

   private:
    const GraphSpace* space_ = nullptr;
    std::uint64_t index_ = 0;
    std::optional<Graph> current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size_); }

 private:
  int n_;
  int k_;
  std::vector<Edge> alphabet_;
  std::uint64_t size_ = 0;
};

using DirectedSpace = GraphSpace<true>;
using UndirectedSpace = GraphSpace<false>;

inline std::vector<DirectedGraph> enumerate_graphs(int n, int k, std::uint64_t cap = kDefaultCap) {
  DirectedSpace space(n, k, cap);
  std::vector<DirectedGraph> out;
  out.reserve(space.size());
  space.for_each([&](const DirectedGraph& g) { out.push_back(g); });
  return out;
}

enum class GraphClass { StronglySemiconnected, Acyclic };

/// Membership in SSC^I (I = exact isolated set) or AC^I (I = exact sink
/// set); with no I, membership in the union over all I.
inline bool in_class(const DirectedGraph& g, GraphClass cls, std::optional<VertexMask> marked = std::nullopt) {
  detail::Adjacency adj(g);
  if (cls == GraphClass::Acyclic) {
    if (!adj.acyclic()) return false;
    return !marked || adj.sinks() == *marked;
  }
  if (marked && adj.isolated() != *marked) return false;
  for (const Edge& e : g.edges())
    if (!e.is_loop() && !(adj.reach[e.head] & vertex_bit(e.tail))) return false;
  return true;
}

namespace detail {

inline void check_vertex_set(int n, const VertexSet& vs) {
  for (Vertex v : vs)
    if (v < 1 || v > n) throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

inline VertexSet complement(int n, VertexMask m) {
  VertexSet out;
  for (Vertex v = 1; v <= n; ++v)
    if (!(m & vertex_bit(v))) out.push_back(v);
  return out;
}

inline VertexSet all_vertices(int n) { return complement(n, 0); }

}  // namespace detail

/// Search space for a class enumeration. With I given, only the edge
/// alphabet compatible with I is scanned: SSC edges avoid the isolated
/// vertices, AC tails avoid the sinks.
inline DirectedSpace class_space(int n, int k, GraphClass cls, const std::optional<VertexSet>& I, std::uint64_t cap) {
  if (!I) return DirectedSpace(n, k, cap);
  detail::check_vertex_set(n, *I);
  const VertexSet rest = detail::complement(n, to_mask(*I));
  if (cls == GraphClass::StronglySemiconnected) return DirectedSpace(n, k, DirectedSpace::alphabet(rest, rest), cap);
  return DirectedSpace(n, k, DirectedSpace::alphabet(rest, detail::all_vertices(n)), cap);
}

/// Members of SSC_{n,k}^I or AC_{n,k}^I in lexicographic order.
inline std::vector<DirectedGraph> enumerate_class(int n, int k, GraphClass cls, const std::optional<VertexSet>& I = std::nullopt,
                                                  const ExecPolicy& policy = {}) {
  const DirectedSpace space = class_space(n, k, cls, I, policy.cap);
  std::optional<VertexMask> marked;
  if (I) marked = to_mask(*I);
  using List = std::vector<DirectedGraph>;
  return parallel_reduce(
      space.size(), policy.jobs, List{},
      [&](std::uint64_t b, std::uint64_t e) {
        List local;
        space.for_each(b, e, [&](const DirectedGraph& g) {
          if (in_class(g, cls, marked)) local.push_back(g);
        });
        return local;
      },
      [](List& acc, List&& part) { acc.insert(acc.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end())); });
}

/// Calls f(H, kept_mask) for all 2^k subgraphs; bit (p-1) of the mask marks
/// edge p as kept.
template <bool D, class F>
void for_each_subgraph(const Multigraph<D>& g, F&& f, std::uint64_t cap = kDefaultCap) {
  const auto total = capped_power(2, static_cast<unsigned>(g.edge_count()), cap, "subgraph count");
  for (std::uint64_t kept = 0; kept < total; ++kept) f(edge_subgraph(g, kept), kept);
}

template <bool D>
std::vector<std::pair<Multigraph<D>, std::uint64_t>> subgraphs(const Multigraph<D>& g, std::uint64_t cap = kDefaultCap) {
  std::vector<std::pair<Multigraph<D>, std::uint64_t>> out;
  for_each_subgraph(g, [&](const Multigraph<D>& h, std::uint64_t kept) { out.emplace_back(h, kept); }, cap);
  return out;
}

/// Every directed graph whose forgetful image is u, in lexicographic order.
inline std::vector<DirectedGraph> orientations(const UndirectedGraph& u, std::uint64_t cap = kDefaultCap) {
  std::vector<int> free_positions;
  for (int p = 0; p < u.edge_count(); ++p)
    if (!u.edges()[p].is_loop()) free_positions.push_back(p);
  const int m = static_cast<int>(free_positions.size());
  const auto total = capped_power(2, static_cast<unsigned>(m), cap, "orientation count");
  std::vector<DirectedGraph> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges = u.edges();
    for (int i = 0; i < m; ++i) {
      // the first non-loop edge is the most significant digit
      if (mask & (std::uint64_t{1} << (m - 1 - i))) {
        Edge& e = edges[free_positions[i]];
        std::swap(e.tail, e.head);
      }
    }
    out.push_back(DirectedGraph::trusted(u.vertex_count(), std::move(edges)));
  }
  return out;
}

}  // namespace mtt
