#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtt {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted ascending, 1-based
using VertexMask = std::uint64_t;       // bit (v-1) set for vertex v

inline constexpr int kMaxVertices = 64;

struct Edge {
  Vertex tail = 1;
  Vertex head = 1;

  constexpr bool is_loop() const { return tail == head; }
  constexpr auto operator<=>(const Edge&) const = default;
};

inline constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << (v - 1); }

inline VertexMask to_mask(const VertexSet& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= vertex_bit(v);
  return m;
}

inline VertexSet to_vertex_set(VertexMask m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

/// Edge-numbered multigraph on vertices 1..n. The edge sequence is the
/// identity of the graph: position p (1-based) is the number of the edge.
/// Undirected graphs store every edge as (min, max).
template <bool Directed>
class Multigraph {
 public:
  static constexpr bool directed = Directed;

  explicit Multigraph(int n, std::vector<Edge> edges = {}) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("vertex count must be at least 1");
    if (n_ > kMaxVertices) throw std::invalid_argument("vertex count exceeds " + std::to_string(kMaxVertices));
    for (Edge& e : edges_) {
      if (e.tail < 1 || e.tail > n_ || e.head < 1 || e.head > n_)
        throw std::out_of_range("edge endpoint out of range 1.." + std::to_string(n_));
      if constexpr (!Directed) normalize(e);
    }
  }

  /// Skips validation; callers guarantee 1 <= endpoints <= n (and the
  /// canonical (min, max) form for undirected graphs).
  static Multigraph trusted(int n, std::vector<Edge> edges) {
    Multigraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // 1-based edge position
  const Edge& edge(int p) const {
    check_position(p);
    return edges_[p - 1];
  }

  void check_position(int p) const {
    if (p < 1 || p > edge_count())
      throw std::out_of_range("edge position " + std::to_string(p) + " outside 1.." + std::to_string(edge_count()));
  }

  void check_vertex(Vertex v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  auto operator<=>(const Multigraph&) const = default;
  bool operator==(const Multigraph&) const = default;

  static constexpr void normalize(Edge& e) {
    if (e.tail > e.head) std::swap(e.tail, e.head);
  }

 private:
  Multigraph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
};

using DirectedGraph = Multigraph<true>;
using UndirectedGraph = Multigraph<false>;

namespace detail {

// Union-find on 1..n.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n + 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Bitmask view of a directed graph. `reach[a]` holds vertices reachable from
// a by a directed path of length >= 1.
struct Adjacency {
  int n = 0;
  std::vector<VertexMask> out;
  std::vector<VertexMask> reach;
  VertexMask incident = 0;
  VertexMask has_out = 0;

  explicit Adjacency(const DirectedGraph& g) : n(g.vertex_count()), out(n + 1, 0), reach(n + 1, 0) {
    for (const Edge& e : g.edges()) {
      out[e.tail] |= vertex_bit(e.head);
      incident |= vertex_bit(e.tail) | vertex_bit(e.head);
      has_out |= vertex_bit(e.tail);
    }
    for (int a = 1; a <= n; ++a) reach[a] = out[a];
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 1; a <= n; ++a) {
        VertexMask r = reach[a];
        VertexMask acc = r;
        for (VertexMask m = r; m; m &= m - 1) acc |= reach[std::countr_zero(m) + 1];
        if (acc != r) {
          reach[a] = acc;
          changed = true;
        }
      }
    }
  }

  VertexMask all() const { return n == 64 ? ~VertexMask{0} : (vertex_bit(n + 1) - 1); }
  bool reaches(Vertex a, Vertex b) const { return a == b || (reach[a] & vertex_bit(b)); }

  bool acyclic() const {
    for (int a = 1; a <= n; ++a)
      if (reach[a] & vertex_bit(a)) return false;
    return true;
  }

  VertexMask sinks() const { return all() & ~has_out; }
  VertexMask isolated() const { return all() & ~incident; }
};

}  // namespace detail

template <bool D>
int beta0(const Multigraph<D>& g) {
  detail::DisjointSets ds(g.vertex_count());
  int components = g.vertex_count();
  for (const Edge& e : g.edges())
    if (ds.unite(e.tail, e.head)) --components;
  return components;
}

template <bool D>
int beta1(const Multigraph<D>& g) {
  return g.edge_count() - g.vertex_count() + beta0(g);
}

template <bool D>
int loop_count(const Multigraph<D>& g) {
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); }));
}

template <bool D>
Multigraph<D> delete_edge(const Multigraph<D>& g, int p) {
  g.check_position(p);
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + (p - 1));
  return Multigraph<D>::trusted(g.vertex_count(), std::move(edges));
}

/// Keeps the edges whose bit (p-1) is set in `kept`, preserving their order.
template <bool D>
Multigraph<D> edge_subgraph(const Multigraph<D>& g, std::uint64_t kept) {
  std::vector<Edge> edges;
  edges.reserve(std::popcount(kept));
  for (int p = 0; p < g.edge_count(); ++p)
    if (kept & (std::uint64_t{1} << p)) edges.push_back(g.edges()[p]);
  return Multigraph<D>::trusted(g.vertex_count(), std::move(edges));
}

/// G/e. The endpoints merge into min(tail, head); vertices above
/// max(tail, head) shift down by one.
template <bool D>
Multigraph<D> contract_edge(const Multigraph<D>& g, int p) {
  const Edge e = g.edge(p);
  if (e.is_loop()) throw std::invalid_argument("cannot contract a loop");
  if (g.vertex_count() < 2) throw std::invalid_argument("cannot contract in a one-vertex graph");
  const Vertex lo = std::min(e.tail, e.head);
  const Vertex hi = std::max(e.tail, e.head);
  auto relabel = [&](Vertex v) { return v == hi ? lo : (v > hi ? v - 1 : v); };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (int q = 1; q <= g.edge_count(); ++q) {
    if (q == p) continue;
    Edge f{relabel(g.edges()[q - 1].tail), relabel(g.edges()[q - 1].head)};
    if constexpr (!D) Multigraph<D>::normalize(f);
    edges.push_back(f);
  }
  return Multigraph<D>::trusted(g.vertex_count() - 1, std::move(edges));
}

/// R_{ab;p}: edge p becomes [ab], keeping its number.
template <bool D>
Multigraph<D> replace_edge(const Multigraph<D>& g, int p, Vertex a, Vertex b) {
  g.check_position(p);
  g.check_vertex(a);
  g.check_vertex(b);
  std::vector<Edge> edges = g.edges();
  Edge e{a, b};
  if constexpr (!D) Multigraph<D>::normalize(e);
  edges[p - 1] = e;
  return Multigraph<D>::trusted(g.vertex_count(), std::move(edges));
}

inline DirectedGraph reverse_edge(const DirectedGraph& g, int p) {
  const Edge& e = g.edge(p);
  return replace_edge(g, p, e.head, e.tail);
}

/// Edge-sequence concatenation G1*G2.
template <bool D>
Multigraph<D> concatenate(const Multigraph<D>& g1, const Multigraph<D>& g2) {
  if (g1.vertex_count() != g2.vertex_count()) throw std::invalid_argument("vertex-count mismatch in product");
  std::vector<Edge> edges = g1.edges();
  edges.insert(edges.end(), g2.edges().begin(), g2.edges().end());
  return Multigraph<D>::trusted(g1.vertex_count(), std::move(edges));
}

inline UndirectedGraph forget(const DirectedGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) UndirectedGraph::normalize(e);
  return UndirectedGraph::trusted(g.vertex_count(), std::move(edges));
}

inline bool reachable(const DirectedGraph& g, Vertex a, Vertex b) {
  g.check_vertex(a);
  g.check_vertex(b);
  return detail::Adjacency(g).reaches(a, b);
}

/// Component index (0-based, in order of completion) of every vertex;
/// entry 0 is unused. Iterative Tarjan.
inline std::vector<int> strongly_connected_components(const DirectedGraph& g, int* count = nullptr) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> succ(n + 1);
  for (const Edge& e : g.edges()) succ[e.tail].push_back(e.head);

  std::vector<int> index(n + 1, -1), low(n + 1, 0), comp(n + 1, -1);
  std::vector<char> on_stack(n + 1, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> frames;
  int next_index = 0, components = 0;

  for (Vertex root = 1; root <= n; ++root) {
    if (index[root] >= 0) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, child] = frames.back();
      if (child < succ[v].size()) {
        Vertex w = succ[v][child++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      Vertex finished = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[finished]);
    }
  }
  if (count) *count = components;
  return comp;
}

/// Every edge lies on a directed cycle (a loop is a 1-cycle). Searches a
/// path head -> tail for each edge.
inline bool every_edge_on_cycle(const DirectedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> succ(n + 1);
  for (const Edge& e : g.edges()) succ[e.tail].push_back(e.head);
  std::vector<char> seen(n + 1);
  std::vector<Vertex> todo;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    std::fill(seen.begin(), seen.end(), 0);
    todo.assign(1, e.head);
    seen[e.head] = 1;
    bool found = false;
    while (!todo.empty() && !found) {
      Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w : succ[v]) {
        if (w == e.tail) {
          found = true;
          break;
        }
        if (!seen[w]) {
          seen[w] = 1;
          todo.push_back(w);
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

struct GraphClassification {
  int beta0 = 0;
  int beta1 = 0;
  bool strongly_connected = false;
  bool strongly_semiconnected = false;
  bool acyclic = false;
  VertexSet sinks;
  VertexSet isolated;
  int loop_count = 0;
};

inline GraphClassification classify(const DirectedGraph& g) {
  GraphClassification c;
  c.beta0 = beta0(g);
  c.beta1 = beta1(g);
  c.loop_count = loop_count(g);

  int scc_count = 0;
  strongly_connected_components(g, &scc_count);
  c.strongly_connected = scc_count == 1;
  // each weak component is a union of strong ones
  c.strongly_semiconnected = scc_count == c.beta0;

  detail::Adjacency adj(g);
  c.acyclic = adj.acyclic();
  c.sinks = to_vertex_set(adj.sinks());
  c.isolated = to_vertex_set(adj.isolated());
  return c;
}

inline bool is_acyclic(const DirectedGraph& g) { return detail::Adjacency(g).acyclic(); }

inline bool is_strongly_semiconnected(const DirectedGraph& g) {
  detail::Adjacency adj(g);
  for (const Edge& e : g.edges())
    if (!e.is_loop() && !(adj.reach[e.head] & vertex_bit(e.tail))) return false;
  return true;
}

inline std::string edges_to_string(const std::vector<Edge>& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += " ; ";
    out += std::to_string(edges[i].tail) + " " + std::to_string(edges[i].head);
  }
  return out;
}

}  // namespace mtt
