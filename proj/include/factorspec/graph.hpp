#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace factorspec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// A subset of {0, ..., universe-1}, stored as a bitmask.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  /// Every vertex of {0, ..., universe-1}.
  static VertexSet full(std::size_t universe);
  /// The members of `mask` (bit i = vertex i); universe must be <= 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  /// Contiguous range [first, last).
  static VertexSet range(std::size_t universe, Vertex first, Vertex last);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool contains(Vertex v) const noexcept;

  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet operator|(const VertexSet &other) const;
  VertexSet operator&(const VertexSet &other) const;
  VertexSet operator-(const VertexSet &other) const;
  VertexSet complement() const;
  bool intersects(const VertexSet &other) const;
  bool is_subset_of(const VertexSet &other) const;

  /// Members in ascending order.
  std::vector<Vertex> members() const;
  std::optional<Vertex> min() const;
  /// Bitmask view; only valid when universe <= 64.
  std::uint64_t mask() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  void check(Vertex v) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with adjacency
/// stored as per-vertex bit rows.
class Graph {
public:
  Graph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// N_G(v) as a VertexSet.
  VertexSet neighborhood(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable accumulator used by the constructors; freezes into a Graph.
class GraphBuilder {
public:
  explicit GraphBuilder(std::size_t n);

  /// Adds {u, v}; duplicates are ignored. Throws InputError on loops and
  /// out-of-range endpoints.
  GraphBuilder &add_edge(Vertex u, Vertex v);
  std::size_t order() const noexcept { return graph_.n_; }
  Graph build() &&;

private:
  Graph graph_;
};

Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges);
Graph empty_graph(std::size_t n);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph disjoint_union(const Graph &g1, const Graph &g2);
Graph join(const Graph &g1, const Graph &g2);
/// g with the edge {u, v} added.
Graph with_edge(const Graph &g, Vertex u, Vertex v);

/// Decodes one graph6 record, optionally preceded by ">>graph6<<".
Graph parse_graph6(std::string_view bytes);
/// Encodes without header or trailing newline.
std::string to_graph6(const Graph &g);

/// Entry v is |N_G(v) \ s| for v outside s and empty for v in s.
std::vector<std::optional<std::size_t>> degrees_excluding(const Graph &g,
                                                          const VertexSet &s);
/// Number of edges with one end in a and the other in b; a and b disjoint.
std::size_t edges_between(const Graph &g, const VertexSet &a,
                          const VertexSet &b);
/// Connected components of G - x, sorted by smallest member.
std::vector<VertexSet> components_excluding(const Graph &g,
                                            const VertexSet &x);
bool is_connected(const Graph &g);

} // namespace factorspec
