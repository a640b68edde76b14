#include "factorspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "factorspec/error.hpp"

namespace factorspec {

namespace {

constexpr std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

} // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members)
    insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members)
    insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64)
    throw InputError("VertexSet::from_mask: universe exceeds 64");
  if (universe < 64 && (mask >> universe) != 0)
    throw InputError("VertexSet::from_mask: mask has bits outside universe");
  VertexSet s(universe);
  if (universe > 0)
    s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::range(std::size_t universe, Vertex first, Vertex last) {
  VertexSet s(universe);
  for (Vertex v = first; v < last; ++v)
    s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_)
    total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
}

void VertexSet::check(Vertex v) const {
  if (v >= universe_)
    throw InputError("vertex " + std::to_string(v) + " outside universe of size " +
                     std::to_string(universe_));
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

void VertexSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

namespace {

void require_same_universe(const VertexSet &a, const VertexSet &b) {
  if (a.universe() != b.universe())
    throw InputError("vertex sets over different universes");
}

} // namespace

VertexSet VertexSet::operator|(const VertexSet &other) const {
  require_same_universe(*this, other);
  VertexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] |= other.words_[i];
  return r;
}

VertexSet VertexSet::operator&(const VertexSet &other) const {
  require_same_universe(*this, other);
  VertexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] &= other.words_[i];
  return r;
}

VertexSet VertexSet::operator-(const VertexSet &other) const {
  require_same_universe(*this, other);
  VertexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i)
    r.words_[i] &= ~other.words_[i];
  return r;
}

VertexSet VertexSet::complement() const {
  VertexSet r = *this;
  for (auto &w : r.words_)
    w = ~w;
  r.trim();
  return r;
}

bool VertexSet::intersects(const VertexSet &other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0)
      return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet &other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0)
      return false;
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::optional<Vertex> VertexSet::min() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0)
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return std::nullopt;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64)
    throw InputError("VertexSet::mask: universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

// ---------------------------------------------------------------------------
// Graph

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_)
    throw InputError("vertex out of range");
  return ((bits_[u * words_ + v / 64] >> (v % 64)) & 1U) != 0;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v))
    d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  if (v >= n_)
    throw InputError("vertex out of range");
  return {bits_.data() + v * words_, words_};
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto w = r[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

VertexSet Graph::neighborhood(Vertex v) const {
  VertexSet s(n_);
  for (Vertex u : neighbors(v))
    s.insert(u);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v)
    d[v] = degree(v);
  return d;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  graph_.n_ = n;
  graph_.words_ = word_count(n);
  graph_.bits_.assign(n * graph_.words_, 0);
}

GraphBuilder &GraphBuilder::add_edge(Vertex u, Vertex v) {
  const auto n = graph_.n_;
  if (u >= n || v >= n)
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has an endpoint outside 0.." +
                     std::to_string(n == 0 ? 0 : n - 1));
  if (u == v)
    throw InputError("loop at vertex " + std::to_string(u));
  auto &wu = graph_.bits_[u * graph_.words_ + v / 64];
  const auto bit = std::uint64_t{1} << (v % 64);
  if ((wu & bit) != 0)
    return *this;
  wu |= bit;
  graph_.bits_[v * graph_.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++graph_.m_;
  return *this;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto &[u, v] : edges)
    b.add_edge(u, v);
  return std::move(b).build();
}

Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  if (n < 3)
    throw InputError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v)
    b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v)
    b.add_edge(v, v + 1);
  return std::move(b).build();
}

namespace {

GraphBuilder union_builder(const Graph &g1, const Graph &g2) {
  const auto n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (const auto &[u, v] : g1.edges())
    b.add_edge(u, v);
  for (const auto &[u, v] : g2.edges())
    b.add_edge(u + n1, v + n1);
  return b;
}

} // namespace

Graph disjoint_union(const Graph &g1, const Graph &g2) {
  return union_builder(g1, g2).build();
}

Graph join(const Graph &g1, const Graph &g2) {
  auto b = union_builder(g1, g2);
  const auto n1 = g1.order();
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < g2.order(); ++v)
      b.add_edge(u, n1 + v);
  return std::move(b).build();
}

Graph with_edge(const Graph &g, Vertex u, Vertex v) {
  GraphBuilder b(g.order());
  for (const auto &[x, y] : g.edges())
    b.add_edge(x, y);
  b.add_edge(u, v);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Counting primitives

std::vector<std::optional<std::size_t>> degrees_excluding(const Graph &g,
                                                          const VertexSet &s) {
  if (s.universe() != g.order())
    throw InputError("vertex set universe does not match graph order");
  std::vector<std::optional<std::size_t>> out(g.order());
  const auto sw = s.words();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v))
      continue;
    auto r = g.row(v);
    std::size_t d = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      d += static_cast<std::size_t>(std::popcount(r[i] & ~sw[i]));
    out[v] = d;
  }
  return out;
}

std::size_t edges_between(const Graph &g, const VertexSet &a,
                          const VertexSet &b) {
  if (a.universe() != g.order() || b.universe() != g.order())
    throw InputError("vertex set universe does not match graph order");
  if (a.intersects(b))
    throw InputError("edges_between: sets overlap");
  const auto bw = b.words();
  std::size_t count = 0;
  for (Vertex u : a.members()) {
    auto r = g.row(u);
    for (std::size_t i = 0; i < r.size(); ++i)
      count += static_cast<std::size_t>(std::popcount(r[i] & bw[i]));
  }
  return count;
}

std::vector<VertexSet> components_excluding(const Graph &g,
                                            const VertexSet &x) {
  if (x.universe() != g.order())
    throw InputError("vertex set universe does not match graph order");
  std::vector<VertexSet> out;
  VertexSet remaining = x.complement();
  std::vector<Vertex> stack;
  // Seeds are taken in ascending order, so the output is already sorted by
  // smallest member.
  while (auto seed = remaining.min()) {
    VertexSet comp(g.order());
    comp.insert(*seed);
    remaining.erase(*seed);
    stack.assign(1, *seed);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (remaining.contains(u)) {
          remaining.erase(u);
          comp.insert(u);
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph &g) {
  if (g.order() == 0)
    throw InputError("is_connected: graph has no vertices");
  return components_excluding(g, VertexSet(g.order())).size() == 1;
}

} // namespace factorspec
