// Edmonds' blossom algorithm for maximum-cardinality matching in general
// graphs. Each search grows an alternating tree from one exposed root,
// contracting odd cycles by relabelling their vertices with a common base.

#include <algorithm>
#include <deque>
#include <limits>

#include "factorspec/oracle.hpp"

namespace factorspec {

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

class BlossomMatcher {
public:
  explicit BlossomMatcher(const Graph &g)
      : n_(g.order()), adj_(g.order()), mate_(g.order(), kNone),
        parent_(g.order()), base_(g.order()), in_tree_(g.order()),
        in_blossom_(g.order()), on_path_(g.order()) {
    for (Vertex v = 0; v < n_; ++v)
      adj_[v] = g.neighbors(v);
  }

  // Returns false as soon as some vertex is proven unmatchable when
  // `stop_on_exposed` is set.
  bool run(bool stop_on_exposed) {
    greedy();
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kNone)
        continue;
      const Vertex end = find_augmenting_path(root);
      if (end == kNone) {
        if (stop_on_exposed)
          return false;
        continue;
      }
      augment(end);
    }
    return true;
  }

  std::vector<Vertex> mates() const {
    std::vector<Vertex> out(n_);
    for (Vertex v = 0; v < n_; ++v)
      out[v] = mate_[v] == kNone ? v : mate_[v];
    return out;
  }

private:
  void greedy() {
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kNone)
        continue;
      for (Vertex u : adj_[v]) {
        if (mate_[u] == kNone) {
          mate_[v] = u;
          mate_[u] = v;
          break;
        }
      }
    }
  }

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::fill(on_path_.begin(), on_path_.end(), false);
    for (;;) {
      a = base_[a];
      on_path_[a] = true;
      if (mate_[a] == kNone)
        break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b])
        return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (Vertex v = 0; v < n_; ++v)
      base_[v] = v;
    in_tree_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to)
          continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const Vertex b = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]])
              continue;
            base_[i] = b;
            if (!in_tree_[i]) {
              in_tree_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone)
            return to;
          in_tree_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  void augment(Vertex v) {
    while (v != kNone) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
  std::vector<bool> on_path_;
};

} // namespace

std::vector<Vertex> maximum_matching(const Graph &g) {
  BlossomMatcher m(g);
  m.run(false);
  return m.mates();
}

std::optional<Matching> perfect_matching(const Graph &g) {
  if (g.order() % 2 != 0)
    return std::nullopt;
  BlossomMatcher m(g);
  if (!m.run(true))
    return std::nullopt;
  Matching out;
  const auto mates = m.mates();
  for (Vertex v = 0; v < g.order(); ++v)
    if (v < mates[v])
      out.edges.emplace_back(v, mates[v]);
  out.perfect = 2 * out.edges.size() == g.order();
  if (!out.perfect)
    return std::nullopt;
  return out;
}

} // namespace factorspec
