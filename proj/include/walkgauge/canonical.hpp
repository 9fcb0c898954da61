#ifndef WALKGAUGE_CANONICAL_HPP
#define WALKGAUGE_CANONICAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/graph_io.hpp"
#include "walkgauge/metrics.hpp"
#include "walkgauge/version.hpp"

namespace walkgauge {

namespace detail {

// Canonical-form search for small graphs (the certificate ceiling keeps n
// tiny, so adjacency rows fit in machine words).
//
// Ordered colorings are refined to the coarsest equitable partition, then a
// vertex of the first non-singleton class is individualized and the search
// recurses; every fully discrete coloring yields one candidate adjacency
// encoding and the lexicographically smallest encoding wins. All tie-breaking
// uses only isomorphism-invariant data (initial distance signatures, class
// order, neighbor-color multisets), so the winning encoding is a true
// isomorphism-class key. Within the class being individualized, vertices with
// identical neighborhoods (modulo each other) are interchangeable by an
// automorphism, so only one of each such group is branched on.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.n()) {
    adj_mask_.assign(n_, 0);
    for (const Edge& e : g.edges()) {
      adj_mask_[e.u] |= uint64_t{1} << e.v;
      adj_mask_[e.v] |= uint64_t{1} << e.u;
    }
  }

  std::vector<int> run() {
    auto dist = shortest_distance_matrix(g_);
    std::vector<std::pair<std::vector<int>, int>> keyed(n_);
    for (int v = 0; v < n_; ++v) {
      std::vector<int> key = dist[v];
      std::sort(key.begin(), key.end());
      key.insert(key.begin(), g_.degree(v));
      keyed[v] = {std::move(key), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [key, v] : keyed) rank.emplace(key, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    std::vector<int> color(n_);
    for (const auto& [key, v] : keyed) color[v] = rank[key];

    search(color);
    return best_order_;
  }

private:
  void search(std::vector<int> color) {
    refine(color);
    int target = pick_class(color);
    if (target < 0) {
      consider_leaf(color);
      return;
    }
    std::vector<int> members;
    for (int v = 0; v < n_; ++v)
      if (color[v] == target) members.push_back(v);

    for (int v : members) {
      // Skip v if an earlier member u is swappable with it: N(u) and N(v)
      // agree outside {u,v}, so the transposition (u v) is an automorphism.
      bool dup = false;
      for (int u : members) {
        if (u >= v) break;
        uint64_t outside = ~((uint64_t{1} << u) | (uint64_t{1} << v));
        if ((adj_mask_[u] & outside) == (adj_mask_[v] & outside)) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      std::vector<int> child(color);
      for (int u : members)
        if (u != v) ++child[u];
      for (int u = 0; u < n_; ++u)
        if (color[u] > target) ++child[u];
      search(std::move(child));
    }
  }

  // Coarsest equitable refinement of an ordered coloring: repeatedly re-key
  // every vertex by (current color, sorted multiset of neighbor colors) and
  // renumber classes in lexicographic key order until stable.
  void refine(std::vector<int>& color) const {
    for (;;) {
      std::map<std::vector<int>, int> rank;
      std::vector<std::vector<int>> key(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<int> k;
        k.reserve(g_.degree(v) + 1);
        k.push_back(color[v]);
        for (int u : g_.neighbors(v)) k.push_back(color[u]);
        std::sort(k.begin() + 1, k.end());
        rank.emplace(k, 0);
        key[v] = std::move(k);
      }
      if (static_cast<int>(rank.size()) == class_count(color)) return;
      int next = 0;
      for (auto& [k, r] : rank) r = next++;
      for (int v = 0; v < n_; ++v) color[v] = rank[key[v]];
    }
  }

  static int class_count(const std::vector<int>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  int pick_class(const std::vector<int>& color) const {
    std::vector<int> size(class_count(color), 0);
    for (int c : color) ++size[c];
    for (int c = 0; c < static_cast<int>(size.size()); ++c)
      if (size[c] >= 2) return c;
    return -1;
  }

  void consider_leaf(const std::vector<int>& color) {
    std::vector<int> order(n_);  // order[new] = old
    for (int v = 0; v < n_; ++v) order[color[v]] = v;
    std::string body;
    int bit = 5;
    char acc = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        if (adj_mask_[order[i]] >> order[j] & 1) acc |= static_cast<char>(1 << bit);
        if (--bit < 0) {
          body.push_back(static_cast<char>(acc + 63));
          acc = 0;
          bit = 5;
        }
      }
    if (n_ >= 2 && bit != 5) body.push_back(static_cast<char>(acc + 63));
    if (best_order_.empty() || body < best_body_) {
      best_body_ = std::move(body);
      best_order_ = order;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<uint64_t> adj_mask_;
  std::string best_body_;
  std::vector<int> best_order_;
};

}  // namespace detail

// Canonical relabeling map old -> new: isomorphic graphs map onto the same
// adjacency matrix. Guarded by a size ceiling because the search is
// exponential in the worst case.
inline std::vector<int> canonical_labeling(const Graph& g, int max_n = kCertificateLimit) {
  if (g.n() > max_n)
    throw SizeLimitError("certificate limited to " + std::to_string(max_n) +
                         " vertices, got " + std::to_string(g.n()));
  detail::CanonicalSearch search(g);
  std::vector<int> order = search.run();  // order[new] = old
  std::vector<int> new_label(g.n());
  for (int pos = 0; pos < g.n(); ++pos) new_label[order[pos]] = pos;
  return new_label;
}

// Isomorphism-class key: the graph6 string of the canonically relabeled graph.
// Two graphs (within the size ceiling) are isomorphic iff their certificates
// are equal strings.
inline std::string canonical_certificate(const Graph& g, int max_n = kCertificateLimit) {
  std::vector<int> new_label = canonical_labeling(g, max_n);
  return graph6_encode(relabel(g, new_label));
}

}  // namespace walkgauge

#endif
