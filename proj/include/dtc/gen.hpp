#pragma once

// Exhaustive generators for small test corpora: tree isomorphism classes
// up to 9 vertices (grown leaf by leaf, deduplicated by canonical form)
// and connected graph classes up to 6 vertices (edge masks deduplicated
// by the minimum over vertex permutations).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dtc/error.hpp"
#include "dtc/graph.hpp"

namespace dtc {
namespace detail {

inline std::string ahu_code(const std::vector<std::vector<int>>& adj, int v,
                            int parent) {
  std::vector<std::string> child;
  for (int w : adj[v])
    if (w != parent) child.push_back(ahu_code(adj, w, v));
  std::sort(child.begin(), child.end());
  std::string out = "(";
  for (const auto& s : child) out += s;
  out += ")";
  return out;
}

inline std::string tree_canonical(const std::vector<std::pair<int, int>>& edges,
                                  int n) {
  if (n == 1) return "()";
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // peel leaves to find the one or two central vertices
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<int> layer;
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      gone[v] = 1;
      --remaining;
      for (int w : adj[v])
        if (!gone[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) centers.push_back(v);
  if (centers.size() == 1) return ahu_code(adj, centers[0], -1);
  std::string s1 = ahu_code(adj, centers[0], centers[1]);
  std::string s2 = ahu_code(adj, centers[1], centers[0]);
  if (s2 < s1) std::swap(s1, s2);
  return "[" + s1 + s2 + "]";
}

inline SimpleGraph graph_from_edges(const std::vector<std::pair<int, int>>& edges,
                                    int n) {
  SimpleGraph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(std::to_string(v));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace detail

// One representative per tree isomorphism class on n vertices.
inline std::vector<SimpleGraph> all_trees(int n) {
  if (n < 1 || n > 9) throw domain_error("tree generator supports 1..9 vertices");
  std::vector<std::vector<std::pair<int, int>>> level = {{}};
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<std::pair<int, int>>> next;
    std::set<std::string> seen;
    for (const auto& edges : level)
      for (int v = 0; v < k; ++v) {
        auto grown = edges;
        grown.emplace_back(v, k);
        if (seen.insert(detail::tree_canonical(grown, k + 1)).second)
          next.push_back(std::move(grown));
      }
    level = std::move(next);
  }
  std::vector<SimpleGraph> out;
  out.reserve(level.size());
  for (const auto& edges : level)
    out.push_back(detail::graph_from_edges(edges, n));
  return out;
}

// One representative per connected graph isomorphism class on n vertices.
inline std::vector<SimpleGraph> all_connected_graphs(int n) {
  if (n < 1 || n > 6)
    throw domain_error("graph generator supports 1..6 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  int np = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> pair_idx(n, std::vector<int>(n, -1));
  for (int e = 0; e < np; ++e) {
    pair_idx[pairs[e].first][pairs[e].second] = e;
    pair_idx[pairs[e].second][pairs[e].first] = e;
  }

  // bit e of a permuted mask comes from bit edge_map[p][e]
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> edge_map;
  do {
    std::vector<int> m(np);
    for (int e = 0; e < np; ++e)
      m[pair_idx[perm[pairs[e].first]][perm[pairs[e].second]]] = e;
    edge_map.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<SimpleGraph> out;
  if (n == 1) {
    out.push_back(detail::graph_from_edges({}, 1));
    return out;
  }
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    // connectivity via bitset reachability over vertices
    std::uint32_t reach = 1, prev = 0;
    while (reach != prev) {
      prev = reach;
      for (int e = 0; e < np; ++e) {
        if (!(mask & (1u << e))) continue;
        auto [u, v] = pairs[e];
        if (reach & (1u << u)) reach |= 1u << v;
        if (reach & (1u << v)) reach |= 1u << u;
      }
    }
    if (reach != (1u << n) - 1) continue;

    bool canonical = true;
    for (const auto& m : edge_map) {
      std::uint32_t img = 0;
      for (int e = 0; e < np; ++e)
        if (mask & (1u << m[e])) img |= 1u << e;
      if (img < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;

    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < np; ++e)
      if (mask & (1u << e)) edges.push_back(pairs[e]);
    out.push_back(detail::graph_from_edges(edges, n));
  }
  return out;
}

}  // namespace dtc
