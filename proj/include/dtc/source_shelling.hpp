#pragma once

// Shellings of tree complexes built around a complete source c: layer the
// spanning trees by how many edges leave c, read off restrictions without
// any search, and describe the sphere attached to each generating facet.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "dtc/complex.hpp"
#include "dtc/graph.hpp"
#include "dtc/shelling.hpp"

namespace dtc {

struct SourceShelling {
  int source = -1;
  std::vector<std::vector<Face>> layers;  // layer i: facets with n-1-i edges at c
  ShellingOrder order;                    // layers concatenated in index order
};

namespace detail {

inline int out_degree_in(const Digraph& d, const Face& t, int v) {
  int deg = 0;
  for (int e : t)
    if (d.edges()[e].src == v) ++deg;
  return deg;
}

inline bool is_complete_source(const Digraph& d, int c) {
  auto cs = complete_sources(d);
  return std::find(cs.begin(), cs.end(), c) != cs.end();
}

}  // namespace detail

// Layered shelling of the tree complex of d using complete source c.
// Facets are spanning trees; layer i holds those with n-1-i edges out of
// c, and the restriction of a tree is its set of edges not leaving c.
inline SourceShelling complete_source_shelling(const Digraph& d, int c) {
  if (!detail::is_complete_source(d, c))
    throw domain_error("vertex is not a complete source");
  Complex cx = directed_tree_complex(d);
  int n = d.n();

  SourceShelling out;
  out.source = c;
  out.layers.assign(n, {});
  for (const auto& t : cx.facets()) {
    if (static_cast<int>(t.size()) != n - 1)
      throw domain_error("tree complex of a complete-source digraph is pure");
    int layer = n - 1 - detail::out_degree_in(d, t, c);
    out.layers[layer].push_back(t);
  }
  while (!out.layers.empty() && out.layers.back().empty())
    out.layers.pop_back();

  for (auto& layer : out.layers) {
    std::sort(layer.begin(), layer.end(), [&cx](const Face& a, const Face& b) {
      return face_labels(cx, a) < face_labels(cx, b);
    });
    for (const auto& t : layer) {
      Face r;
      for (int e : t)
        if (d.edges()[e].src != c) r.push_back(e);
      std::sort(r.begin(), r.end());
      out.order.facets.push_back(t);
      out.order.types.push_back(static_cast<int>(r.size()));
      out.order.restrictions.push_back(std::move(r));
    }
  }
  return out;
}

// h-vector of the tree complex of the n-vertex complete digraph:
// h_k = C(n-1, k) * (n-1)^k.
inline HVector gn_h_vector(int n) {
  if (n < 1) throw domain_error("need at least one vertex");
  HVector h(n, 0);
  long long pw = 1;
  for (int k = 0; k < n; ++k) {
    h[k] = detail::binom(n - 1, k) * pw;
    pw *= n - 1;
  }
  return h;
}

// Facets whose restriction equals the whole facet: spanning trees with no
// edge leaving c.
inline std::vector<Face> generating_facets_source(const Digraph& d, int c) {
  if (!detail::is_complete_source(d, c))
    throw domain_error("vertex is not a complete source");
  Complex cx = directed_tree_complex(d);
  std::vector<Face> out;
  for (const auto& t : cx.facets())
    if (detail::out_degree_in(d, t, c) == 0) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

// Sphere attached to a generating facet t: the boundary of the cycle
// sigma (root path of t closed up through c) joined with one suspension
// pair of edges per vertex off the path.
struct SphereDescriptor {
  Face tree;                              // the generating facet
  int k = 0;                              // root-path edge count
  Face sigma;                             // directed cycle, k+1 edges
  std::vector<std::pair<int, int>> pairs; // (tree edge z->y, source edge c->y)
  Complex sphere;                         // (k+1)*2^r facets, dim n-2
};

inline SphereDescriptor sphere_S_T(const Digraph& d, int c, const Face& t) {
  if (!detail::is_complete_source(d, c))
    throw domain_error("vertex is not a complete source");
  int n = d.n();
  if (n < 2) throw domain_error("sphere needs at least two vertices");
  if (static_cast<int>(t.size()) != n - 1 || !is_directed_forest(d, t))
    throw domain_error("not a facet of the tree complex");
  if (detail::out_degree_in(d, t, c) != 0)
    throw domain_error("facet is not generating: it has edges out of the source");

  std::vector<int> parent_edge(n, -1);
  for (int e : t) parent_edge[d.edges()[e].dst] = e;

  SphereDescriptor out;
  out.tree = t;

  // Root path x_1 -> ... -> x_k -> c, collected by walking parents from c.
  std::vector<int> path_edges;  // edge into c first
  int v = c;
  while (parent_edge[v] != -1) {
    path_edges.push_back(parent_edge[v]);
    v = d.edges()[parent_edge[v]].src;
  }
  std::reverse(path_edges.begin(), path_edges.end());  // from the root down
  out.k = static_cast<int>(path_edges.size());

  int x1 = v;  // root of t
  std::vector<char> on_path(n, 0);
  on_path[c] = 1;
  for (int e : path_edges) on_path[d.edges()[e].src] = 1;

  out.sigma = path_edges;
  int close = d.edge_index(c, x1);
  if (close < 0) throw domain_error("source is missing an edge to the tree root");
  out.sigma.push_back(close);
  std::sort(out.sigma.begin(), out.sigma.end());

  for (int y = 0; y < n; ++y) {
    if (on_path[y]) continue;
    int ce = d.edge_index(c, y);
    if (ce < 0) throw domain_error("source is missing an edge off the path");
    out.pairs.emplace_back(parent_edge[y], ce);
  }

  // Boundary of sigma joined with each independent pair choice.
  std::vector<Face> facets;
  int r = static_cast<int>(out.pairs.size());
  for (std::size_t omit = 0; omit < out.sigma.size(); ++omit) {
    Face base;
    for (std::size_t i = 0; i < out.sigma.size(); ++i)
      if (i != omit) base.push_back(out.sigma[i]);
    for (int mask = 0; mask < (1 << r); ++mask) {
      Face f = base;
      for (int i = 0; i < r; ++i)
        f.push_back(mask & (1 << i) ? out.pairs[i].second : out.pairs[i].first);
      std::sort(f.begin(), f.end());
      facets.push_back(std::move(f));
    }
  }
  std::vector<std::string> universe;
  for (int e = 0; e < d.m(); ++e) universe.push_back(d.edge_label(e));
  out.sphere = Complex(std::move(universe), std::move(facets));
  return out;
}

// One row per facet of the tree complex: the generating facet whose
// sphere contains it, found by rerouting edges out of c to a second
// complete source when necessary.
struct CoverRow {
  Face facet;
  Face generating;
  bool covered = false;
};

struct CoverReport {
  int source = -1;
  int second_source = -1;
  std::vector<CoverRow> rows;
  bool all_covered = false;
};

inline CoverReport union_cover_check(const Digraph& d) {
  auto sources = complete_sources(d);
  if (sources.size() < 2)
    throw domain_error("union cover needs two complete sources");
  int c = sources[0], c2 = sources[1];
  int n = d.n();
  Complex cx = directed_tree_complex(d);

  CoverReport rep;
  rep.source = c;
  rep.second_source = c2;
  rep.all_covered = true;

  for (const auto& t : cx.facets()) {
    CoverRow row;
    row.facet = t;

    Face gen = t;
    if (detail::out_degree_in(d, t, c) > 0) {
      std::vector<int> parent_edge(n, -1);
      for (int e : t) parent_edge[d.edges()[e].dst] = e;
      auto parent = [&](int v) {
        return parent_edge[v] == -1 ? -1 : d.edges()[parent_edge[v]].src;
      };
      int root = c2;
      while (parent(root) != -1) root = parent(root);

      // Is c2 below c in t? If so, through which out-edge of c?
      int via = -1;
      for (int v = c2; parent(v) != -1; v = parent(v))
        if (parent(v) == c) {
          via = v;
          break;
        }

      gen.clear();
      for (int e : t) {
        if (d.edges()[e].src != c) {
          gen.push_back(e);
          continue;
        }
        int y = d.edges()[e].dst;
        int re = y == via ? d.edge_index(c2, root) : d.edge_index(c2, y);
        if (re < 0) throw domain_error("second source is missing a rerouted edge");
        gen.push_back(re);
      }
      std::sort(gen.begin(), gen.end());
      if (!is_directed_forest(d, gen) ||
          static_cast<int>(gen.size()) != n - 1 ||
          detail::out_degree_in(d, gen, c) != 0)
        throw domain_error("rerouted tree is not a generating facet");
    }

    row.generating = gen;
    SphereDescriptor s = sphere_S_T(d, c, gen);
    row.covered = s.sphere.has_facet(t);
    rep.all_covered = rep.all_covered && row.covered;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// Census of sphere wedge summands for the complete digraph on n vertices,
// grouped by root-path length k. Each sphere has dimension n-2 and sits
// over a generating facet whose base cycle uses k tree edges; folds is
// the number of suspension pairs.
struct CensusRow {
  int k = 0;
  long long count = 0;
  int folds = 0;     // suspension pairs applied
  int base_dim = 0;  // dimension of the boundary-of-cycle base, k-1
};

inline std::vector<CensusRow> gn_sphere_census(int n) {
  if (n < 2) throw domain_error("census needs at least two vertices");
  std::vector<CensusRow> rows;
  for (int k = 1; k <= n - 1; ++k) {
    long long falling = 1;
    for (int i = 0; i < k; ++i) falling *= n - 1 - i;
    long long count;
    if (n - k - 2 >= 0) {
      long long pw = 1;
      for (int i = 0; i < n - k - 2; ++i) pw *= n - 1;
      count = falling * k * pw;
    } else {
      count = falling * k / (n - 1);  // k = n-1: exactly (n-1)!
    }
    rows.push_back({k, count, n - k - 1, k - 1});
  }
  return rows;
}

}  // namespace dtc
