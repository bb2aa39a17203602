#pragma once

// Leaf-elimination machinery for digraphs whose underlying graph is a
// tree: an explicit recursive shelling, the matching h-triangle
// recursion, generating facets, the product formula for acyclic
// digraphs, and the basic-tree decompositions that give the homotopy
// type of doubled trees as a wedge of spheres.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dtc/complex.hpp"
#include "dtc/graph.hpp"
#include "dtc/homology.hpp"
#include "dtc/shelling.hpp"

namespace dtc {

enum class LeafKind { a, b, c };  // a: only x->v, b: only v->x, c: both

struct LeafCase {
  int v = -1;               // first leaf in vertex order
  int x = -1;               // its unique neighbor
  LeafKind kind = LeafKind::a;
  std::vector<int> y_list;  // other in-neighbors of x
  int s = 0;                // how many y_i have a back edge x->y_i
};

namespace detail {

struct LeafStep {
  LeafCase info;
  int e_xv = -1;            // edge id of x->v when present
  int e_vx = -1;            // edge id of v->x when present
  std::vector<int> e_yx;    // edge ids y_i->x
  std::vector<int> e_xy;    // edge ids x->y_i, -1 when absent
};

// First leaf of the underlying forest spanned by the alive edges.
inline std::optional<LeafStep> first_leaf_step(const Digraph& d,
                                               const std::vector<char>& alive) {
  int n = d.n();
  std::vector<std::vector<int>> nbr(n);
  for (int e = 0; e < d.m(); ++e) {
    if (!alive[e]) continue;
    auto [u, w] = d.edges()[e];
    nbr[u].push_back(w);
    nbr[w].push_back(u);
  }
  for (auto& v : nbr) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  for (int v = 0; v < n; ++v) {
    if (nbr[v].size() != 1) continue;
    LeafStep st;
    st.info.v = v;
    int x = nbr[v][0];
    st.info.x = x;
    int exv = d.edge_index(x, v), evx = d.edge_index(v, x);
    if (exv >= 0 && alive[exv]) st.e_xv = exv;
    if (evx >= 0 && alive[evx]) st.e_vx = evx;
    if (st.e_xv >= 0 && st.e_vx < 0)
      st.info.kind = LeafKind::a;
    else if (st.e_xv < 0 && st.e_vx >= 0)
      st.info.kind = LeafKind::b;
    else
      st.info.kind = LeafKind::c;
    for (int e = 0; e < d.m(); ++e) {
      if (!alive[e]) continue;
      auto [u, w] = d.edges()[e];
      if (w != x || u == v) continue;
      st.info.y_list.push_back(u);
      st.e_yx.push_back(e);
      int exy = d.edge_index(x, u);
      exy = (exy >= 0 && alive[exy]) ? exy : -1;
      st.e_xy.push_back(exy);
      if (exy >= 0) ++st.info.s;
    }
    return st;
  }
  return std::nullopt;
}

inline Face with_edge(Face f, int e) {
  f.insert(std::upper_bound(f.begin(), f.end(), e), e);
  return f;
}

// (facet, restriction) pairs in shelling order, over alive edges.
inline std::vector<std::pair<Face, Face>> rec_shelling(
    const Digraph& d, std::vector<char>& alive) {
  auto step = first_leaf_step(d, alive);
  if (!step) return {{Face{}, Face{}}};
  std::vector<std::pair<Face, Face>> out;

  auto recurse_without = [&](const std::vector<int>& off) {
    for (int e : off) alive[e] = 0;
    auto sub = rec_shelling(d, alive);
    for (int e : off) alive[e] = 1;
    return sub;
  };

  if (step->info.kind == LeafKind::a) {
    for (auto& [f, r] : recurse_without({step->e_xv}))
      out.emplace_back(with_edge(std::move(f), step->e_xv), std::move(r));
    return out;
  }

  std::vector<int> base = {step->e_vx};
  if (step->info.kind == LeafKind::c) base.push_back(step->e_xv);
  std::vector<int> d0 = base;
  for (int e : step->e_yx) d0.push_back(e);

  if (step->info.kind == LeafKind::c) {
    for (auto& [f, r] : recurse_without(base))
      out.emplace_back(with_edge(std::move(f), step->e_xv), std::move(r));
    for (auto& [f, r] : recurse_without(d0))
      out.emplace_back(with_edge(std::move(f), step->e_vx),
                       with_edge(std::move(r), step->e_vx));
    return out;
  }

  // case b: facets containing v->x first, then one block per y_p
  for (auto& [f, r] : recurse_without(d0))
    out.emplace_back(with_edge(std::move(f), step->e_vx), std::move(r));
  for (std::size_t p = 0; p < step->e_yx.size(); ++p) {
    std::vector<int> dp = d0;
    if (step->e_xy[p] >= 0) dp.push_back(step->e_xy[p]);
    int eyx = step->e_yx[p];
    for (auto& [f, r] : recurse_without(dp))
      out.emplace_back(with_edge(std::move(f), eyx),
                       with_edge(std::move(r), eyx));
  }
  return out;
}

inline Triangle rec_h_triangle(const Digraph& d, std::vector<char>& alive) {
  auto step = first_leaf_step(d, alive);
  Triangle t;
  if (!step) {
    t.add(0, 0, 1);
    return t;
  }

  auto recurse_without = [&](const std::vector<int>& off) {
    for (int e : off) alive[e] = 0;
    auto sub = rec_h_triangle(d, alive);
    for (int e : off) alive[e] = 1;
    return sub;
  };
  auto add_shifted = [&t](const Triangle& sub, int dj) {
    for (const auto& [ij, v] : sub.cells) t.add(ij.first + 1, ij.second + dj, v);
  };

  if (step->info.kind == LeafKind::a) {
    add_shifted(recurse_without({step->e_xv}), 0);
    return t;
  }

  std::vector<int> base = {step->e_vx};
  if (step->info.kind == LeafKind::c) base.push_back(step->e_xv);
  std::vector<int> d0 = base;
  for (int e : step->e_yx) d0.push_back(e);

  if (step->info.kind == LeafKind::c) {
    add_shifted(recurse_without(base), 0);
    add_shifted(recurse_without(d0), 1);
    return t;
  }

  add_shifted(recurse_without(d0), 0);
  for (std::size_t p = 0; p < step->e_yx.size(); ++p) {
    std::vector<int> dp = d0;
    if (step->e_xy[p] >= 0) dp.push_back(step->e_xy[p]);
    add_shifted(recurse_without(dp), 1);
  }
  return t;
}

inline std::vector<Face> rec_generating(const Digraph& d,
                                        std::vector<char>& alive) {
  auto step = first_leaf_step(d, alive);
  if (!step) return {Face{}};

  auto recurse_without = [&](const std::vector<int>& off) {
    for (int e : off) alive[e] = 0;
    auto sub = rec_generating(d, alive);
    for (int e : off) alive[e] = 1;
    return sub;
  };

  if (step->info.kind == LeafKind::a) return {};

  std::vector<int> base = {step->e_vx};
  if (step->info.kind == LeafKind::c) base.push_back(step->e_xv);
  std::vector<int> d0 = base;
  for (int e : step->e_yx) d0.push_back(e);

  std::vector<Face> out;
  if (step->info.kind == LeafKind::c) {
    for (auto& f : recurse_without(d0))
      out.push_back(with_edge(std::move(f), step->e_vx));
    return out;
  }

  // Every y_p block contributes, with or without a back edge x->y_p:
  // the restriction gains y_p->x either way.
  for (std::size_t p = 0; p < step->e_yx.size(); ++p) {
    std::vector<int> dp = d0;
    if (step->e_xy[p] >= 0) dp.push_back(step->e_xy[p]);
    for (auto& f : recurse_without(dp))
      out.push_back(with_edge(std::move(f), step->e_yx[p]));
  }
  return out;
}

inline void require_tree_shape(const Digraph& d) {
  if (!is_essentially_tree(d))
    throw domain_error("underlying graph is not a tree");
  if (d.m() == 0) throw domain_error("need at least one edge");
}

}  // namespace detail

// The first-leaf analysis driving the recursion, on the full digraph.
inline LeafCase analyze_first_leaf(const Digraph& d) {
  detail::require_tree_shape(d);
  std::vector<char> alive(d.m(), 1);
  return detail::first_leaf_step(d, alive)->info;
}

inline ShellingOrder recursive_shelling(const Digraph& d) {
  detail::require_tree_shape(d);
  std::vector<char> alive(d.m(), 1);
  ShellingOrder out;
  for (auto& [f, r] : detail::rec_shelling(d, alive)) {
    out.types.push_back(static_cast<int>(r.size()));
    out.facets.push_back(std::move(f));
    out.restrictions.push_back(std::move(r));
  }
  return out;
}

inline HTriangle h_triangle_via_recursion(const Digraph& d) {
  detail::require_tree_shape(d);
  std::vector<char> alive(d.m(), 1);
  return detail::rec_h_triangle(d, alive);
}

inline std::vector<Face> generating_facets_tree(const Digraph& d) {
  detail::require_tree_shape(d);
  std::vector<char> alive(d.m(), 1);
  auto out = detail::rec_generating(d, alive);
  std::sort(out.begin(), out.end());
  return out;
}

// Wedge profile of an acyclic digraph: the product of (in-degree - 1)
// over vertices with incoming edges, in dimension |V| - |R| - 1.
inline WedgeProfile dag_homotopy(const Digraph& d) {
  int n = d.n();
  std::vector<int> indeg(n, 0);
  for (const auto& e : d.edges()) ++indeg[e.dst];
  std::vector<int> order;
  std::vector<int> left = indeg;
  for (int v = 0; v < n; ++v)
    if (left[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : d.out_neighbors(order[i]))
      if (--left[w] == 0) order.push_back(w);
  if (static_cast<int>(order.size()) != n)
    throw domain_error("digraph has a directed cycle");

  long long product = 1;
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0)
      ++roots;
    else
      product *= indeg[v] - 1;
  }
  WedgeProfile out;
  if (product > 0) out[n - roots - 1] = product;
  return out;
}

inline bool is_basic_tree(const SimpleGraph& t) {
  if (!is_tree(t)) throw domain_error("not a tree");
  int n = t.n();
  if (n == 2) return true;
  if (n % 2) return false;
  std::vector<int> leaf_nbrs(n, 0);
  int leaves = 0;
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) != 1) continue;
    ++leaves;
    ++leaf_nbrs[t.neighbors(v)[0]];
  }
  if (leaves != n / 2) return false;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) > 1 && leaf_nbrs[v] != 1) return false;
  return true;
}

struct BasicDecomposition {
  std::vector<std::vector<int>> pieces;  // vertex sets, in removal order
  Face generating;                       // edge ids in double_directed(t)
};

struct DecompositionResult {
  Digraph doubled;
  std::vector<BasicDecomposition> decompositions;
  std::map<int, long long> mu;  // piece count -> decompositions
};

namespace detail {

struct DecompSearch {
  const SimpleGraph* t;
  const Digraph* dd;
  std::vector<BasicDecomposition>* out;
  std::vector<std::vector<int>> pieces;
  Face edges;

  int alive_degree(const std::vector<char>& alive, int v) const {
    int deg = 0;
    for (int w : t->neighbors(v))
      if (alive[w]) ++deg;
    return deg;
  }

  void record() {
    Face g = edges;
    std::sort(g.begin(), g.end());
    out->push_back({pieces, std::move(g)});
  }

  void run(std::vector<char>& alive) {
    int n = t->n();
    int vprime = -1;
    bool any_alive = false;
    for (int v = 0; v < n && vprime < 0; ++v) {
      if (!alive[v]) continue;
      any_alive = true;
      if (alive_degree(alive, v) == 1) vprime = v;
    }
    if (!any_alive) {
      record();
      return;
    }
    if (vprime < 0) return;  // cannot happen for forests; defensive

    // component of the first leaf
    std::vector<int> comp;
    std::vector<char> in_comp(n, 0);
    comp.push_back(vprime);
    in_comp[vprime] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : t->neighbors(comp[i]))
        if (alive[w] && !in_comp[w]) {
          in_comp[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    int csize = static_cast<int>(comp.size());

    // all connected vertex subsets of the component containing vprime
    for (int mask = 0; mask < (1 << csize); ++mask) {
      std::vector<int> piece;
      for (int i = 0; i < csize; ++i)
        if (mask & (1 << i)) piece.push_back(comp[i]);
      if (piece.size() < 2) continue;
      if (!std::binary_search(piece.begin(), piece.end(), vprime)) continue;
      if (csize > 2 && piece.size() == 2) continue;
      if (!try_piece(alive, piece)) continue;
    }
  }

  // Validates the piece and recurses; returns false when rejected.
  bool try_piece(std::vector<char>& alive, const std::vector<int>& piece) {
    std::vector<char> in_piece(t->n(), 0);
    for (int v : piece) in_piece[v] = 1;

    // induced degrees, connectivity, and the basic-tree shape
    std::vector<int> pdeg(piece.size(), 0);
    int pedges = 0;
    for (std::size_t i = 0; i < piece.size(); ++i)
      for (int w : t->neighbors(piece[i]))
        if (in_piece[w]) ++pdeg[i], (piece[i] < w ? ++pedges : 0);
    if (pedges != static_cast<int>(piece.size()) - 1) return false;  // not connected
    if (piece.size() > 2) {
      if (piece.size() % 2) return false;
      int leaves = 0;
      std::vector<int> leaf_at(t->n(), 0);
      for (std::size_t i = 0; i < piece.size(); ++i)
        if (pdeg[i] == 1) {
          ++leaves;
          for (int w : t->neighbors(piece[i]))
            if (in_piece[w]) ++leaf_at[w];
        }
      if (leaves != static_cast<int>(piece.size()) / 2) return false;
      for (std::size_t i = 0; i < piece.size(); ++i)
        if (pdeg[i] > 1 && leaf_at[piece[i]] != 1) return false;
      // non-leaves must use all their edges in the working forest
      for (std::size_t i = 0; i < piece.size(); ++i)
        if (pdeg[i] > 1 && pdeg[i] != alive_degree(alive, piece[i]))
          return false;
    }

    // peripheral orientation: each leaf of the piece points at its
    // unique neighbor inside; a 2-vertex piece points away from the
    // first leaf
    Face added;
    if (piece.size() == 2) {
      int a = piece[0], b = piece[1];
      added.push_back(dd->edge_index(a, b));
    } else {
      for (std::size_t i = 0; i < piece.size(); ++i) {
        if (pdeg[i] != 1) continue;
        for (int w : t->neighbors(piece[i]))
          if (in_piece[w]) added.push_back(dd->edge_index(piece[i], w));
      }
    }

    std::vector<int> consumed;
    for (std::size_t i = 0; i < piece.size(); ++i)
      if (pdeg[i] == alive_degree(alive, piece[i])) consumed.push_back(piece[i]);

    for (int v : consumed) alive[v] = 0;
    pieces.push_back(piece);
    for (int e : added) edges.push_back(e);
    run(alive);
    for (std::size_t i = 0; i < added.size(); ++i) edges.pop_back();
    pieces.pop_back();
    for (int v : consumed) alive[v] = 1;
    return true;
  }
};

}  // namespace detail

inline DecompositionResult enumerate_basic_decompositions(
    const SimpleGraph& t) {
  if (!is_tree(t)) throw domain_error("not a tree");
  if (t.n() < 2) throw domain_error("need at least two vertices");
  DecompositionResult res;
  res.doubled = double_directed(t);

  detail::DecompSearch search{&t, &res.doubled, &res.decompositions, {}, {}};
  std::vector<char> alive(t.n(), 1);
  search.run(alive);

  for (const auto& dec : res.decompositions)
    ++res.mu[static_cast<int>(dec.pieces.size())];
  return res;
}

// Wedge profile of the doubled tree: mu_m spheres in dimension
// (n + m - 3) / 2 for each piece count m.
inline WedgeProfile tree_homotopy(const SimpleGraph& t) {
  DecompositionResult res = enumerate_basic_decompositions(t);
  int n = t.n();
  WedgeProfile out;
  for (const auto& [m, count] : res.mu) {
    if ((n + m - 3) % 2)
      throw domain_error("decomposition parity violated");
    out[(n + m - 3) / 2] += count;
  }
  return out;
}

struct ExtremalRow {
  SimpleGraph tree;
  WedgeProfile profile;
};

struct ExtremalReport {
  int n = 0;
  std::vector<ExtremalRow> rows;
  long long contractible = 0;  // trees with empty profile
  int max_top_dim = -2;        // over non-contractible trees
  int claimed_max_dim = 0;     // ceil((n-2)/2)
  bool max_claim_holds = false;
  int min_nontrivial_dim = -2;  // smallest dimension seen anywhere
  int second_claim_dim = 0;     // n - floor(n/3) - 2, reported as data
};

inline ExtremalReport extremal_dims_report(
    int n, const std::vector<SimpleGraph>& all_trees) {
  if (n < 2 || n > 9) throw domain_error("tree size out of range");
  ExtremalReport rep;
  rep.n = n;
  rep.claimed_max_dim = (n - 1) / 2;  // = ceil((n-2)/2)
  rep.second_claim_dim = n - n / 3 - 2;
  bool any_min = false;
  for (const auto& t : all_trees) {
    if (t.n() != n) throw domain_error("tree has the wrong vertex count");
    ExtremalRow row{t, tree_homotopy(t)};
    if (row.profile.empty()) {
      ++rep.contractible;
    } else {
      rep.max_top_dim = std::max(rep.max_top_dim, row.profile.rbegin()->first);
      int lo = row.profile.begin()->first;
      if (!any_min || lo < rep.min_nontrivial_dim) rep.min_nontrivial_dim = lo;
      any_min = true;
    }
    rep.rows.push_back(std::move(row));
  }
  rep.max_claim_holds = rep.max_top_dim == rep.claimed_max_dim;
  return rep;
}

}  // namespace dtc
