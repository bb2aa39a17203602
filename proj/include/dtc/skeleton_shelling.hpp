#pragma once

// Shellings of the largest pure skeleton of a doubled graph. The skeleton
// dimension is fixed by the strong independence number, and a complete
// r-source yields an explicit facet order: sort by out-degree profile at
// the sources, then by out-neighbor sets, then by labels. Cycles get the
// full trichotomy: shellable via an r-source, shellable via lexicographic
// order on a cyclic complex skeleton, or certified unshellable.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dtc/complex.hpp"
#include "dtc/graph.hpp"
#include "dtc/homology.hpp"
#include "dtc/shelling.hpp"

namespace dtc {

struct MaxSkeleton {
  int m = -2;      // dimension: n - r(g) - 1
  Complex skel;    // m-skeleton of the tree complex of the doubled graph
};

inline MaxSkeleton max_pure_skeleton(const SimpleGraph& g) {
  if (g.n() == 0) throw domain_error("empty graph");
  if (!is_connected(g)) throw domain_error("graph is not connected");
  int r = strongly_independent_number(g);
  int m = g.n() - r - 1;
  Complex full = directed_tree_complex(double_directed(g));
  MaxSkeleton out{m, skeleton(full, m)};
  if (!is_pure(out.skel))
    throw domain_error("skeleton purity violated");
  return out;
}

// Sorting key for skeleton facets: out-degree profile at the sources,
// out-neighbor sets, and serialized labels as the final tiebreak.
struct SkeletonShellingKey {
  std::vector<int> deg;                 // out-degree at each source
  std::vector<std::vector<int>> nbrs;   // out-neighbors at each source
  std::vector<std::string> labels;
};

inline SkeletonShellingKey skeleton_shelling_key(const Digraph& dd,
                                                 const Complex& cx,
                                                 const std::vector<int>& sources,
                                                 const Face& f) {
  SkeletonShellingKey key;
  key.deg.assign(sources.size(), 0);
  key.nbrs.assign(sources.size(), {});
  for (int e : f) {
    auto [src, dst] = dd.edges()[e];
    auto it = std::find(sources.begin(), sources.end(), src);
    if (it == sources.end()) continue;
    std::size_t i = it - sources.begin();
    ++key.deg[i];
    key.nbrs[i].push_back(dst);
  }
  for (auto& v : key.nbrs) std::sort(v.begin(), v.end());
  key.labels = face_labels(cx, f);
  return key;
}

inline bool skeleton_key_less(const SkeletonShellingKey& a,
                              const SkeletonShellingKey& b) {
  if (a.deg != b.deg) return a.deg > b.deg;  // larger degree profile first
  for (std::size_t i = 0; i < a.nbrs.size(); ++i) {
    if (a.nbrs[i] == b.nbrs[i]) continue;
    // first source with different neighbor sets: the facet containing the
    // smallest vertex of the symmetric difference goes first
    std::vector<int> sym;
    std::set_symmetric_difference(a.nbrs[i].begin(), a.nbrs[i].end(),
                                  b.nbrs[i].begin(), b.nbrs[i].end(),
                                  std::back_inserter(sym));
    int w = sym.front();
    return std::binary_search(a.nbrs[i].begin(), a.nbrs[i].end(), w);
  }
  return a.labels < b.labels;
}

struct RSourceShelling {
  std::vector<int> source;  // the complete r-source, ascending
  int m = -2;
  Complex skel;
  ShellingOrder order;
};

inline RSourceShelling r_source_skeleton_shelling(const SimpleGraph& g,
                                                  const std::vector<int>& a) {
  std::vector<int> src = a;
  std::sort(src.begin(), src.end());
  auto all = complete_r_sources(g);
  if (std::find(all.begin(), all.end(), src) == all.end())
    throw domain_error("not a complete r-source");

  Digraph dd = double_directed(g);
  MaxSkeleton ms = max_pure_skeleton(g);

  std::vector<Face> facets = ms.skel.facets();
  std::vector<SkeletonShellingKey> keys;
  keys.reserve(facets.size());
  for (const auto& f : facets)
    keys.push_back(skeleton_shelling_key(dd, ms.skel, src, f));
  std::vector<int> idx(facets.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&keys](int x, int y) {
    return skeleton_key_less(keys[x], keys[y]);
  });

  std::vector<Face> ordered;
  ordered.reserve(facets.size());
  for (int i : idx) ordered.push_back(facets[i]);

  // The all-edges-at-sources star facet has the maximal degree profile.
  Face star;
  for (int x : src)
    for (int v : g.neighbors(x)) star.push_back(dd.edge_index(x, v));
  std::sort(star.begin(), star.end());
  if (ordered.empty() || ordered.front() != star)
    throw domain_error("source star facet is not first in the order");

  auto res = verify_shelling(ms.skel, ordered);
  if (!is_valid(res)) throw domain_error("skeleton order failed verification");

  RSourceShelling out;
  out.source = std::move(src);
  out.m = ms.m;
  out.skel = std::move(ms.skel);
  out.order = std::get<ShellingOrder>(std::move(res));
  return out;
}

// Independence complex of the n-cycle with vertices labeled 1..n.
inline Complex cyclic_complex(int n) {
  if (n < 3) throw domain_error("cycle needs at least three vertices");
  SimpleGraph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return independency_complex(g);
}

struct CycleShellingResult {
  int n = 0;
  int residue = 0;      // n mod 3
  int m = -2;           // skeleton dimension used
  bool shellable = false;
  bool doubled = false; // true: complex lives on edges of the doubled cycle
  Complex complex;
  std::vector<int> source;  // used when residue == 0
  ShellingOrder order;      // set when shellable
  std::vector<std::pair<int, long long>> certificate;  // nonzero Betti rows
};

inline CycleShellingResult cycle_skeleton_shelling(int n) {
  if (n < 3) throw domain_error("cycle needs at least three vertices");
  CycleShellingResult out;
  out.n = n;
  out.residue = n % 3;
  int k = n / 3;

  if (out.residue == 0) {
    SimpleGraph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    std::vector<int> src;
    for (int i = 0; i < k; ++i) src.push_back(3 * i);  // vertices 1, 4, ...
    RSourceShelling rs = r_source_skeleton_shelling(g, src);
    out.m = rs.m;
    out.shellable = true;
    out.doubled = true;
    out.complex = std::move(rs.skel);
    out.source = std::move(rs.source);
    out.order = std::move(rs.order);
    return out;
  }

  int big = 2 * n;
  if (out.residue == 1) {
    out.m = 2 * k;
    out.complex = skeleton(cyclic_complex(big), out.m);
    std::vector<Face> ordered = out.complex.facets();  // vertex-id lex order
    auto res = verify_shelling(out.complex, ordered);
    if (!is_valid(res))
      throw domain_error("lexicographic cycle order failed verification");
    out.shellable = true;
    out.order = std::get<ShellingOrder>(std::move(res));
    return out;
  }

  out.m = 2 * k + 1;
  out.complex = skeleton(cyclic_complex(big), out.m);
  BettiVector bv = betti(out.complex);
  for (int dim = -1; dim <= bv.dim; ++dim)
    if (bv.at(dim)) out.certificate.emplace_back(dim, bv.at(dim));
  if (out.certificate.empty())
    throw domain_error("expected nonvanishing homology certificate");
  return out;
}

}  // namespace dtc
