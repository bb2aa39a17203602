#pragma once

// Brute-force reference implementations the tests compare against. Every
// routine here favours obviousness over speed and is only ever run on
// small inputs.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <unordered_map>
#include <vector>

#include "dtc/dtc.hpp"

namespace oracle {

// All maximal directed forests of d as sorted edge-id sets, found by
// subset recursion with supersets of non-forests pruned.
inline std::vector<dtc::Face> maximal_forests(const dtc::Digraph& d) {
  std::vector<dtc::Face> forests;
  dtc::Face cur;
  auto rec = [&](auto&& self, int next) -> void {
    forests.push_back(cur);
    for (int e = next; e < d.m(); ++e) {
      cur.push_back(e);
      if (dtc::is_directed_forest(d, cur)) self(self, e + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(forests.begin(), forests.end());
  std::vector<dtc::Face> maximal;
  for (const auto& f : forests) {
    bool dominated = false;
    for (const auto& g : forests)
      if (f != g && dtc::face_subset(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }
  return maximal;
}

// All maximal independent sets of g as sorted id sets.
inline std::vector<dtc::Face> maximal_independent_sets(
    const dtc::SimpleGraph& g) {
  std::vector<dtc::Face> indep;
  dtc::Face cur;
  auto ok = [&g, &cur](int v) {
    for (int u : cur)
      if (g.has_edge(u, v)) return false;
    return true;
  };
  auto rec = [&](auto&& self, int next) -> void {
    indep.push_back(cur);
    for (int v = next; v < g.n(); ++v)
      if (ok(v)) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
  };
  rec(rec, 0);
  std::vector<dtc::Face> maximal;
  for (const auto& f : indep) {
    bool dominated = false;
    for (const auto& h : indep)
      if (f != h && dtc::face_subset(f, h)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

// The defining property of a shelling restated on the whole face lattice:
// the intervals [R_j, F_j] partition the faces of c. Checks both the
// per-face membership count and the total size bookkeeping.
inline bool interval_partition(const dtc::Complex& c,
                               const dtc::ShellingOrder& o) {
  auto faces = dtc::enumerate_faces(c);
  std::unordered_map<dtc::Face, int, dtc::FaceHash> hits;
  hits.reserve(faces.size());
  for (const auto& [f, unused] : faces) hits[f] = 0;
  unsigned long long visited = 0;
  for (std::size_t j = 0; j < o.facets.size(); ++j) {
    if (!dtc::face_subset(o.restrictions[j], o.facets[j])) return false;
    dtc::Face extra;
    std::set_difference(o.facets[j].begin(), o.facets[j].end(),
                        o.restrictions[j].begin(), o.restrictions[j].end(),
                        std::back_inserter(extra));
    if (extra.size() > 30) return false;
    // Walk the interval [R_j, F_j] member by member.
    for (std::uint32_t mask = 0; mask < (1u << extra.size()); ++mask) {
      dtc::Face f = o.restrictions[j];
      for (std::size_t b = 0; b < extra.size(); ++b)
        if (mask & (1u << b)) f.push_back(extra[b]);
      std::sort(f.begin(), f.end());
      auto it = hits.find(f);
      if (it == hits.end()) return false;     // interval leaves the complex
      if (++it->second > 1) return false;     // intervals overlap
      ++visited;
    }
  }
  // No face twice and as many visits as faces: each face exactly once.
  return visited == faces.size();
}

// True when no induced cycle of length >= 4 exists, i.e. every chordless
// cycle of g is a triangle. Scans vertex subsets; fine for n <= ~16.
inline bool chordless_cycles_are_triangles(const dtc::SimpleGraph& g) {
  int n = g.n();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size < 4) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    int edges = 0;
    bool degree_two = true;
    for (int v : verts) {
      int deg = 0;
      for (int u : verts) deg += (u != v && g.has_edge(u, v));
      degree_two = degree_two && deg == 2;
      edges += deg;
    }
    if (!degree_two || edges != 2 * size) continue;
    // Connected 2-regular induced subgraph: a chordless cycle.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{verts[0]};
    seen[verts[0]] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int u : verts)
        if (!seen[u] && g.has_edge(u, v)) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    if (reached == size) return false;
  }
  return true;
}

// Path graph a-b-c-... on the given labels.
inline dtc::SimpleGraph path_graph(const std::vector<std::string>& labels) {
  dtc::SimpleGraph g;
  for (const auto& l : labels) g.add_vertex(l);
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    g.add_edge(labels[i], labels[i + 1]);
  return g;
}

// Cycle graph 1-2-...-n-1.
inline dtc::SimpleGraph cycle_graph(int n) {
  dtc::SimpleGraph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Complete digraph on labels 1..n.
inline dtc::Digraph complete_digraph(int n) {
  dtc::Digraph d;
  for (int i = 1; i <= n; ++i) d.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) d.add_edge(i, j);
  return d;
}

// Boundary of the d-simplex on labels v0..vd+1.
inline dtc::Complex simplex_boundary(int d) {
  std::vector<std::string> universe;
  for (int i = 0; i <= d + 1; ++i) universe.push_back("v" + std::to_string(i));
  std::vector<dtc::Face> facets;
  for (int skip = 0; skip <= d + 1; ++skip) {
    dtc::Face f;
    for (int i = 0; i <= d + 1; ++i)
      if (i != skip) f.push_back(i);
    facets.push_back(f);
  }
  return dtc::Complex(universe, facets);
}

}  // namespace oracle
