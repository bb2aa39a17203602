#pragma once

// Simplicial complexes given by facet lists. Faces are sorted id vectors
// into a string-labelled universe. The empty complex {∅} (one empty facet)
// is a valid value and behaves as a (-1)-sphere throughout.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dtc/error.hpp"
#include "dtc/graph.hpp"

namespace dtc {

using Face = std::vector<int>;  // sorted ascending, no repeats

struct FaceHash {
  std::size_t operator()(const Face& f) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : f) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Face face_minus(const Face& f, int v) {
  Face r;
  r.reserve(f.size() - 1);
  for (int u : f)
    if (u != v) r.push_back(u);
  return r;
}

inline Face face_union(const Face& a, const Face& b) {
  Face r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(r));
  return r;
}

inline Face face_intersect(const Face& a, const Face& b) {
  Face r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}

// Face-count cap for full enumeration; DTC_FACE_CAP overrides.
inline long long face_cap() {
  static const long long cap = [] {
    if (const char* env = std::getenv("DTC_FACE_CAP")) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
    return 5'000'000ll;
  }();
  return cap;
}

class Complex {
 public:
  Complex() = default;  // void complex: no faces at all

  Complex(std::vector<std::string> universe, std::vector<Face> facets)
      : universe_(std::move(universe)) {
    for (auto& f : facets) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      for (int v : f)
        if (v < 0 || v >= static_cast<int>(universe_.size()))
          throw domain_error("face member outside universe");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Drop faces contained in another. Only strictly larger faces can
    // dominate, so uniform-size lists (the common case) skip the scan.
    std::vector<const Face*> larger;
    for (const auto& f : facets) larger.push_back(&f);
    std::sort(larger.begin(), larger.end(),
              [](const Face* a, const Face* b) { return a->size() > b->size(); });
    for (std::size_t i = 0; i < facets.size(); ++i) {
      bool dominated = false;
      for (const Face* g : larger) {
        if (g->size() <= facets[i].size()) break;
        if (face_subset(facets[i], *g)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) facets_.push_back(facets[i]);
    }
  }

  bool is_void() const { return facets_.empty(); }
  int dim() const {
    int d = -2;
    for (const auto& f : facets_)
      d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::string& vertex_label(int v) const { return universe_.at(v); }
  int vertex_index(const std::string& label) const {
    auto it = std::find(universe_.begin(), universe_.end(), label);
    return it == universe_.end() ? -1 : static_cast<int>(it - universe_.begin());
  }

  bool has_facet(const Face& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
  }
  // Membership as a face, i.e. contained in some facet.
  bool contains(const Face& f) const {
    for (const auto& g : facets_)
      if (face_subset(f, g)) return true;
    return false;
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    if (a.facets_.size() != b.facets_.size()) return false;
    auto key = [](const Complex& c) {
      std::vector<std::vector<std::string>> k;
      for (const auto& f : c.facets_) {
        std::vector<std::string> lf;
        for (int v : f) lf.push_back(c.universe_[v]);
        std::sort(lf.begin(), lf.end());
        k.push_back(std::move(lf));
      }
      std::sort(k.begin(), k.end());
      return k;
    };
    return key(a) == key(b);
  }

 private:
  std::vector<std::string> universe_;
  std::vector<Face> facets_;  // sorted, pairwise incomparable
};

// Labels of a face's members in lexicographic order; the canonical sort
// key wherever "serialized facet order" is called for.
inline std::vector<std::string> face_labels(const Complex& c, const Face& f) {
  std::vector<std::string> out;
  out.reserve(f.size());
  for (int v : f) out.push_back(c.vertex_label(v));
  std::sort(out.begin(), out.end());
  return out;
}

// In-degree-at-most-one plus acyclicity, checked directly.
inline bool is_directed_forest(const Digraph& d,
                               const std::vector<DirEdge>& edges) {
  std::vector<int> parent(d.n(), -1);
  for (const auto& e : edges) {
    if (d.edge_index(e.src, e.dst) < 0)
      throw domain_error("edge not in digraph: " + std::to_string(e.src) +
                         ">" + std::to_string(e.dst));
    if (parent[e.dst] >= 0) return false;  // in-degree 2
    parent[e.dst] = e.src;
  }
  // Follow parent pointers; any walk longer than n vertices is a cycle.
  for (int v = 0; v < d.n(); ++v) {
    int u = v, steps = 0;
    while (parent[u] >= 0) {
      u = parent[u];
      if (++steps > d.n()) return false;
    }
  }
  return true;
}

// Same test for a face given as edge ids into d.edges().
inline bool is_directed_forest(const Digraph& d, const Face& edge_ids) {
  std::vector<DirEdge> edges;
  edges.reserve(edge_ids.size());
  for (int e : edge_ids) {
    if (e < 0 || e >= d.m())
      throw domain_error("edge id out of range: " + std::to_string(e));
    edges.push_back(d.edges()[e]);
  }
  return is_directed_forest(d, edges);
}

namespace detail {

// Union-find with rollback; components of a partial forest.
class ForestState {
 public:
  explicit ForestState(int n) : parent_(n, -1), root_(n) {
    std::iota(root_.begin(), root_.end(), 0);
  }

  bool can_add(const DirEdge& e) const {
    return parent_[e.dst] < 0 && find(e.src) != find(e.dst);
  }
  void add(const DirEdge& e) {
    parent_[e.dst] = e.src;
    int a = find(e.src), b = find(e.dst);
    trail_.push_back({e.dst, b});
    root_[b] = a;
  }
  void undo(const DirEdge&) {
    auto [dst, b] = trail_.back();
    trail_.pop_back();
    root_[b] = b;
    parent_[dst] = -1;
  }

 private:
  int find(int v) const {
    while (root_[v] != v) v = root_[v];
    return v;
  }
  std::vector<int> parent_;
  std::vector<int> root_;  // no path compression so undo stays O(1)
  std::vector<std::pair<int, int>> trail_;
};

}  // namespace detail

// Complex of directed forests of d. Universe is d's edge list; facets are
// the maximal forests, found by depth-first extension in edge order.
inline Complex directed_tree_complex(const Digraph& d) {
  std::vector<std::string> universe;
  for (int e = 0; e < d.m(); ++e) universe.push_back(d.edge_label(e));

  std::vector<Face> facets;
  detail::ForestState state(d.n());
  Face cur;
  long long visited = 0;
  const auto& es = d.edges();

  auto rec = [&](auto&& self, int next) -> void {
    if (++visited > face_cap())
      throw domain_error("face cap exceeded while enumerating facets");
    bool maximal = true;
    for (int e = 0; e < d.m(); ++e) {
      bool in_cur = std::binary_search(cur.begin(), cur.end(), e);
      if (!in_cur && state.can_add(es[e])) {
        maximal = false;
        if (e >= next) {
          state.add(es[e]);
          cur.push_back(e);
          self(self, e + 1);
          cur.pop_back();
          state.undo(es[e]);
        }
      }
    }
    if (maximal) facets.push_back(cur);
  };
  rec(rec, 0);
  return Complex(std::move(universe), std::move(facets));
}

// Independence complex: faces are independent vertex sets of g.
inline Complex independency_complex(const SimpleGraph& g) {
  std::vector<Face> facets;
  std::vector<char> in_cur(g.n(), 0);
  Face cur;
  auto independent_with_cur = [&](int v) {
    for (int u : g.neighbors(v))
      if (in_cur[u]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int next) -> void {
    bool maximal = true;
    for (int v = 0; v < g.n(); ++v) {
      if (!in_cur[v] && independent_with_cur(v)) {
        maximal = false;
        if (v >= next) {
          in_cur[v] = 1;
          cur.push_back(v);
          self(self, v + 1);
          cur.pop_back();
          in_cur[v] = 0;
        }
      }
    }
    if (maximal) facets.push_back(cur);
  };
  rec(rec, 0);
  return Complex(g.labels(), std::move(facets));
}

// Two directed edges conflict when no forest holds both: same head,
// or the two orientations of one undirected edge.
inline SimpleGraph conflict_graph(const Digraph& d) {
  SimpleGraph g;
  for (int e = 0; e < d.m(); ++e) g.add_vertex(d.edge_label(e));
  const auto& es = d.edges();
  for (int a = 0; a < d.m(); ++a)
    for (int b = a + 1; b < d.m(); ++b) {
      bool same_head = es[a].dst == es[b].dst;
      bool opposite = es[a].src == es[b].dst && es[a].dst == es[b].src;
      if (same_head || opposite) g.add_edge(a, b);
    }
  return g;
}

// Faces of size at most k+1. k = -1 gives {∅}; k >= dim gives c back.
inline Complex skeleton(const Complex& c, int k) {
  if (k < -1) throw domain_error("skeleton index below -1");
  if (c.is_void()) return c;
  std::vector<Face> facets;
  std::size_t want = static_cast<std::size_t>(k + 1);
  for (const auto& f : c.facets()) {
    if (f.size() <= want) {
      facets.push_back(f);
      continue;
    }
    // all (k+1)-subsets of f
    std::vector<int> idx(want);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Face s;
      for (int i : idx) s.push_back(f[i]);
      facets.push_back(std::move(s));
      int i = static_cast<int>(want) - 1;
      while (i >= 0 && idx[i] == static_cast<int>(f.size() - want) + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return Complex(c.universe(), std::move(facets));
}

inline bool is_pure(const Complex& c) {
  if (c.is_void()) return true;
  for (const auto& f : c.facets())
    if (f.size() != c.facets().front().size()) return false;
  return true;
}

// All faces with the size of the largest facet containing each.
inline std::unordered_map<Face, int, FaceHash> enumerate_faces(
    const Complex& c) {
  std::unordered_map<Face, int, FaceHash> best;
  for (const auto& f : c.facets()) {
    int fs = static_cast<int>(f.size());
    // iterate subsets within the facet
    Face sub;
    auto rec = [&](auto&& self, std::size_t next) -> void {
      auto [it, inserted] = best.try_emplace(sub, fs);
      if (!inserted) it->second = std::max(it->second, fs);
      if (inserted && static_cast<long long>(best.size()) > face_cap())
        throw domain_error("face cap exceeded while enumerating faces");
      for (std::size_t i = next; i < f.size(); ++i) {
        sub.push_back(f[i]);
        self(self, i + 1);
        sub.pop_back();
      }
    };
    rec(rec, 0);
  }
  return best;
}

using FVector = std::vector<long long>;  // entry k is f_{k-1}
using HVector = std::vector<long long>;  // entry k is h_k, k = 0..d+1

namespace detail {

inline long long binom(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

inline FVector f_vector(const Complex& c) {
  if (c.is_void()) return {};
  auto faces = enumerate_faces(c);
  FVector f(c.dim() + 2, 0);
  for (const auto& [face, unused] : faces) f[face.size()] += 1;
  return f;
}

inline HVector h_vector(const Complex& c) {
  if (!is_pure(c)) throw domain_error("h-vector of a nonpure complex");
  FVector f = f_vector(c);
  int d = c.dim();
  HVector h(d + 2, 0);
  for (int k = 0; k <= d + 1; ++k)
    for (int i = 0; i <= k; ++i)
      h[k] += ((k - i) % 2 ? -1 : 1) *
              detail::binom(d + 1 - i, d + 1 - k) * f[i];
  return h;
}

// Doubly indexed face counts for nonpure complexes. Cell (i,j) counts
// faces of size j whose largest containing facet has size i.
struct Triangle {
  std::map<std::pair<int, int>, long long> cells;

  void add(int i, int j, long long v) {
    if (v == 0) return;
    auto it = cells.find({i, j});
    if (it == cells.end()) {
      cells.emplace(std::pair{i, j}, v);
    } else {
      it->second += v;
      if (it->second == 0) cells.erase(it);
    }
  }
  long long get(int i, int j) const {
    auto it = cells.find({i, j});
    return it == cells.end() ? 0 : it->second;
  }
  int max_row() const {
    int m = 0;
    for (const auto& [ij, v] : cells) m = std::max(m, ij.first);
    return m;
  }
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

using FTriangle = Triangle;
using HTriangle = Triangle;

inline FTriangle f_triangle(const Complex& c) {
  FTriangle t;
  if (c.is_void()) return t;
  auto faces = enumerate_faces(c);
  for (const auto& [face, maxsz] : faces)
    t.add(maxsz, static_cast<int>(face.size()), 1);
  return t;
}

inline HTriangle h_from_f_triangle(const FTriangle& f) {
  HTriangle h;
  int top = f.max_row();
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= i; ++j) {
      long long v = 0;
      for (int k = 0; k <= j; ++k)
        v += ((j - k) % 2 ? -1 : 1) * detail::binom(i - k, j - k) *
             f.get(i, k);
      h.add(i, j, v);
    }
  return h;
}

inline HTriangle h_triangle(const Complex& c) {
  return h_from_f_triangle(f_triangle(c));
}

// Deletes the named facets as open cells: their proper faces stay.
inline Complex remove_facet_interiors(const Complex& c,
                                      const std::vector<Face>& gone) {
  std::unordered_set<Face, FaceHash> dead(gone.begin(), gone.end());
  for (const auto& f : gone)
    if (!c.has_facet(f)) throw domain_error("not a facet of the complex");
  std::vector<Face> facets;
  for (const auto& f : c.facets()) {
    if (!dead.count(f)) {
      facets.push_back(f);
      continue;
    }
    if (f.empty()) continue;  // removing ∅ leaves the void complex
    for (int v : f) facets.push_back(face_minus(f, v));
  }
  return Complex(c.universe(), std::move(facets));
}

}  // namespace dtc
