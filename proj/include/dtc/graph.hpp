#pragma once

// Digraphs and simple graphs over string-labelled vertices. Vertex indices
// follow first appearance in the input, and every tie-break downstream uses
// that order, so parsing the same file always yields the same structures.

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dtc/error.hpp"

namespace dtc {

struct DirEdge {
  int src = -1;
  int dst = -1;
  friend auto operator<=>(const DirEdge&, const DirEdge&) = default;
};

namespace detail {

class LabelTable {
 public:
  int intern(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(labels_.size());
    labels_.push_back(label);
    index_.emplace(label, id);
    return id;
  }
  int find(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
  }
  const std::vector<std::string>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

}  // namespace detail

class Digraph {
 public:
  Digraph() = default;

  int add_vertex(const std::string& label) { return table_.intern(label); }

  void add_edge(int src, int dst) {
    if (src == dst) throw input_error("loop edge at vertex " + label(src));
    if (src < 0 || dst < 0 || src >= n() || dst >= n())
      throw input_error("edge endpoint out of range");
    DirEdge e{src, dst};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;  // duplicates collapse
    edges_.insert(it, e);
  }

  void add_edge(const std::string& src, const std::string& dst) {
    int u = add_vertex(src);
    int v = add_vertex(dst);
    add_edge(u, v);
  }

  int n() const { return table_.size(); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<DirEdge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return table_.labels(); }
  const std::string& label(int v) const { return table_.labels().at(v); }
  int vertex(const std::string& label) const { return table_.find(label); }

  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  // Position of u>v in the sorted edge list, -1 if absent.
  int edge_index(int u, int v) const {
    DirEdge e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  std::string edge_label(int e) const {
    return label(edges_[e].src) + ">" + label(edges_[e].dst);
  }

  std::vector<int> out_neighbors(int v) const {
    std::vector<int> r;
    for (const auto& e : edges_)
      if (e.src == v) r.push_back(e.dst);
    return r;
  }
  std::vector<int> in_neighbors(int v) const {
    std::vector<int> r;
    for (const auto& e : edges_)
      if (e.dst == v) r.push_back(e.src);
    std::sort(r.begin(), r.end());
    return r;
  }
  int out_degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.src == v);
    return d;
  }
  int in_degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.dst == v);
    return d;
  }

 private:
  detail::LabelTable table_;
  std::vector<DirEdge> edges_;  // sorted by (src, dst), unique
};

class SimpleGraph {
 public:
  SimpleGraph() = default;

  int add_vertex(const std::string& label) { return table_.intern(label); }

  void add_edge(int u, int v) {
    if (u == v) throw input_error("loop edge at vertex " + label(u));
    if (u < 0 || v < 0 || u >= n() || v >= n())
      throw input_error("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    std::pair<int, int> e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, e);
  }

  void add_edge(const std::string& a, const std::string& b) {
    int u = add_vertex(a);
    int v = add_vertex(b);
    add_edge(u, v);
  }

  int n() const { return table_.size(); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return table_.labels(); }
  const std::string& label(int v) const { return table_.labels().at(v); }
  int vertex(const std::string& label) const { return table_.find(label); }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::pair<int, int>{u, v});
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> r;
    for (auto [a, b] : edges_) {
      if (a == v) r.push_back(b);
      if (b == v) r.push_back(a);
    }
    std::sort(r.begin(), r.end());
    return r;
  }
  int degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges_) d += (a == v) + (b == v);
    return d;
  }

 private:
  detail::LabelTable table_;
  std::vector<std::pair<int, int>> edges_;  // u < v, sorted, unique
};

namespace detail {

// Splits a graph file into "src dst" token pairs. Lines whose first
// non-space character is '#' are comments; blank lines are skipped.
inline std::vector<std::pair<std::string, std::string>> read_edge_lines(
    std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (a[0] == '#') continue;
    if (!(ls >> b) || (ls >> extra))
      throw input_error("line " + std::to_string(lineno) +
                        ": expected exactly two tokens");
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace detail

inline Digraph parse_digraph(std::istream& in) {
  Digraph d;
  for (const auto& [a, b] : detail::read_edge_lines(in)) d.add_edge(a, b);
  return d;
}

inline SimpleGraph parse_simple_graph(std::istream& in) {
  SimpleGraph g;
  for (const auto& [a, b] : detail::read_edge_lines(in)) g.add_edge(a, b);
  return g;
}

inline Digraph double_directed(const SimpleGraph& g) {
  Digraph d;
  for (const auto& l : g.labels()) d.add_vertex(l);
  for (auto [u, v] : g.edges()) {
    d.add_edge(u, v);
    d.add_edge(v, u);
  }
  return d;
}

inline SimpleGraph underlying(const Digraph& d) {
  SimpleGraph g;
  for (const auto& l : d.labels()) g.add_vertex(l);
  for (const auto& e : d.edges()) g.add_edge(e.src, e.dst);
  return g;
}

// Vertices with an edge to every other vertex, ascending.
inline std::vector<int> complete_sources(const Digraph& d) {
  std::vector<int> out;
  for (int c = 0; c < d.n(); ++c) {
    bool ok = true;
    for (int v = 0; v < d.n() && ok; ++v)
      if (v != c && !d.has_edge(c, v)) ok = false;
    if (ok) out.push_back(c);
  }
  return out;
}

namespace detail {

// Strong independence: pairwise non-adjacent with disjoint neighborhoods.
inline bool strongly_independent(const SimpleGraph& g,
                                 const std::vector<int>& a) {
  std::vector<char> seen(g.n(), 0);
  for (int x : a) {
    for (int y : a)
      if (x < y && g.has_edge(x, y)) return false;
    for (int u : g.neighbors(x)) {
      if (seen[u]) return false;
      seen[u] = 1;
    }
  }
  return true;
}

inline void enum_strongly_independent(
    const SimpleGraph& g, int next, std::vector<int>& cur,
    std::vector<char>& blocked_vertex, std::vector<char>& blocked_nbhd,
    const std::function<void(const std::vector<int>&)>& emit) {
  emit(cur);
  for (int v = next; v < g.n(); ++v) {
    if (blocked_vertex[v]) continue;
    auto nb = g.neighbors(v);
    bool clash = false;
    for (int u : nb)
      if (blocked_nbhd[u]) {
        clash = true;
        break;
      }
    if (clash) continue;
    std::vector<int> touched_v, touched_n;
    for (int u : nb) {
      if (!blocked_vertex[u]) {
        blocked_vertex[u] = 1;
        touched_v.push_back(u);
      }
      blocked_nbhd[u] = 1;
      touched_n.push_back(u);
    }
    if (!blocked_vertex[v]) {
      blocked_vertex[v] = 1;
      touched_v.push_back(v);
    }
    cur.push_back(v);
    enum_strongly_independent(g, v + 1, cur, blocked_vertex, blocked_nbhd,
                              emit);
    cur.pop_back();
    for (int u : touched_v) blocked_vertex[u] = 0;
    for (int u : touched_n) blocked_nbhd[u] = 0;
  }
}

}  // namespace detail

// Largest strongly independent set, with one witness attaining it.
inline std::pair<int, std::vector<int>> strongly_independent_witness(
    const SimpleGraph& g) {
  std::pair<int, std::vector<int>> best{0, {}};
  std::vector<int> cur;
  std::vector<char> bv(g.n(), 0), bn(g.n(), 0);
  detail::enum_strongly_independent(
      g, 0, cur, bv, bn, [&best](const std::vector<int>& a) {
        if (static_cast<int>(a.size()) > best.first)
          best = {static_cast<int>(a.size()), a};
      });
  return best;
}

inline int strongly_independent_number(const SimpleGraph& g) {
  return strongly_independent_witness(g).first;
}

// All strongly independent sets whose closed neighborhoods cover V.
// Coverage forces maximum size, so each witness has size r(g).
inline std::vector<std::vector<int>> complete_r_sources(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> bv(g.n(), 0), bn(g.n(), 0);
  detail::enum_strongly_independent(
      g, 0, cur, bv, bn, [&](const std::vector<int>& a) {
        std::vector<char> covered(g.n(), 0);
        for (int x : a) {
          covered[x] = 1;
          for (int u : g.neighbors(x)) covered[u] = 1;
        }
        for (char c : covered)
          if (!c) return;
        out.push_back(a);
      });
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.n() == 0) return false;
  std::vector<char> seen(g.n(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++cnt;
        q.push(u);
      }
  }
  return cnt == g.n();
}

inline bool is_tree(const SimpleGraph& g) {
  return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g);
}

// True when the underlying simple graph is a tree.
inline bool is_essentially_tree(const Digraph& d) {
  return is_tree(underlying(d));
}

inline int diameter(const SimpleGraph& g) {
  if (g.n() == 0) throw domain_error("diameter of empty graph");
  int diam = 0;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbors(v))
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
    for (int v = 0; v < g.n(); ++v) {
      if (dist[v] < 0) throw domain_error("diameter of disconnected graph");
      diam = std::max(diam, dist[v]);
    }
  }
  return diam;
}

}  // namespace dtc
