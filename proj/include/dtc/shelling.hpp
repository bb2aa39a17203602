#pragma once

// Shelling verification and search for facet-listed complexes, in the
// nonpure sense: every pair of facets F_i, F_j (i < j) must be mediated by
// an earlier facet meeting F_j in all but one vertex.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "dtc/complex.hpp"

namespace dtc {

struct ShellingOrder {
  std::vector<Face> facets;
  std::vector<Face> restrictions;  // R(F_j): vertices whose ridge is covered
  std::vector<int> types;          // |R(F_j)|
};

struct ShellingViolation {
  int i = -1;  // offending earlier facet (0-based)
  int j = -1;  // facet at which the order fails
  std::string reason;
};

using VerifyResult = std::variant<ShellingOrder, ShellingViolation>;

inline bool is_valid(const VerifyResult& r) {
  return std::holds_alternative<ShellingOrder>(r);
}

namespace detail {

// Earlier-facet lookup: for a target set, scan the shortest incidence
// list among its members; empty target means every earlier facet matches.
class IncidenceIndex {
 public:
  IncidenceIndex(int universe, const std::vector<Face>* order)
      : lists_(universe), order_(order) {}

  void push(int j) {
    for (int v : (*order_)[j]) lists_[v].push_back(j);
  }

  // Smallest index i < j with target ⊆ F_i, or -1.
  int first_superset(const Face& target, int j) const {
    if (target.empty()) return j > 0 ? 0 : -1;
    const std::vector<int>* shortest = &lists_[target[0]];
    for (int v : target)
      if (lists_[v].size() < shortest->size()) shortest = &lists_[v];
    for (int i : *shortest)
      if (face_subset(target, (*order_)[i])) return i;
    return -1;
  }

 private:
  std::vector<std::vector<int>> lists_;
  const std::vector<Face>* order_;
};

}  // namespace detail

// Checks the given facet order. On success the restrictions R(F_j) and
// types are returned; the first failing pair is reported otherwise.
// The order must be a permutation of c's facet list.
inline VerifyResult verify_shelling(const Complex& c,
                                    const std::vector<Face>& order) {
  {
    std::vector<Face> sorted = order;
    for (auto& f : sorted) std::sort(f.begin(), f.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facets())
      throw domain_error("order is not a permutation of the facet list");
  }
  int k = static_cast<int>(order.size());
  detail::IncidenceIndex index(static_cast<int>(c.universe().size()), &order);
  ShellingOrder out;
  out.facets = order;

  for (int j = 0; j < k; ++j) {
    const Face& fj = order[j];
    Face rj;
    for (int v : fj)
      if (index.first_superset(face_minus(fj, v), j) >= 0) rj.push_back(v);
    if (j > 0) {
      // The pair condition for (i, j) reads: some v in R(F_j) avoids F_i.
      // It fails exactly when R(F_j) ⊆ F_i (including R(F_j) = ∅).
      if (rj.empty())
        return ShellingViolation{0, j, "no ridge of facet covered earlier"};
      if (rj != fj) {
        int bad = index.first_superset(rj, j);
        if (bad >= 0)
          return ShellingViolation{
              bad, j, "restriction contained in earlier facet"};
      }
    }
    out.types.push_back(static_cast<int>(rj.size()));
    out.restrictions.push_back(std::move(rj));
    index.push(j);
  }
  return out;
}

// Facet counts keyed by (facet size, restriction size). For a shelling of
// a pure complex the row at size d+1 is the classical h-vector.
inline HTriangle shelling_h_triangle(const ShellingOrder& order) {
  HTriangle t;
  for (std::size_t j = 0; j < order.facets.size(); ++j)
    t.add(static_cast<int>(order.facets[j].size()), order.types[j], 1);
  return t;
}

// Facets whose whole boundary was covered when they arrived. Removing
// their interiors leaves a contractible complex.
inline std::vector<Face> generating_facets_from_order(
    const ShellingOrder& order) {
  std::vector<Face> out;
  for (std::size_t j = 0; j < order.facets.size(); ++j)
    if (order.facets[j] == order.restrictions[j])
      out.push_back(order.facets[j]);
  std::sort(out.begin(), out.end());
  return out;
}

// Backtracking search over facet orderings. Whether a partial order can be
// completed depends only on the set of placed facets, so failed sets are
// memoized as bitmasks. Facet count is capped to keep masks in a word.
inline std::optional<ShellingOrder> find_shelling(const Complex& c,
                                                  int facet_cap = 30) {
  int k = static_cast<int>(c.facets().size());
  if (k > facet_cap || k > 63)
    throw domain_error("facet count exceeds search cap");
  if (k == 0) return std::nullopt;
  const auto& facets = c.facets();

  // can_extend[j][mask-membership] is evaluated on the fly: facet j can
  // follow a placed set S when R_j(S) is nonempty and not inside any F_i.
  auto extends = [&](int j, unsigned long long mask) {
    Face rj;
    for (int v : facets[j]) {
      Face ridge = face_minus(facets[j], v);
      for (int i = 0; i < k; ++i)
        if ((mask >> i & 1) && face_subset(ridge, facets[i])) {
          rj.push_back(v);
          break;
        }
    }
    if (mask == 0) return true;
    if (rj.empty()) return false;
    if (rj == facets[j]) return true;
    for (int i = 0; i < k; ++i)
      if ((mask >> i & 1) && face_subset(rj, facets[i])) return false;
    return true;
  };

  std::unordered_set<unsigned long long> failed;
  std::vector<int> order;
  auto rec = [&](auto&& self, unsigned long long mask) -> bool {
    if (static_cast<int>(order.size()) == k) return true;
    if (failed.count(mask)) return false;
    for (int j = 0; j < k; ++j) {
      if (mask >> j & 1) continue;
      if (!extends(j, mask)) continue;
      order.push_back(j);
      if (self(self, mask | (1ull << j))) return true;
      order.pop_back();
    }
    failed.insert(mask);
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  std::vector<Face> ordered;
  for (int j : order) ordered.push_back(facets[j]);
  auto res = verify_shelling(c, ordered);
  return std::get<ShellingOrder>(res);
}

namespace detail {

inline std::vector<Face> del_facets(const Complex& c, int v) {
  std::vector<Face> cand;
  for (const auto& f : c.facets())
    cand.push_back(std::binary_search(f.begin(), f.end(), v)
                       ? face_minus(f, v)
                       : f);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Face> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool dom = false;
    for (std::size_t j = 0; j < cand.size() && !dom; ++j)
      if (i != j && face_subset(cand[i], cand[j])) dom = true;
    if (!dom) out.push_back(cand[i]);
  }
  return out;
}

inline std::vector<Face> link_facets(const Complex& c, int v) {
  std::vector<Face> out;
  for (const auto& f : c.facets())
    if (std::binary_search(f.begin(), f.end(), v))
      out.push_back(face_minus(f, v));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string facets_key(const std::vector<Face>& facets) {
  std::string k;
  for (const auto& f : facets) {
    for (int v : f) {
      k += std::to_string(v);
      k += ',';
    }
    k += ';';
  }
  return k;
}

inline bool vd_rec(const std::vector<Face>& facets,
                   std::unordered_map<std::string, bool>& memo) {
  if (facets.size() <= 1) return true;  // simplices, including {∅}
  std::string key = facets_key(facets);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  std::vector<int> support;
  for (const auto& f : facets) support.insert(support.end(), f.begin(), f.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  bool ok = false;
  for (int v : support) {
    // shedding vertex: every facet of the deletion is a facet of the whole
    std::vector<Face> del, link;
    for (const auto& f : facets)
      if (std::binary_search(f.begin(), f.end(), v))
        link.push_back(face_minus(f, v));
      else
        del.push_back(f);
    // facets of the deletion complex: del plus maximal link faces not
    // dominated by del
    std::vector<Face> del_all = del;
    bool shedding = true;
    for (const auto& lf : link) {
      bool dominated = false;
      for (const auto& g : del)
        if (face_subset(lf, g)) {
          dominated = true;
          break;
        }
      if (!dominated) {
        shedding = false;  // a link face survives as a deletion facet
        break;
      }
    }
    if (!shedding) continue;
    std::sort(link.begin(), link.end());
    std::sort(del_all.begin(), del_all.end());
    if (vd_rec(del_all, memo) && vd_rec(link, memo)) {
      ok = true;
      break;
    }
  }
  memo[key] = ok;
  return ok;
}

}  // namespace detail

// Provan-Billera style vertex decomposability, nonpure variant: a complex
// is a simplex, or has a vertex v with no deletion facet inside the link
// whose deletion and link are both decomposable.
inline bool is_vertex_decomposable(const Complex& c, int universe_cap = 24) {
  if (c.is_void()) throw domain_error("void complex");
  if (static_cast<int>(c.universe().size()) > universe_cap)
    throw domain_error("universe exceeds decomposability cap");
  std::unordered_map<std::string, bool> memo;
  return detail::vd_rec(c.facets(), memo);
}

struct LayerResult {
  bool ok = false;
  std::string why;                      // set when ok is false
  std::vector<std::vector<Face>> layers;
  ShellingOrder order;                  // canonical refinement when ok
};

// Partitions facets into breadth-first layers from f0 by shared-ridge
// adjacency, then decides whether every layer-by-layer refinement is a
// shelling with type equal to layer index. The pairwise condition checked
// is the partition criterion: for F' in layer j and any distinct earlier-
// or-same-layer facet F, some vertex of R(F') must avoid F, where R(F')
// collects ridges of F' covered by strictly earlier layers.
inline LayerResult straightforward_layers(const Complex& c, const Face& f0) {
  LayerResult res;
  if (!is_pure(c)) throw domain_error("layer partition of nonpure complex");
  if (!c.has_facet(f0)) throw domain_error("f0 is not a facet");
  const auto& facets = c.facets();
  int k = static_cast<int>(facets.size());
  std::size_t fs = f0.size();

  auto shares_ridge = [&](const Face& a, const Face& b) {
    return face_intersect(a, b).size() + 1 == fs;
  };

  std::map<Face, int> layer_of;
  layer_of[f0] = 0;
  res.layers.push_back({f0});
  while (static_cast<int>(layer_of.size()) < k) {
    std::vector<Face> next;
    for (const auto& f : facets) {
      if (layer_of.count(f)) continue;
      for (const auto& g : res.layers.back())
        if (shares_ridge(f, g)) {
          next.push_back(f);
          break;
        }
    }
    if (next.empty()) {
      res.why = "facet graph disconnected from f0";
      return res;
    }
    for (const auto& f : next) layer_of[f] = static_cast<int>(res.layers.size());
    res.layers.push_back(std::move(next));
  }

  // R from earlier layers and R from the same layer, per facet.
  auto covered = [&](const Face& f, int below_layer, bool same_layer) {
    Face r;
    for (int v : f) {
      Face ridge = face_minus(f, v);
      bool hit = false;
      for (const auto& [g, lg] : layer_of) {
        if (g == f) continue;
        bool in_scope = same_layer ? lg == below_layer : lg < below_layer;
        if (in_scope && face_subset(ridge, g)) {
          hit = true;
          break;
        }
      }
      if (hit) r.push_back(v);
    }
    return r;
  };

  for (const auto& [f, lf] : layer_of) {
    if (lf == 0) continue;
    Face r_prev = covered(f, lf, false);
    Face r_same = covered(f, lf, true);
    if (!face_subset(r_same, r_prev)) {
      res.why = "restriction depends on within-layer order";
      return res;
    }
    if (static_cast<int>(r_prev.size()) != lf) {
      res.why = "type differs from layer index";
      return res;
    }
    for (const auto& [g, lg] : layer_of) {
      if (g == f || lg > lf) continue;
      if (face_subset(r_prev, g)) {
        res.why = "pair condition fails between layers";
        return res;
      }
    }
  }

  // Canonical refinement: layers in order, serialized order within.
  std::vector<Face> order;
  for (auto& layer : res.layers) {
    std::sort(layer.begin(), layer.end(),
              [&](const Face& a, const Face& b) {
                return face_labels(c, a) < face_labels(c, b);
              });
    for (const auto& f : layer) order.push_back(f);
  }
  auto vr = verify_shelling(c, order);
  if (!is_valid(vr)) {
    res.why = "refinement rejected by verifier";
    return res;
  }
  res.order = std::get<ShellingOrder>(vr);
  for (std::size_t j = 0; j < order.size(); ++j)
    if (res.order.types[j] != layer_of[order[j]]) {
      res.why = "verified type differs from layer index";
      return res;
    }
  res.ok = true;
  return res;
}

}  // namespace dtc
