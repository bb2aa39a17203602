#pragma once

// Reduced simplicial homology ranks over a small prime field, computed
// from boundary-matrix ranks. Dimension -1 is included, so the complex
// {∅} reports rank 1 there and a wedge check against a (-1)-sphere works.

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "dtc/complex.hpp"

namespace dtc {

// Reduced Betti numbers; entry at(k) is the rank in dimension k.
struct BettiVector {
  int dim = -2;                  // top dimension of the complex
  std::vector<long long> b;      // b[k+1] holds dimension k, k >= -1

  long long at(int k) const {
    int i = k + 1;
    if (i < 0 || i >= static_cast<int>(b.size())) return 0;
    return b[i];
  }
  bool all_zero() const {
    for (long long v : b)
      if (v) return false;
    return true;
  }
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

using WedgeProfile = std::map<int, long long>;  // dimension -> sphere count

namespace detail {

constexpr int kDenseRankLimit = 4000;
constexpr long long kSparseNonzeroCap = 200'000;

// Column-major sparse matrix over F_p; entries in [1, p).
struct SparseMatrix {
  int rows = 0;
  int p = 2;
  std::vector<std::vector<std::pair<int, int>>> cols;  // (row, value), row asc

  long long nonzeros() const {
    long long nnz = 0;
    for (const auto& c : cols) nnz += static_cast<long long>(c.size());
    return nnz;
  }
};

inline int mod_inverse(int a, int p) {
  int r = 1, b = a, e = p - 2;  // p prime
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline int rank_dense(const SparseMatrix& m) {
  int rows = m.rows, cols = static_cast<int>(m.cols.size()), p = m.p;
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols, 0));
  for (int c = 0; c < cols; ++c)
    for (auto [r, v] : m.cols[c]) a[r][c] = v;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    int inv = mod_inverse(a[rank][c], p);
    for (int cc = c; cc < cols; ++cc) a[rank][cc] = a[rank][cc] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      int f = a[r][c];
      for (int cc = c; cc < cols; ++cc)
        a[r][cc] = (a[r][cc] + (p - f) * a[rank][cc]) % p;
    }
    ++rank;
  }
  return rank;
}

// Persistence-style column reduction; only pivot columns are retained.
inline int rank_sparse(const SparseMatrix& m) {
  int p = m.p;
  std::unordered_map<int, std::vector<std::pair<int, int>>> pivot_col;
  long long live_nnz = 0;
  int rank = 0;

  auto axpy = [p](const std::vector<std::pair<int, int>>& x, int lambda,
                  const std::vector<std::pair<int, int>>& y) {
    // y + lambda * x, rows ascending
    std::vector<std::pair<int, int>> out;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.emplace_back(x[i].first, x[i].second * lambda % p);
        ++i;
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.push_back(y[j]);
        ++j;
      } else {
        int v = (y[j].second + x[i].second * lambda) % p;
        if (v) out.emplace_back(y[j].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  };

  for (const auto& col : m.cols) {
    auto cur = col;
    while (!cur.empty()) {
      int low = cur.back().first;
      auto it = pivot_col.find(low);
      if (it == pivot_col.end()) {
        int inv = mod_inverse(cur.back().second, p);
        for (auto& [r, v] : cur) v = v * inv % p;
        live_nnz += static_cast<long long>(cur.size());
        if (live_nnz > kSparseNonzeroCap)
          throw domain_error("sparse elimination nonzero cap exceeded");
        pivot_col.emplace(low, std::move(cur));
        ++rank;
        break;
      }
      int lambda = (p - cur.back().second) % p;
      cur = axpy(it->second, lambda, cur);
    }
  }
  return rank;
}

inline int rank_mod_p(const SparseMatrix& m) {
  if (m.rows == 0 || m.cols.empty()) return 0;
  if (m.rows <= kDenseRankLimit &&
      static_cast<int>(m.cols.size()) <= kDenseRankLimit)
    return rank_dense(m);
  return rank_sparse(m);
}

}  // namespace detail

inline BettiVector betti(const Complex& c, int p = 2) {
  if (p < 2 || p == 4 || p > 97)
    throw domain_error("field characteristic must be a small prime");
  BettiVector out;
  if (c.is_void()) return out;
  out.dim = c.dim();
  int d = out.dim;

  auto faces = enumerate_faces(c);
  std::vector<std::vector<Face>> by_dim(d + 2);  // index k+1 for dimension k
  for (const auto& [f, unused] : faces)
    by_dim[f.size()].push_back(f);
  for (auto& v : by_dim) std::sort(v.begin(), v.end());

  std::vector<std::unordered_map<Face, int, FaceHash>> index(d + 2);
  for (int i = 0; i <= d + 1; ++i)
    for (std::size_t j = 0; j < by_dim[i].size(); ++j)
      index[i].emplace(by_dim[i][j], static_cast<int>(j));

  // rank of each boundary map C_k -> C_{k-1}, k = 0..d
  std::vector<int> rank(d + 2, 0);
  for (int k = 0; k <= d; ++k) {
    detail::SparseMatrix m;
    m.p = p;
    m.rows = static_cast<int>(by_dim[k].size());
    m.cols.reserve(by_dim[k + 1].size());
    for (const auto& f : by_dim[k + 1]) {
      std::vector<std::pair<int, int>> col;
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<long>(i));
        int sign = (i % 2) ? p - 1 : 1;
        col.emplace_back(index[k].at(sub), sign);
      }
      std::sort(col.begin(), col.end());
      m.cols.push_back(std::move(col));
    }
    rank[k + 1] = detail::rank_mod_p(m);
  }

  out.b.assign(d + 2, 0);
  for (int k = -1; k <= d; ++k) {
    long long dim_ck = static_cast<long long>(by_dim[k + 1].size());
    long long upper = (k + 2 <= d + 1) ? rank[k + 2] : 0;
    out.b[k + 1] = dim_ck - rank[k + 1] - upper;
  }

  // Euler identity over the reduced chain complex; a failure here means
  // the rank computation is inconsistent.
  long long lhs = 0, rhs = 0;
  for (int k = -1; k <= d; ++k) {
    long long s = (k % 2 == 0) ? 1 : -1;
    lhs += s * static_cast<long long>(by_dim[k + 1].size());
    rhs += s * out.b[k + 1];
  }
  if (lhs != rhs) throw domain_error("homology rank inconsistency");
  return out;
}

// True when the reduced homology of c matches a wedge of spheres with the
// given multiplicity per dimension (absent dimensions mean zero).
inline bool wedge_check(const Complex& c, const WedgeProfile& profile,
                        int p = 2) {
  BettiVector bv = betti(c, p);
  int lo = -1, hi = std::max(bv.dim, 0);
  for (const auto& [dim, count] : profile) {
    lo = std::min(lo, dim);
    hi = std::max(hi, dim);
  }
  for (int k = lo; k <= hi; ++k) {
    auto it = profile.find(k);
    long long want = it == profile.end() ? 0 : it->second;
    if (bv.at(k) != want) return false;
  }
  return true;
}

}  // namespace dtc
