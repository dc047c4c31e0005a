#include "cogirth/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cogirth {

int WeightedMatroid::index_of(int label) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("unknown ground-element label " + std::to_string(label));
}

std::vector<std::uint8_t> normalize_vector(const Gf& f, std::span<const std::uint8_t> v) {
  std::vector<std::uint8_t> out(v.begin(), v.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == 0) continue;
    if (out[i] != 1) {
      int s = f.inv(out[i]);
      for (std::size_t j = i; j < out.size(); ++j)
        out[j] = static_cast<std::uint8_t>(f.mul(s, out[j]));
    }
    break;
  }
  return out;
}

WeightedMatroid from_matrix(const Gf& f, const GfMatrix& columns,
                            std::optional<std::vector<std::int64_t>> weights,
                            std::optional<std::vector<int>> labels) {
  if (columns.field != f) throw std::invalid_argument("from_matrix: field mismatch");
  const int n = columns.cols;
  std::vector<std::int64_t> w = weights ? std::move(*weights) : std::vector<std::int64_t>(n, 1);
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("from_matrix: weight/column length mismatch");
  for (auto x : w)
    if (x < 1) throw std::invalid_argument("from_matrix: nonpositive weight");
  std::vector<int> lb;
  if (labels) {
    lb = std::move(*labels);
    if (static_cast<int>(lb.size()) != n)
      throw std::invalid_argument("from_matrix: label/column length mismatch");
    auto sorted = lb;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("from_matrix: duplicate labels");
  } else {
    lb.resize(n);
    std::iota(lb.begin(), lb.end(), 0);
  }
  return WeightedMatroid{f, columns, std::move(lb), std::move(w)};
}

WeightedMatroid from_points(const Gf& f, const std::vector<std::vector<std::uint8_t>>& points,
                            std::optional<std::vector<std::int64_t>> weights) {
  return from_matrix(f, GfMatrix::from_cols(f, points), std::move(weights));
}

std::vector<int> loops(const WeightedMatroid& m) {
  std::vector<int> out;
  for (int j = 0; j < m.n(); ++j) {
    bool zero = true;
    for (int i = 0; i < m.cols.rows && zero; ++i) zero = m.cols.at(i, j) == 0;
    if (zero) out.push_back(m.labels[j]);
  }
  return out;
}

std::vector<ParallelClass> parallel_classes(const WeightedMatroid& m) {
  // Columns are parallel iff their normalizations coincide.
  std::map<std::vector<std::uint8_t>, std::vector<int>> groups;  // normalized col -> indices
  for (int j = 0; j < m.n(); ++j) {
    auto c = m.cols.col(j);
    if (std::all_of(c.begin(), c.end(), [](std::uint8_t x) { return x == 0; })) continue;
    groups[normalize_vector(m.field, c)].push_back(j);
  }
  std::vector<ParallelClass> out;
  for (auto& [key, idxs] : groups) {
    ParallelClass pc;
    for (int j : idxs) {
      pc.members.push_back(m.labels[j]);
      pc.class_weight += m.weights[j];
    }
    std::sort(pc.members.begin(), pc.members.end());
    pc.representative = pc.members.front();
    out.push_back(std::move(pc));
  }
  // deterministic order: by representative label
  std::sort(out.begin(), out.end(),
            [](const ParallelClass& a, const ParallelClass& b) {
              return a.representative < b.representative;
            });
  return out;
}

bool is_simple(const WeightedMatroid& m) {
  if (!loops(m).empty()) return false;
  for (const auto& pc : parallel_classes(m))
    if (pc.members.size() > 1) return false;
  return true;
}

WeightedMatroid simplify(const WeightedMatroid& m) {
  auto classes = parallel_classes(m);
  if (classes.empty()) throw std::invalid_argument("simplify: rank-zero matroid");
  std::vector<int> keep;
  std::vector<std::int64_t> w;
  std::vector<int> lb;
  for (const auto& pc : classes) {
    keep.push_back(m.index_of(pc.representative));
    lb.push_back(pc.representative);
    w.push_back(pc.class_weight);
  }
  return WeightedMatroid{m.field, m.cols.columns_subset(keep), std::move(lb), std::move(w)};
}

WeightedMatroid delete_set(const WeightedMatroid& m, const std::vector<int>& y) {
  std::vector<bool> drop(m.n(), false);
  for (int label : y) drop[m.index_of(label)] = true;
  std::vector<int> keep;
  std::vector<int> lb;
  std::vector<std::int64_t> w;
  for (int j = 0; j < m.n(); ++j) {
    if (drop[j]) continue;
    keep.push_back(j);
    lb.push_back(m.labels[j]);
    w.push_back(m.weights[j]);
  }
  return WeightedMatroid{m.field, m.cols.columns_subset(keep), std::move(lb), std::move(w)};
}

WeightedMatroid contract_set(const WeightedMatroid& m, const std::vector<int>& y) {
  if (!is_simple(m)) throw std::invalid_argument("contract_set: matroid must be simple");
  const Gf& f = m.field;
  for (int label : y) m.index_of(label);  // validate labels

  // Rewrite columns in rank-r coordinates so the quotient is well defined
  // even when the stored matrix has redundant rows.
  GfMatrix reduced = row_basis(m.cols);
  const int r = reduced.rows;

  // Greedy basis: first the columns of Y (in label order), then the
  // remaining columns (in label order) until rank r is reached.
  std::vector<int> order;
  {
    std::vector<std::pair<int, int>> yl;  // (label, index)
    for (int label : y) yl.emplace_back(label, m.index_of(label));
    std::sort(yl.begin(), yl.end());
    std::vector<bool> in_y(m.n(), false);
    for (auto& [label, idx] : yl) {
      order.push_back(idx);
      in_y[idx] = true;
    }
    std::vector<std::pair<int, int>> rest;
    for (int j = 0; j < m.n(); ++j)
      if (!in_y[j]) rest.emplace_back(m.labels[j], j);
    std::sort(rest.begin(), rest.end());
    for (auto& [label, idx] : rest) order.push_back(idx);
  }
  std::vector<int> basis_idx;
  int k = 0;  // rank of span(Y)
  {
    GfMatrix probe(f, r, 0);
    std::vector<std::vector<std::uint8_t>> chosen;
    int y_count = static_cast<int>(y.size());
    int seen = 0;
    for (int idx : order) {
      auto c = reduced.col(idx);
      chosen.push_back(c);
      GfMatrix cand = GfMatrix::from_cols(f, chosen);
      if (rank_of(cand) == static_cast<int>(chosen.size())) {
        basis_idx.push_back(idx);
        if (seen < y_count) ++k;
      } else {
        chosen.pop_back();
      }
      ++seen;
      if (static_cast<int>(chosen.size()) == r) break;
    }
  }

  // Change of basis: express every column in the chosen basis and keep the
  // coordinates beyond the span of Y.
  GfMatrix b = reduced.columns_subset(basis_idx);
  GfMatrix aug(f, r, r + reduced.cols);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) aug.set(i, j, b.at(i, j));
    for (int j = 0; j < reduced.cols; ++j) aug.set(i, r + j, reduced.at(i, j));
  }
  RrefResult rr = rref(aug);  // left block is invertible, so this inverts it
  const int qr = r - k;       // quotient rank

  std::map<std::vector<std::uint8_t>, std::pair<int, std::int64_t>> classes;  // point -> (label, weight)
  std::vector<bool> in_y_idx(m.n(), false);
  for (int label : y) in_y_idx[m.index_of(label)] = true;
  for (int j = 0; j < m.n(); ++j) {
    if (in_y_idx[j]) continue;
    std::vector<std::uint8_t> quo(qr);
    bool zero = true;
    for (int i = 0; i < qr; ++i) {
      quo[i] = rr.r.at(k + i, r + j);
      zero = zero && quo[i] == 0;
    }
    if (zero) continue;  // fell into span(Y): a loop, contributes no weight
    auto key = normalize_vector(f, quo);
    auto it = classes.find(key);
    if (it == classes.end()) {
      classes.emplace(std::move(key), std::make_pair(m.labels[j], m.weights[j]));
    } else {
      it->second.first = std::min(it->second.first, m.labels[j]);
      it->second.second += m.weights[j];
    }
  }

  std::vector<std::pair<int, std::pair<std::vector<std::uint8_t>, std::int64_t>>> items;
  for (auto& [pt, lw] : classes) items.push_back({lw.first, {pt, lw.second}});
  std::sort(items.begin(), items.end());
  std::vector<std::vector<std::uint8_t>> pts;
  std::vector<int> lb;
  std::vector<std::int64_t> w;
  for (auto& [label, pw] : items) {
    lb.push_back(label);
    pts.push_back(pw.first);
    w.push_back(pw.second);
  }
  GfMatrix out = pts.empty() ? GfMatrix(f, qr, 0) : GfMatrix::from_cols(f, pts);
  return WeightedMatroid{f, out, std::move(lb), std::move(w)};
}

int rank(const WeightedMatroid& m) { return rank_of(m.cols); }

std::int64_t total_weight(const WeightedMatroid& m) {
  return std::accumulate(m.weights.begin(), m.weights.end(), std::int64_t(0));
}

namespace {

// Rank of every subset of the columns of a tiny matrix, indexed by bitmask.
std::vector<std::uint8_t> subset_ranks(const GfMatrix& a) {
  const int n = a.cols;
  std::vector<std::uint8_t> rk(std::size_t(1) << n, 0);
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) idx.push_back(j);
    rk[mask] = static_cast<std::uint8_t>(rank_of(a.columns_subset(idx)));
  }
  return rk;
}

bool extend_isomorphism(const std::vector<std::uint8_t>& ra, const std::vector<std::uint8_t>& rb,
                        int n, std::vector<int>& map, std::vector<bool>& used, int depth) {
  if (depth == n) return true;
  for (int t = 0; t < n; ++t) {
    if (used[t]) continue;
    map[depth] = t;
    // check rank agreement on all subsets of the mapped prefix containing depth
    bool ok = true;
    std::uint32_t prefix = (std::uint32_t(1) << depth) - 1;
    for (std::uint32_t sub = prefix;; sub = (sub - 1) & prefix) {
      std::uint32_t sa = sub | (std::uint32_t(1) << depth);
      std::uint32_t sb = 1u << t;
      for (int i = 0; i < depth; ++i)
        if (sub & (1u << i)) sb |= 1u << map[i];
      if (ra[sa] != rb[sb]) {
        ok = false;
        break;
      }
      if (sub == 0) break;
    }
    if (ok) {
      used[t] = true;
      if (extend_isomorphism(ra, rb, n, map, used, depth + 1)) return true;
      used[t] = false;
    }
  }
  return false;
}

}  // namespace

bool matroids_isomorphic(const GfMatrix& a, const GfMatrix& b) {
  if (a.cols != b.cols) return false;
  const int n = a.cols;
  if (n > 16) throw CapExceeded("matroids_isomorphic: ground set too large");
  if (n == 0) return true;
  if (rank_of(a) != rank_of(b)) return false;
  auto ra = subset_ranks(a);
  auto rb = subset_ranks(b);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  return extend_isomorphism(ra, rb, n, map, used, 0);
}

}  // namespace cogirth
