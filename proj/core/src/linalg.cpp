#include "cogirth/linalg.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <thread>

namespace cogirth {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

constexpr std::int64_t kScanCap = std::int64_t(1) << 24;  // cap on q^rank

}  // namespace

std::vector<std::uint8_t> GfMatrix::col(int j) const {
  std::vector<std::uint8_t> c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

GfMatrix GfMatrix::transposed() const {
  GfMatrix t(field, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.a[static_cast<std::size_t>(j) * rows + i] = at(i, j);
  return t;
}

GfMatrix GfMatrix::identity(const Gf& f, int n) {
  GfMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GfMatrix GfMatrix::from_rows(const Gf& f, const std::vector<std::vector<std::uint8_t>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  GfMatrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

GfMatrix GfMatrix::from_cols(const Gf& f, const std::vector<std::vector<std::uint8_t>>& cols) {
  int c = static_cast<int>(cols.size());
  int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
  GfMatrix m(f, r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(cols[j].size()) != r)
      throw std::invalid_argument("from_cols: ragged columns");
    for (int i = 0; i < r; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

GfMatrix GfMatrix::columns_subset(const std::vector<int>& idx) const {
  GfMatrix m(field, rows, static_cast<int>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] < 0 || idx[j] >= cols) throw std::out_of_range("columns_subset: bad index");
    for (int i = 0; i < rows; ++i)
      m.a[static_cast<std::size_t>(i) * m.cols + j] = at(i, idx[j]);
  }
  return m;
}

RrefResult rref(const GfMatrix& m) {
  const Gf& f = m.field;
  const int q = f.q();
  const std::uint8_t* mul = f.mul_table();
  const std::uint8_t* add = f.add_table();
  RrefResult res{m, 0, {}};
  GfMatrix& r = res.r;
  int pivot_row = 0;
  for (int c = 0; c < r.cols && pivot_row < r.rows; ++c) {
    int pr = -1;
    for (int i = pivot_row; i < r.rows; ++i)
      if (r.at(i, c) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != pivot_row)
      for (int j = 0; j < r.cols; ++j)
        std::swap(r.a[static_cast<std::size_t>(pr) * r.cols + j],
                  r.a[static_cast<std::size_t>(pivot_row) * r.cols + j]);
    // scale pivot row to leading 1
    int piv = r.at(pivot_row, c);
    if (piv != 1) {
      int s = f.inv(piv);
      for (int j = c; j < r.cols; ++j)
        r.a[static_cast<std::size_t>(pivot_row) * r.cols + j] =
            mul[r.at(pivot_row, j) * q + s];
    }
    // eliminate the column everywhere else
    for (int i = 0; i < r.rows; ++i) {
      if (i == pivot_row) continue;
      int v = r.at(i, c);
      if (v == 0) continue;
      int s = f.neg(v);
      for (int j = c; j < r.cols; ++j)
        r.a[static_cast<std::size_t>(i) * r.cols + j] =
            add[r.at(i, j) * q + mul[s * q + r.at(pivot_row, j)]];
    }
    res.pivots.push_back(c);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

int rank_of(const GfMatrix& m) { return rref(m).rank; }

GfMatrix row_basis(const GfMatrix& m) {
  RrefResult rr = rref(m);
  GfMatrix b(m.field, rr.rank, m.cols);
  std::copy(rr.r.a.begin(), rr.r.a.begin() + static_cast<std::size_t>(rr.rank) * m.cols,
            b.a.begin());
  return b;
}

GfMatrix nullspace_basis(const GfMatrix& m) {
  RrefResult rr = rref(m);
  const Gf& f = m.field;
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<std::uint8_t> x(m.cols, 0);
    x[fc] = 1;
    for (int i = 0; i < rr.rank; ++i)
      x[rr.pivots[i]] = static_cast<std::uint8_t>(f.neg(rr.r.at(i, fc)));
    basis.push_back(std::move(x));
  }
  return GfMatrix::from_rows(f, basis);
}

bool in_row_space(std::span<const std::uint8_t> v, const GfMatrix& m) {
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("in_row_space: dimension mismatch");
  RrefResult rr = rref(m);
  const Gf& f = m.field;
  std::vector<std::uint8_t> w(v.begin(), v.end());
  for (int i = 0; i < rr.rank; ++i) {
    int c = rr.pivots[i];
    int s = w[c];
    if (s == 0) continue;
    int ns = f.neg(s);
    for (int j = 0; j < m.cols; ++j)
      w[j] = static_cast<std::uint8_t>(f.add(w[j], f.mul(ns, rr.r.at(i, j))));
  }
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

bool in_col_space(std::span<const std::uint8_t> v, const GfMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows)
    throw std::invalid_argument("in_col_space: dimension mismatch");
  return in_row_space(v, m.transposed());
}

std::vector<std::vector<std::uint8_t>> projective_row_space(const GfMatrix& m) {
  GfMatrix b = row_basis(m);
  const Gf& f = m.field;
  const int q = f.q();
  const int r = b.rows, n = b.cols;
  if (r > 0 && ipow(q, r) > (std::int64_t(1) << 20))
    throw CapExceeded("projective_row_space: q^rank exceeds enumeration cap");
  std::vector<std::vector<std::uint8_t>> out;
  const std::uint8_t* add = f.add_table();
  const std::uint8_t* mul = f.mul_table();
  // Stepping a coefficient digit from a to a+1 (mod q) changes the combo by
  // (elem(a+1) - elem(a)) times the row; over extension fields that delta is
  // not constant, so it is looked up per step.
  std::vector<int> delta(q);
  for (int a = 0; a < q; ++a) delta[a] = f.sub((a + 1) % q, a);
  // Rows of a reduced basis have leading 1s at increasing pivots, so a
  // combination with first coefficient 1 is already a normalized vector.
  for (int j = 0; j < r; ++j) {
    int mdig = r - 1 - j;
    std::vector<int> d(mdig, 0);
    std::vector<std::uint8_t> v(b.row(j).begin(), b.row(j).end());
    out.push_back(v);
    std::int64_t steps = ipow(q, mdig) - 1;
    for (std::int64_t s = 0; s < steps; ++s) {
      int t = mdig - 1;
      for (;;) {
        int de = delta[d[t]];
        ++d[t];
        auto row = b.row(j + 1 + t);
        for (int i = 0; i < n; ++i) v[i] = add[v[i] * q + mul[de * q + row[i]]];
        if (d[t] < q) break;
        d[t] = 0;
        --t;
      }
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RowSpaceScan::RowSpaceScan(const GfMatrix& m, std::vector<std::int64_t> weights)
    : field_(m.field), n_(m.cols), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != n_)
    throw std::invalid_argument("RowSpaceScan: weight/column length mismatch");
  for (auto w : weights_)
    if (w < 1) throw std::invalid_argument("RowSpaceScan: nonpositive weight");
  GfMatrix b = row_basis(m);
  r_ = b.rows;
  const int q = field_.q();
  if (r_ > 0 && ipow(q, r_) > kScanCap)
    throw CapExceeded("RowSpaceScan: q^rank exceeds enumeration cap 2^24");
  classes_ = r_ == 0 ? 0 : (ipow(q, r_) - 1) / (q - 1);
  rows_ = b.a;
  if (q == 2) {
    words_ = std::max(1, (n_ + 63) / 64);
    bits_.assign(static_cast<std::size_t>(r_) * words_, 0);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < n_; ++j)
        if (b.at(i, j)) bits_[static_cast<std::size_t>(i) * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
  }
}

template <class F>
void RowSpaceScan::visit_gf2(std::int64_t lo, std::int64_t hi, F&& f) const {
  std::vector<std::uint64_t> v(words_);
  std::int64_t off = 0;
  for (int j = 0; j < r_ && off < hi; ++j) {
    const std::int64_t bs = std::int64_t(1) << (r_ - 1 - j);
    if (off + bs <= lo) {
      off += bs;
      continue;
    }
    const std::int64_t s0 = std::max<std::int64_t>(0, lo - off);
    // state for suffix counter s0 in Gray order
    std::copy_n(bits_.begin() + static_cast<std::size_t>(j) * words_, words_, v.begin());
    std::uint64_t g = static_cast<std::uint64_t>(s0) ^ (static_cast<std::uint64_t>(s0) >> 1);
    while (g) {
      int b = std::countr_zero(g);
      g &= g - 1;
      const std::uint64_t* row = &bits_[static_cast<std::size_t>(j + 1 + b) * words_];
      for (int w = 0; w < words_; ++w) v[w] ^= row[w];
    }
    for (std::int64_t s = s0; s < bs && off + s < hi; ++s) {
      if (s > s0) {
        int b = std::countr_zero(static_cast<std::uint64_t>(s));
        const std::uint64_t* row = &bits_[static_cast<std::size_t>(j + 1 + b) * words_];
        for (int w = 0; w < words_; ++w) v[w] ^= row[w];
      }
      f(v.data());
    }
    off += bs;
  }
}

template <class F>
void RowSpaceScan::visit_generic(std::int64_t lo, std::int64_t hi, F&& f) const {
  const int q = field_.q();
  const std::uint8_t* add = field_.add_table();
  const std::uint8_t* mul = field_.mul_table();
  // per-step coefficient delta: elem(a+1 mod q) - elem(a)
  std::vector<int> delta(q);
  for (int a = 0; a < q; ++a) delta[a] = field_.sub((a + 1) % q, a);
  std::vector<std::uint8_t> v(n_);
  std::vector<int> d;
  std::int64_t off = 0;
  for (int j = 0; j < r_ && off < hi; ++j) {
    const int mdig = r_ - 1 - j;
    const std::int64_t bs = ipow(q, mdig);
    if (off + bs <= lo) {
      off += bs;
      continue;
    }
    const std::int64_t s0 = std::max<std::int64_t>(0, lo - off);
    d.assign(mdig, 0);
    {
      std::int64_t t = s0;
      for (int i = mdig - 1; i >= 0; --i) {
        d[i] = static_cast<int>(t % q);
        t /= q;
      }
    }
    const std::uint8_t* lead = &rows_[static_cast<std::size_t>(j) * n_];
    std::copy_n(lead, n_, v.begin());
    for (int t = 0; t < mdig; ++t) {
      if (d[t] == 0) continue;
      const std::uint8_t* row = &rows_[static_cast<std::size_t>(j + 1 + t) * n_];
      for (int i = 0; i < n_; ++i) v[i] = add[v[i] * q + mul[d[t] * q + row[i]]];
    }
    for (std::int64_t s = s0; s < bs && off + s < hi; ++s) {
      if (s > s0) {
        // odometer step: a digit moving a -> a+1 (mod q) contributes
        // (elem(a+1) - elem(a)) times its row
        int t = mdig - 1;
        for (;;) {
          int de = delta[d[t]];
          ++d[t];
          const std::uint8_t* row = &rows_[static_cast<std::size_t>(j + 1 + t) * n_];
          for (int i = 0; i < n_; ++i) v[i] = add[v[i] * q + mul[de * q + row[i]]];
          if (d[t] < q) break;
          d[t] = 0;
          --t;
        }
      }
      f(v.data());
    }
    off += bs;
  }
}

void RowSpaceScan::for_each(std::int64_t lo, std::int64_t hi, const Visitor& visit) const {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min(hi, classes_);
  if (lo >= hi) return;
  if (field_.q() == 2) {
    visit_gf2(lo, hi, [&](const std::uint64_t* v) {
      std::int64_t w = 0;
      std::vector<int> sup;
      for (int word = 0; word < words_; ++word) {
        std::uint64_t x = v[word];
        while (x) {
          int b = std::countr_zero(x);
          x &= x - 1;
          int idx = word * 64 + b;
          sup.push_back(idx);
          w += weights_[idx];
        }
      }
      visit(w, sup);
    });
  } else {
    visit_generic(lo, hi, [&](const std::uint8_t* v) {
      std::int64_t w = 0;
      std::vector<int> sup;
      for (int i = 0; i < n_; ++i)
        if (v[i]) {
          sup.push_back(i);
          w += weights_[i];
        }
      visit(w, sup);
    });
  }
}

RowSpaceScan::MinResult RowSpaceScan::min_weight_support_range(std::int64_t lo,
                                                               std::int64_t hi) const {
  MinResult best;
  best.weight = -1;
  auto consider = [&](std::int64_t w, std::vector<int>&& sup) {
    if (best.weight < 0 || w < best.weight || (w == best.weight && sup < best.support)) {
      best.weight = w;
      best.support = std::move(sup);
    }
  };
  if (field_.q() == 2) {
    visit_gf2(lo, hi, [&](const std::uint64_t* v) {
      std::int64_t w = 0;
      for (int word = 0; word < words_; ++word) {
        std::uint64_t x = v[word];
        while (x) {
          w += weights_[word * 64 + std::countr_zero(x)];
          x &= x - 1;
        }
      }
      if (best.weight >= 0 && w > best.weight) return;
      std::vector<int> sup;
      for (int word = 0; word < words_; ++word) {
        std::uint64_t x = v[word];
        while (x) {
          sup.push_back(word * 64 + std::countr_zero(x));
          x &= x - 1;
        }
      }
      consider(w, std::move(sup));
    });
  } else {
    visit_generic(lo, hi, [&](const std::uint8_t* v) {
      std::int64_t w = 0;
      for (int i = 0; i < n_; ++i)
        if (v[i]) w += weights_[i];
      if (best.weight >= 0 && w > best.weight) return;
      std::vector<int> sup;
      for (int i = 0; i < n_; ++i)
        if (v[i]) sup.push_back(i);
      consider(w, std::move(sup));
    });
  }
  return best;
}

RowSpaceScan::MinResult RowSpaceScan::min_weight_support(int threads) const {
  if (classes_ == 0) return {};
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(threads, 1);
  if (threads == 1 || classes_ < (1 << 14)) return min_weight_support_range(0, classes_);
  std::vector<std::future<MinResult>> parts;
  std::int64_t chunk = (classes_ + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::int64_t lo = t * chunk, hi = std::min(classes_, lo + chunk);
    if (lo >= hi) break;
    parts.push_back(std::async(std::launch::async,
                               [this, lo, hi] { return min_weight_support_range(lo, hi); }));
  }
  MinResult best;
  best.weight = -1;
  for (auto& fut : parts) {
    MinResult r = fut.get();
    if (r.weight < 0) continue;
    if (best.weight < 0 || r.weight < best.weight ||
        (r.weight == best.weight && r.support < best.support))
      best = std::move(r);
  }
  return best;
}

std::vector<std::pair<std::vector<int>, std::int64_t>> row_space_supports(
    const GfMatrix& m, const std::vector<std::int64_t>& weights) {
  RowSpaceScan scan(m, weights);
  std::vector<std::pair<std::vector<int>, std::int64_t>> out;
  scan.for_each(0, scan.class_count(), [&](std::int64_t w, const std::vector<int>& sup) {
    out.emplace_back(sup, w);
  });
  return out;
}

}  // namespace cogirth
