// Vectors and matrices over GF(q): reduced row echelon form, rank, span
// membership, and exhaustive enumeration of the projective classes of the
// row space (the codewords of the code generated by the rows).
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cogirth/gf.hpp"

namespace cogirth {

struct GfMatrix {
  Gf field;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> a;  // row-major, rows*cols entries in 0..q-1

  GfMatrix(Gf f, int r, int c) : field(std::move(f)), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {
    if (r < 0 || c < 0) throw std::invalid_argument("GfMatrix: negative dimension");
  }

  std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  void set(int i, int j, int v) {
    if (v < 0 || v >= field.q()) throw std::out_of_range("GfMatrix: entry out of field range");
    a[static_cast<std::size_t>(i) * cols + j] = static_cast<std::uint8_t>(v);
  }

  std::span<const std::uint8_t> row(int i) const {
    return {a.data() + static_cast<std::size_t>(i) * cols, static_cast<std::size_t>(cols)};
  }
  std::vector<std::uint8_t> col(int j) const;

  GfMatrix transposed() const;

  static GfMatrix identity(const Gf& f, int n);
  static GfMatrix from_rows(const Gf& f, const std::vector<std::vector<std::uint8_t>>& rows);
  static GfMatrix from_cols(const Gf& f, const std::vector<std::vector<std::uint8_t>>& cols);

  // Matrix whose columns are the given subset (by index, in the given order).
  GfMatrix columns_subset(const std::vector<int>& idx) const;

  bool operator==(const GfMatrix& o) const {
    return field == o.field && rows == o.rows && cols == o.cols && a == o.a;
  }
};

struct RrefResult {
  GfMatrix r;
  int rank = 0;
  std::vector<int> pivots;  // strictly increasing column indices
};

RrefResult rref(const GfMatrix& m);
int rank_of(const GfMatrix& m);

// Nonzero rows of rref(m), i.e. a canonical basis of the row space.
GfMatrix row_basis(const GfMatrix& m);

// Row basis of the solution space of m * x = 0 (vectors of length m.cols).
GfMatrix nullspace_basis(const GfMatrix& m);

// Is v a linear combination of the rows (resp. columns) of m?
bool in_row_space(std::span<const std::uint8_t> v, const GfMatrix& m);
bool in_col_space(std::span<const std::uint8_t> v, const GfMatrix& m);

// All normalized representatives (first nonzero coordinate 1) of the
// projective classes of nonzero row-space vectors, sorted lexicographically.
// Capped; throws CapExceeded past ~2^20 classes.
std::vector<std::vector<std::uint8_t>> projective_row_space(const GfMatrix& m);

// Streaming enumeration of the (q^r - 1)/(q - 1) projective row-space
// classes of a matrix together with the weighted size of their supports.
// Scalar multiples are visited exactly once. The class index space [0, N)
// can be split into disjoint ranges and scanned concurrently; results are
// independent of the partitioning.
class RowSpaceScan {
 public:
  // Weights are per column, all >= 1. Throws CapExceeded when q^rank > 2^24.
  RowSpaceScan(const GfMatrix& m, std::vector<std::int64_t> weights);

  std::int64_t class_count() const { return classes_; }
  int rank() const { return r_; }

  using Visitor = std::function<void(std::int64_t weight, const std::vector<int>& support)>;
  void for_each(std::int64_t lo, std::int64_t hi, const Visitor& visit) const;

  struct MinResult {
    std::int64_t weight = 0;
    std::vector<int> support;  // ascending column indices; lex-least among minima
  };
  // Minimum weighted support over all classes; empty support when rank 0.
  // Deterministic for any thread count.
  MinResult min_weight_support(int threads = 0) const;
  MinResult min_weight_support_range(std::int64_t lo, std::int64_t hi) const;

 private:
  Gf field_;
  int r_ = 0;  // rank
  int n_ = 0;
  std::int64_t classes_ = 0;
  std::vector<std::int64_t> weights_;
  // generic representation: r_ rows of n_ entries
  std::vector<std::uint8_t> rows_;
  // packed representation for q == 2
  int words_ = 0;
  std::vector<std::uint64_t> bits_;

  template <class F>
  void visit_gf2(std::int64_t lo, std::int64_t hi, F&& f) const;
  template <class F>
  void visit_generic(std::int64_t lo, std::int64_t hi, F&& f) const;
};

// Materialized form of the scan, for small instances.
std::vector<std::pair<std::vector<int>, std::int64_t>> row_space_supports(
    const GfMatrix& m, const std::vector<std::int64_t>& weights);

}  // namespace cogirth
