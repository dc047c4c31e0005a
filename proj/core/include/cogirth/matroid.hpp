// Represented weighted matroids: a matrix over GF(q) whose columns are the
// ground elements, plus a positive integer weight per element. Loops,
// parallel classes, simplification, deletion and weighted contraction
// (contract, then collapse each parallel class to one element carrying the
// class's total weight).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cogirth/linalg.hpp"

namespace cogirth {

struct WeightedMatroid {
  Gf field;
  GfMatrix cols;                     // one column per ground element
  std::vector<int> labels;           // distinct element identifiers
  std::vector<std::int64_t> weights; // all >= 1

  int n() const { return cols.cols; }
  int index_of(int label) const;  // throws on unknown label

  bool operator==(const WeightedMatroid& o) const {
    return field == o.field && cols == o.cols && labels == o.labels && weights == o.weights;
  }
};

struct ParallelClass {
  int representative = 0;            // smallest label in the class
  std::vector<int> members;          // labels, ascending
  std::int64_t class_weight = 0;
};

WeightedMatroid from_matrix(const Gf& f, const GfMatrix& columns,
                            std::optional<std::vector<std::int64_t>> weights = std::nullopt,
                            std::optional<std::vector<int>> labels = std::nullopt);

// Column-vector convenience constructor.
WeightedMatroid from_points(const Gf& f, const std::vector<std::vector<std::uint8_t>>& points,
                            std::optional<std::vector<std::int64_t>> weights = std::nullopt);

// Elements represented by the zero column, as labels.
std::vector<int> loops(const WeightedMatroid& m);

// Partition of the non-loop elements into maximal parallel classes.
std::vector<ParallelClass> parallel_classes(const WeightedMatroid& m);

bool is_simple(const WeightedMatroid& m);

// Loops removed; one representative column per parallel class, carrying the
// class's total weight. Throws std::invalid_argument if nothing of positive
// rank remains.
WeightedMatroid simplify(const WeightedMatroid& m);

// Restriction to E(M) - Y (Y given as labels).
WeightedMatroid delete_set(const WeightedMatroid& m, const std::vector<int>& y);

// Weighted contraction of Y from a simple matroid: columns are projected to
// a complement of span(Y), elements falling into span(Y) vanish with their
// weight, and each surviving parallel class collapses to its smallest label
// with the class's total weight.
WeightedMatroid contract_set(const WeightedMatroid& m, const std::vector<int>& y);

int rank(const WeightedMatroid& m);
std::int64_t total_weight(const WeightedMatroid& m);

// Matroid isomorphism of two represented matroids by exhaustive search over
// rank-preserving bijections. Intended for tiny ground sets (n <= 16).
bool matroids_isomorphic(const GfMatrix& a, const GfMatrix& b);

// Normalize a nonzero vector so its first nonzero coordinate is 1.
std::vector<std::uint8_t> normalize_vector(const Gf& f, std::span<const std::uint8_t> v);

}  // namespace cogirth
