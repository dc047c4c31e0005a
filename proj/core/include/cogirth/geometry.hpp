// Projective geometry PG(r-1,q) over small finite fields: point sets for
// PG, AG and Bose-Burton geometries, embedding of a simple matroid with
// complement analysis, flats, and hyperplane / P_{k+1}-copy enumeration.
//
// Points are always normalized (first nonzero coordinate 1) and point sets
// are kept lexicographically sorted.
#pragma once

#include <cstdint>
#include <vector>

#include "cogirth/matroid.hpp"

namespace cogirth {

struct PointSet {
  Gf field;
  int ambient_rank = 0;  // the r of PG(r-1,q)
  std::vector<std::vector<std::uint8_t>> points;  // normalized, sorted, unique

  std::int64_t size() const { return static_cast<std::int64_t>(points.size()); }
  bool contains(const std::vector<std::uint8_t>& p) const;
  bool operator==(const PointSet& o) const {
    return field == o.field && ambient_rank == o.ambient_rank && points == o.points;
  }
};

std::int64_t pg_size(int r, int q);  // (q^r - 1)/(q - 1)

// All points of PG(r-1,q), in lexicographic order.
PointSet pg(int r, const Gf& f);
// The q^{r-1} points off the hyperplane x_1 = 0 (canonical affine chart).
PointSet ag(int r, const Gf& f);
// PG(r-1,q) minus the canonical PG(k-1,q) spanned by the last k coordinates.
PointSet bose_burton(int r, int k, const Gf& f);

// All points of PG lying in the span of the given generators.
PointSet span_points(const Gf& f, int ambient_rank,
                     const std::vector<std::vector<std::uint8_t>>& generators);

struct Embedding {
  Gf field;
  int ambient_rank = 0;
  std::vector<std::vector<std::uint8_t>> element_points;  // per element of M, normalized
  PointSet complement;                                    // PG points not used by M
};

// Embed a simple matroid of rank r into PG(r-1,q). Columns are first
// rewritten in a rank-r basis (the pivot rows of the rref), then normalized.
Embedding embed_in_pg(const WeightedMatroid& m);

struct FlatInfo {
  int rank = 0;
  bool is_flat = false;  // S equals every PG point of its span
};
FlatInfo flat_rank(const PointSet& s);

// All hyperplanes (rank r-1 flats) of PG(r-1,q) containing the given flat,
// as point sets; (q^{r-k} - 1)/(q - 1) of them for a rank-k flat.
std::vector<PointSet> hyperplanes_containing(const PointSet& flat_s, int r);

// Normal covectors of the hyperplanes containing the span of the given
// points (normalized, lexicographic order).
std::vector<std::vector<std::uint8_t>> hyperplane_normals_containing(
    const Gf& f, int r, const std::vector<std::vector<std::uint8_t>>& pts);

// All rank-(k+1) flats of PG(r-1,q) containing the given rank-k flat.
std::vector<PointSet> pk1_copies_containing(const PointSet& complement, int r);

// All rank-2 flats (lines) of PG(r-1,q).
std::vector<PointSet> all_lines(const Gf& f, int r);

}  // namespace cogirth
