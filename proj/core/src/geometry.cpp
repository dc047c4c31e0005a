#include "cogirth/geometry.hpp"

#include <algorithm>
#include <set>

namespace cogirth {

namespace {

constexpr std::int64_t kPointCap = std::int64_t(1) << 20;

void check_pg_args(int r, const Gf& f) {
  if (r < 1) throw std::invalid_argument("pg: rank must be >= 1");
  if (pg_size(r, f.q()) > kPointCap) throw CapExceeded("pg: point count exceeds cap");
}

}  // namespace

std::int64_t pg_size(int r, int q) {
  std::int64_t n = 0, p = 1;
  for (int i = 0; i < r; ++i) {
    n += p;
    p *= q;
  }
  return n;
}

bool PointSet::contains(const std::vector<std::uint8_t>& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

PointSet pg(int r, const Gf& f) {
  check_pg_args(r, f);
  auto pts = projective_row_space(GfMatrix::identity(f, r));
  return PointSet{f, r, std::move(pts)};
}

PointSet ag(int r, const Gf& f) {
  check_pg_args(r, f);
  PointSet all = pg(r, f);
  std::vector<std::vector<std::uint8_t>> pts;
  for (auto& p : all.points)
    if (p[0] != 0) pts.push_back(p);
  return PointSet{f, r, std::move(pts)};
}

PointSet bose_burton(int r, int k, const Gf& f) {
  if (k < 1 || k >= r) throw std::invalid_argument("bose_burton: need 1 <= k < r");
  PointSet all = pg(r, f);
  std::vector<std::vector<std::uint8_t>> pts;
  for (auto& p : all.points) {
    bool in_deleted = true;  // supported on the last k coordinates only
    for (int i = 0; i < r - k && in_deleted; ++i) in_deleted = p[i] == 0;
    if (!in_deleted) pts.push_back(p);
  }
  return PointSet{f, r, std::move(pts)};
}

PointSet span_points(const Gf& f, int ambient_rank,
                     const std::vector<std::vector<std::uint8_t>>& generators) {
  if (generators.empty()) return PointSet{f, ambient_rank, {}};
  auto pts = projective_row_space(GfMatrix::from_rows(f, generators));
  return PointSet{f, ambient_rank, std::move(pts)};
}

Embedding embed_in_pg(const WeightedMatroid& m) {
  if (!is_simple(m)) throw std::invalid_argument("embed_in_pg: matroid must be simple");
  GfMatrix reduced = row_basis(m.cols);
  const int r = reduced.rows;
  if (r < 1) throw std::invalid_argument("embed_in_pg: rank-zero matroid");
  const Gf& f = m.field;
  std::vector<std::vector<std::uint8_t>> elem;
  for (int j = 0; j < m.n(); ++j) elem.push_back(normalize_vector(f, reduced.col(j)));

  PointSet all = pg(r, f);
  std::set<std::vector<std::uint8_t>> used(elem.begin(), elem.end());
  std::vector<std::vector<std::uint8_t>> comp;
  for (auto& p : all.points)
    if (!used.count(p)) comp.push_back(p);
  return Embedding{f, r, std::move(elem), PointSet{f, r, std::move(comp)}};
}

FlatInfo flat_rank(const PointSet& s) {
  if (s.points.empty()) return {0, true};
  GfMatrix m = GfMatrix::from_rows(s.field, s.points);
  int rk = rank_of(m);
  // A flat holds every PG point of its span, and spans of rank k hold
  // exactly (q^k - 1)/(q - 1) points.
  bool flat = s.size() == pg_size(rk, s.field.q());
  return {rk, flat};
}

std::vector<std::vector<std::uint8_t>> hyperplane_normals_containing(
    const Gf& f, int r, const std::vector<std::vector<std::uint8_t>>& pts) {
  if (pts.empty()) {
    return pg(r, f).points;
  }
  GfMatrix m = GfMatrix::from_rows(f, pts);
  GfMatrix ns = nullspace_basis(m);  // covectors u with u . p = 0 for all p
  if (ns.rows == 0) return {};
  return projective_row_space(ns);
}

namespace {

PointSet hyperplane_points(const Gf& f, int r, const std::vector<std::uint8_t>& normal) {
  PointSet all = pg(r, f);
  std::vector<std::vector<std::uint8_t>> pts;
  for (auto& p : all.points) {
    int dot = 0;
    for (int i = 0; i < r; ++i) dot = f.add(dot, f.mul(normal[i], p[i]));
    if (dot == 0) pts.push_back(p);
  }
  return PointSet{f, r, std::move(pts)};
}

}  // namespace

std::vector<PointSet> hyperplanes_containing(const PointSet& flat_s, int r) {
  FlatInfo fi = flat_rank(flat_s);
  if (!fi.is_flat) throw std::invalid_argument("hyperplanes_containing: input is not a flat");
  const Gf& f = flat_s.field;
  std::vector<PointSet> out;
  for (auto& u : hyperplane_normals_containing(f, r, flat_s.points))
    out.push_back(hyperplane_points(f, r, u));
  return out;
}

std::vector<PointSet> pk1_copies_containing(const PointSet& complement, int r) {
  FlatInfo fi = flat_rank(complement);
  if (!fi.is_flat) throw std::invalid_argument("pk1_copies_containing: input is not a flat");
  const int k = fi.rank;
  if (k < 1 || k >= r) throw std::invalid_argument("pk1_copies_containing: need 1 <= k < r");
  const Gf& f = complement.field;
  PointSet all = pg(r, f);
  std::set<std::vector<std::vector<std::uint8_t>>> seen;
  std::vector<PointSet> out;
  for (auto& x : all.points) {
    if (complement.contains(x)) continue;
    auto gens = complement.points;
    gens.push_back(x);
    PointSet flat = span_points(f, r, gens);
    if (seen.insert(flat.points).second) out.push_back(std::move(flat));
  }
  return out;
}

std::vector<PointSet> all_lines(const Gf& f, int r) {
  PointSet all = pg(r, f);
  std::set<std::vector<std::vector<std::uint8_t>>> seen;
  std::vector<PointSet> out;
  const int n = static_cast<int>(all.points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PointSet line = span_points(f, r, {all.points[i], all.points[j]});
      if (seen.insert(line.points).second) out.push_back(std::move(line));
    }
  return out;
}

}  // namespace cogirth
