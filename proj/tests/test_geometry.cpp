#include <doctest.h>

#include <set>

#include "cogirth/geometry.hpp"

using namespace cogirth;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// the canonical PG(k-1,q) spanned by the last k coordinates
PointSet canonical_flat(const Gf& f, int r, int k) {
  PointSet all = pg(r, f);
  std::vector<std::vector<std::uint8_t>> pts;
  for (auto& p : all.points) {
    bool ok = true;
    for (int i = 0; i < r - k && ok; ++i) ok = p[i] == 0;
    if (ok) pts.push_back(p);
  }
  return PointSet{f, r, std::move(pts)};
}

}  // namespace

TEST_CASE("point counts match the closed forms") {
  for (int q : {2, 3, 4, 5}) {
    Gf f(q);
    for (int r = 1; r <= 5; ++r) {
      CAPTURE(q);
      CAPTURE(r);
      CHECK(pg(r, f).size() == pg_size(r, q));
      CHECK(ag(r, f).size() == ipow(q, r - 1));
      for (int k = 1; k < r; ++k)
        CHECK(bose_burton(r, k, f).size() == pg_size(r, q) - pg_size(k, q));
    }
  }
  Gf f2(2);
  CHECK(pg(3, f2).size() == 7);
  CHECK(pg(4, f2).size() == 15);
  CHECK(ag(4, f2).size() == 8);
  CHECK(bose_burton(4, 1, f2).size() == 14);
  CHECK(bose_burton(3, 1, f2).size() == 6);
  CHECK(pg(1, Gf(7)).size() == 1);
  CHECK(ag(1, Gf(7)).size() == 1);
  CHECK_THROWS_AS(bose_burton(3, 3, f2), std::invalid_argument);
}

TEST_CASE("points are normalized, unique and sorted") {
  for (int q : {2, 3, 4, 5}) {
    Gf f(q);
    auto ps = pg(3, f);
    CHECK(std::is_sorted(ps.points.begin(), ps.points.end()));
    std::set<std::vector<std::uint8_t>> uniq(ps.points.begin(), ps.points.end());
    CHECK(uniq.size() == ps.points.size());
    for (auto& p : ps.points) {
      int first = 0;
      while (first < 3 && p[first] == 0) ++first;
      REQUIRE(first < 3);
      CHECK(p[first] == 1);
    }
  }
}

TEST_CASE("deleting a hyperplane leaves the affine geometry") {
  for (int q : {2, 3, 4}) {
    Gf f(q);
    for (int r = 2; r <= 4; ++r) CHECK(bose_burton(r, r - 1, f) == ag(r, f));
  }
}

TEST_CASE("every line of PG has q+1 points") {
  for (int q : {2, 3, 4}) {
    Gf f(q);
    auto lines = all_lines(f, 3);
    // every pair of points lies on one line, a line holds C(q+1,2) pairs
    CHECK(static_cast<std::int64_t>(lines.size()) ==
          pg_size(3, q) * (pg_size(3, q) - 1) / ((q + 1) * q));
    for (auto& l : lines) CHECK(l.size() == q + 1);
  }
}

TEST_CASE("flat recognition") {
  Gf f2(2);
  auto fano = pg(3, f2);
  PointSet single{f2, 3, {fano.points[0]}};
  auto fi = flat_rank(single);
  CHECK(fi.rank == 1);
  CHECK(fi.is_flat);

  PointSet two{f2, 3, {fano.points[0], fano.points[1]}};
  fi = flat_rank(two);
  CHECK(fi.rank == 2);
  CHECK_FALSE(fi.is_flat);  // the third collinear point is missing

  auto line = span_points(f2, 3, {fano.points[0], fano.points[1]});
  CHECK(line.size() == 3);
  fi = flat_rank(line);
  CHECK(fi.rank == 2);
  CHECK(fi.is_flat);

  PointSet empty{f2, 3, {}};
  fi = flat_rank(empty);
  CHECK(fi.rank == 0);
  CHECK(fi.is_flat);
}

TEST_CASE("embedding a simple matroid") {
  Gf f2(2);
  auto fano = from_points(f2, pg(3, f2).points);
  auto emb = embed_in_pg(fano);
  CHECK(emb.complement.points.empty());

  auto bb = from_points(f2, bose_burton(3, 1, f2).points);
  auto emb2 = embed_in_pg(bb);
  CHECK(emb2.complement.size() == 1);

  // redundant coordinates get rewritten into a rank-r basis
  GfMatrix padded(f2, 5, 6);  // rows 3 and 4 stay zero
  auto pts = bose_burton(3, 1, f2).points;
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 3; ++i) padded.set(i, j, pts[j][i]);
  auto mp = from_matrix(f2, padded);
  auto emb3 = embed_in_pg(mp);
  CHECK(emb3.ambient_rank == 3);
  CHECK(emb3.complement.size() == 1);

  auto par = from_matrix(f2, GfMatrix::from_cols(f2, {{1, 0}, {1, 0}}));
  CHECK_THROWS_AS(embed_in_pg(par), std::invalid_argument);
}

TEST_CASE("hyperplanes containing a flat") {
  Gf f2(2);
  auto one_point = canonical_flat(f2, 4, 1);
  auto hs = hyperplanes_containing(one_point, 4);
  CHECK(hs.size() == 7);
  for (auto& h : hs) {
    CHECK(h.size() == 7);
    CHECK(h.contains(one_point.points[0]));
  }

  PointSet empty{f2, 3, {}};
  CHECK(hyperplanes_containing(empty, 3).size() == 7);  // the lines of the Fano plane

  auto hyper = canonical_flat(f2, 3, 2);
  auto self = hyperplanes_containing(hyper, 3);
  REQUIRE(self.size() == 1);
  CHECK(self[0] == hyper);

  PointSet notflat{f2, 3, {pg(3, f2).points[0], pg(3, f2).points[1]}};
  CHECK_THROWS_AS(hyperplanes_containing(notflat, 3), std::invalid_argument);
}

TEST_CASE("rank-(k+1) flats through a flat partition the rest of PG") {
  for (int q : {2, 3}) {
    Gf f(q);
    for (int r = 3; r <= 4; ++r) {
      for (int k = 1; k < r; ++k) {
        auto flat = canonical_flat(f, r, k);
        auto copies = pk1_copies_containing(flat, r);
        CHECK(static_cast<std::int64_t>(copies.size()) == pg_size(r - k, q));
        std::set<std::vector<std::uint8_t>> covered;
        for (const auto& copy : copies) {
          CHECK(copy.size() == pg_size(k + 1, q));
          std::int64_t outside = 0;
          for (const auto& p : copy.points)
            if (!flat.contains(p)) {
              ++outside;
              CHECK(covered.insert(p).second);  // pairwise intersections are the flat
            }
          CHECK(outside == ipow(q, k));
        }
        CHECK(static_cast<std::int64_t>(covered.size()) == pg_size(r, q) - pg_size(k, q));
      }
    }
  }
  Gf f2(2);
  CHECK(pk1_copies_containing(canonical_flat(f2, 4, 1), 4).size() == 7);
  CHECK(pk1_copies_containing(canonical_flat(f2, 3, 1), 3).size() == 3);
  CHECK(pk1_copies_containing(canonical_flat(f2, 3, 2), 3).size() == 1);
}

TEST_CASE("a hyperplane off the flat meets each copy in q-1 affine pieces") {
  // complement-of-hyperplane restricted to a rank-(k+1) copy through a flat
  // it does not contain has exactly (q-1) q^{k-1} points
  for (int q : {2, 3}) {
    Gf f(q);
    for (int r = 3; r <= (q == 2 ? 5 : 4); ++r) {
      for (int k = 1; k < r; ++k) {
        auto flat = canonical_flat(f, r, k);
        auto copies = pk1_copies_containing(flat, r);
        auto all_normals = hyperplane_normals_containing(f, r, {});
        for (const auto& u : all_normals) {
          bool contains_flat = true;
          for (const auto& p : flat.points) {
            int dot = 0;
            for (int i = 0; i < r; ++i) dot = f.add(dot, f.mul(u[i], p[i]));
            if (dot != 0) {
              contains_flat = false;
              break;
            }
          }
          if (contains_flat) continue;
          for (const auto& copy : copies) {
            std::int64_t cnt = 0;
            for (const auto& p : copy.points) {
              if (flat.contains(p)) continue;
              int dot = 0;
              for (int i = 0; i < r; ++i) dot = f.add(dot, f.mul(u[i], p[i]));
              if (dot != 0) ++cnt;
            }
            CHECK(cnt == (q - 1) * ipow(q, k - 1));
          }
        }
      }
    }
  }
}
