#include <doctest.h>

#include <random>

#include "cogirth/io.hpp"
#include "cogirth/verify.hpp"

using namespace cogirth;

namespace {

WeightedMatroid first_points_line(int q, int n, std::vector<std::int64_t> w) {
  Gf f(q);
  auto pts = pg(2, f).points;
  pts.resize(n);
  return from_points(f, pts, std::move(w));
}

GfMatrix random_invertible(const Gf& f, int r, std::mt19937_64& rng) {
  for (;;) {
    GfMatrix t(f, r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) t.set(i, j, int(rng() % f.q()));
    if (rank_of(t) == r) return t;
  }
}

WeightedMatroid change_basis(const WeightedMatroid& m, const GfMatrix& t) {
  const Gf& f = m.field;
  GfMatrix out(f, t.rows, m.n());
  for (int j = 0; j < m.n(); ++j)
    for (int i = 0; i < t.rows; ++i) {
      int acc = 0;
      for (int k = 0; k < t.cols; ++k) acc = f.add(acc, f.mul(t.at(i, k), m.cols.at(k, j)));
      out.set(i, j, acc);
    }
  return from_matrix(f, out, m.weights);
}

}  // namespace

TEST_CASE("rank-2 bound") {
  auto rep = check_rank2(first_points_line(2, 3, {1, 1, 1}));
  CHECK(rep.bound_holds);
  CHECK(rep.equality);  // ratio 3/2 = n/(n-1)
  CHECK(rep.ratio == Fraction::reduced(3, 2));
  CHECK(*rep.characterization_consistent);
  CHECK(rep.internal_ok);

  rep = check_rank2(first_points_line(2, 3, {1, 1, 2}));
  CHECK(rep.total_weight == 4);
  CHECK(rep.cogirth_value == 2);
  CHECK_FALSE(rep.equality);
  CHECK(*rep.characterization_consistent);

  rep = check_rank2(first_points_line(2, 2, {3, 3}));
  CHECK(rep.cogirth_value == 3);  // cocircuits are singletons
  CHECK(rep.equality);
  CHECK(*rep.characterization_consistent);

  auto fano = from_points(Gf(2), pg(3, Gf(2)).points);
  CHECK_THROWS_AS(check_rank2(fano), std::invalid_argument);
}

TEST_CASE("main bound on the Fano plane minus a point") {
  Gf f2(2);
  auto m = from_points(f2, bose_burton(3, 1, f2).points);
  auto rep = check_main_theorem(m);
  CHECK(rep.total_weight == 6);
  CHECK(rep.cogirth_value == 3);
  CHECK(rep.equality);
  CHECK(rep.cond_i->holds);
  CHECK(rep.values.at("complement_rank") == 1);
  CHECK(rep.cond_ii->holds);
  CHECK(rep.cond_iii->holds);
  CHECK(rep.cond_iii_prime->holds);
  CHECK(*rep.characterization_consistent);
  CHECK(*rep.iii_prime_consistent);
  CHECK(rep.internal_ok);
  CHECK(rep.values.at("type_one_count") == 3);
  CHECK(rep.values.at("type_two_count") == 4);
  CHECK(rep.values.at("min_type_one_weight") == 4);
  CHECK(rep.values.at("min_type_two_weight") == 3);
}

TEST_CASE("main bound rejects full geometries and non-simple input") {
  Gf f2(2);
  auto fano = from_points(f2, pg(3, f2).points);
  CHECK_THROWS_AS(check_main_theorem(fano), std::invalid_argument);

  auto with_loop = from_matrix(f2, GfMatrix::from_cols(f2, {{1, 0}, {0, 0}}));
  CHECK_THROWS_WITH_AS(check_main_theorem(with_loop),
                       doctest::Contains("loops"), std::invalid_argument);
}

TEST_CASE("main bound at rank 2 over GF(3)") {
  // three points of the four-point line: equality with k = r-1
  auto m = first_points_line(3, 3, {1, 1, 1});
  auto rep = check_main_theorem(m);
  CHECK(rep.total_weight == 3);
  CHECK(rep.cogirth_value == 2);
  CHECK(rep.equality);  // 3/2 = q/(q-1)
  CHECK(rep.cond_i->holds);
  CHECK(rep.values.at("complement_rank") == 1);  // k = r-1
  CHECK(rep.cond_ii->holds);
  CHECK(rep.cond_iii->holds);  // vacuous: no type-I cocircuits
  CHECK(rep.values.at("type_one_count") == 0);
  CHECK(*rep.characterization_consistent);
}

TEST_CASE("weight cap (iii)'") {
  Gf f2(2);
  auto bb = from_points(f2, bose_burton(3, 1, f2).points);
  auto rep = check_condition_iii_prime(bb);
  CHECK(rep.kind == CheckKind::iii_prime);
  CHECK(rep.cond_iii_prime->holds);  // 4*1 <= 6
  CHECK(rep.values.at("iii_prime_lhs") == 4);

  // q^{r-1} w(e) = 15 > 7 = w(M), so equality must fail too
  auto m = first_points_line(3, 3, {5, 1, 1});
  rep = check_condition_iii_prime(m);
  CHECK_FALSE(rep.cond_iii_prime->holds);
  CHECK(rep.values.at("iii_prime_lhs") == 15);
  CHECK(rep.values.at("iii_prime_rhs") == 7);
  CHECK_FALSE(rep.equality);
  CHECK(*rep.iii_prime_consistent);
}

TEST_CASE("type-II cocircuit weight identity") {
  Gf f2(2);
  auto bb = from_points(f2, bose_burton(3, 1, f2).points);
  auto rep = check_type_ii_sublemma(bb, embed_in_pg(bb));
  CHECK(rep.equality);
  CHECK(rep.values.at("type_two_weight") == 3);  // (q-1)/q * 6

  auto bb42 = from_points(f2, bose_burton(4, 2, f2).points);
  rep = check_type_ii_sublemma(bb42, embed_in_pg(bb42));
  CHECK(rep.equality);
  CHECK(rep.total_weight == 12);
  CHECK(rep.values.at("type_two_weight") == 6);

  // perturbing one weight breaks (ii), which makes the identity inapplicable
  auto pts = bose_burton(3, 1, f2).points;
  std::vector<std::int64_t> w(pts.size(), 1);
  w[0] = 2;
  auto skew = from_points(f2, pts, w);
  CHECK_THROWS_AS(check_type_ii_sublemma(skew, embed_in_pg(skew)), std::invalid_argument);
}

TEST_CASE("projective geometry bound") {
  Gf f2(2);
  auto fano = from_points(f2, pg(3, f2).points);
  auto rep = check_pg_proposition(fano);
  CHECK(rep.ratio == Fraction::reduced(7, 4));
  CHECK(rep.equality);
  CHECK(rep.cond_constant->holds);
  CHECK(*rep.characterization_consistent);

  std::vector<std::int64_t> w(7, 1);
  w[3] = 2;
  auto heavy = from_points(f2, pg(3, f2).points, w);
  rep = check_pg_proposition(heavy);
  CHECK(rep.total_weight == 8);
  CHECK(rep.cogirth_value == 4);  // a cocircuit avoiding the heavy point
  CHECK_FALSE(rep.equality);
  CHECK_FALSE(rep.cond_constant->holds);
  CHECK(*rep.characterization_consistent);

  // PG(0,q) is a single point; the bound is an equality at ratio 1
  Gf f3(3);
  auto p1 = from_points(f3, pg(1, f3).points, std::vector<std::int64_t>{4});
  rep = check_pg_proposition(p1);
  CHECK(rep.ratio == Fraction::reduced(1, 1));
  CHECK(rep.equality);

  auto notfull = from_points(f2, bose_burton(3, 1, f2).points);
  CHECK_THROWS_AS(check_pg_proposition(notfull), std::invalid_argument);
}

TEST_CASE("worked example values") {
  auto before = worked_example(ExamplePhase::before);
  auto& rb = before.report;
  CHECK(rb.values.at("w_total") == 20);  // 2*6 + 8
  CHECK(rb.values.at("h_minus_p_size") == 6);
  CHECK(rb.values.at("a4_size") == 8);
  CHECK(rb.values.at("cstar_weight") == 8);
  CHECK(rb.cogirth_value == 8);
  CHECK(rb.ratio == Fraction::reduced(5, 2));
  CHECK(rb.bound_lhs == 20);
  CHECK(rb.bound_rhs == 16);
  CHECK(rb.bound_holds);
  CHECK_FALSE(rb.equality);
  CHECK(rb.cond_i->holds);
  CHECK(rb.cond_ii->holds);
  CHECK_FALSE(rb.cond_iii->holds);
  CHECK(rb.cond_iii_prime->holds);
  CHECK(rb.values.at("iii_prime_lhs") == 16);
  CHECK(rb.values.at("min_type_one_weight") == 8);
  CHECK(rb.values.at("min_type_two_weight") == 10);
  CHECK(rb.values.at("max_type_two_weight") == 10);
  CHECK(*rb.characterization_consistent);
  CHECK(rb.ok());

  auto after = worked_example(ExamplePhase::after);
  auto& ra = after.report;
  CHECK(ra.values.at("w_total") == 20);
  CHECK(ra.cogirth_value == 10);
  CHECK(ra.equality);
  CHECK(ra.cond_i->holds);
  CHECK(ra.cond_ii->holds);
  CHECK(ra.cond_iii->holds);
  CHECK(ra.cond_iii_prime->holds);
  CHECK(ra.values.at("min_type_one_weight") >= 10);
  CHECK(ra.values.at("min_type_two_weight") == 10);
  CHECK(ra.values.at("max_type_two_weight") == 10);
  CHECK(ra.values.at("sublemma_ok") == 1);
  CHECK(ra.ok());

  // the swap preserves the total weight and moves it between the two sides
  CHECK(total_weight(before.matroid) == total_weight(after.matroid));
}

TEST_CASE("the restriction-form oracle agrees with the hyperplane form") {
  Gf f2(2);
  for (auto phase : {ExamplePhase::before, ExamplePhase::after}) {
    auto ex = worked_example(phase);
    auto emb = embed_in_pg(ex.matroid);
    auto res = condition_iii_all_restrictions(ex.matroid, emb, 14);
    REQUIRE(res.has_value());
    CHECK(res->holds == ex.report.cond_iii->holds);
  }
  auto bb = from_points(f2, bose_burton(3, 1, f2).points);
  auto res = condition_iii_all_restrictions(bb, embed_in_pg(bb), 10);
  REQUIRE(res.has_value());
  CHECK(res->holds);
  CHECK_FALSE(condition_iii_all_restrictions(bb, embed_in_pg(bb), 3).has_value());
}

TEST_CASE("verdicts are invariant under a change of basis") {
  std::mt19937_64 rng(29);
  Gf f2(2);
  auto base = worked_example(ExamplePhase::before).matroid;
  auto rep0 = check_main_theorem(base);
  for (int trial = 0; trial < 5; ++trial) {
    auto t = random_invertible(f2, 4, rng);
    auto rep = check_main_theorem(change_basis(base, t));
    CHECK(rep.total_weight == rep0.total_weight);
    CHECK(rep.cogirth_value == rep0.cogirth_value);
    CHECK(rep.equality == rep0.equality);
    CHECK(rep.cond_i->holds == rep0.cond_i->holds);
    CHECK(rep.cond_ii->holds == rep0.cond_ii->holds);
    CHECK(rep.cond_iii->holds == rep0.cond_iii->holds);
    CHECK(rep.values.at("min_type_one_weight") == rep0.values.at("min_type_one_weight"));
  }
}

TEST_CASE("exhaustive scan over PG(2,2)") {
  ScanSpec spec;
  spec.q = 2;
  spec.r = 3;
  spec.check_sublemma = true;
  spec.oracle_n_cap = 7;
  auto rep = scan(spec);
  CHECK(rep.instances == 91);  // spanning subsets of the Fano plane, minus itself
  CHECK(rep.ok());
  CHECK(rep.oracle_checked == 91);
  CHECK(rep.sublemma_checked == 14);  // one per proper nonempty flat: 7 points + 7 lines
  CHECK(rep.first_counterexample.empty());
}

TEST_CASE("random scans are seeded and clean") {
  ScanSpec spec;
  spec.q = 3;
  spec.r = 3;
  spec.mode = ScanSpec::Mode::random;
  spec.count = 60;
  spec.seed = 12345;
  spec.weight_max = 4;
  spec.iii_restriction_cap = 12;
  spec.oracle_n_cap = 12;
  auto rep1 = scan(spec);
  auto rep2 = scan(spec);
  CHECK(rep1 == rep2);
  CHECK(rep1.instances == 60);
  CHECK(rep1.ok());
  CHECK(rep1.iii_agreement_checked == 60);

  spec.count = 0;
  auto empty = scan(spec);
  CHECK(empty.instances == 0);
  CHECK(empty.ok());
}

TEST_CASE("random instances are reproducible across runs") {
  Gf f3(3);
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 5; ++i) CHECK(random_instance(f3, 3, a, 5) == random_instance(f3, 3, b, 5));
}
