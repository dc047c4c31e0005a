#include <doctest.h>

#include "cogirth/gf.hpp"

using namespace cogirth;

namespace {

const int kSupported[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};

// Test-side polynomial arithmetic over GF(p), used as the irreducibility
// oracle for the canonical modulus.
bool has_factor(const std::vector<int>& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    // all monic divisors of degree d
    std::vector<int> c(d, 0);
    for (;;) {
      // long division f mod (x^d + c)
      std::vector<int> rem = f;
      while (static_cast<int>(rem.size()) - 1 >= d) {
        int shift = static_cast<int>(rem.size()) - 1 - d;
        int lead = rem.back();
        rem[shift + d] = 0;
        for (int i = 0; i < d; ++i) rem[shift + i] = ((rem[shift + i] - lead * c[i]) % p + p) % p;
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) break;
      }
      if (rem.empty()) return true;
      int i = d - 1;
      while (i >= 0 && c[i] == p - 1) c[i--] = 0;
      if (i < 0) break;
      ++c[i];
    }
  }
  return false;
}

}  // namespace

TEST_CASE("field construction") {
  Gf f2(2);
  CHECK(f2.p() == 2);
  CHECK(f2.m() == 1);
  CHECK(f2.modulus().empty());

  Gf f4(4);
  CHECK(f4.p() == 2);
  CHECK(f4.m() == 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1

  CHECK_THROWS_AS(Gf(6), std::invalid_argument);
  CHECK_THROWS_AS(Gf(1), std::invalid_argument);
  CHECK_THROWS_AS(Gf(12), std::invalid_argument);
  CHECK_THROWS_AS(Gf(33), std::invalid_argument);
}

TEST_CASE("canonical modulus is the lexicographically least irreducible") {
  for (int q : kSupported) {
    Gf f(q);
    if (f.m() == 1) continue;
    const auto& mod = f.modulus();
    REQUIRE(static_cast<int>(mod.size()) == f.m() + 1);
    CHECK(mod.back() == 1);
    CHECK_FALSE(has_factor(mod, f.p()));
    // nothing lexicographically smaller is irreducible
    std::vector<std::vector<int>> smaller;
    std::vector<int> c(f.m(), 0);
    for (;;) {
      std::vector<int> cand(c);
      cand.push_back(1);
      if (std::vector<int>(cand.begin(), cand.end() - 1) <
          std::vector<int>(mod.begin(), mod.end() - 1))
        CHECK(has_factor(cand, f.p()));
      int i = f.m() - 1;
      while (i >= 0 && c[i] == f.p() - 1) c[i--] = 0;
      if (i < 0) break;
      ++c[i];
    }
  }
}

TEST_CASE("arithmetic examples") {
  Gf f2(2), f4(4), f5(5);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f4.add(2, 3) == 1);  // x + (x+1) = 1 in the digit encoding

  CHECK(f2.mul(1, 1) == 1);
  CHECK(f4.mul(2, 2) == 3);  // x * x = x^2 = x + 1 mod x^2+x+1
  CHECK(f5.mul(2, 4) == 3);

  CHECK(f2.inv(1) == 1);
  CHECK(f5.inv(2) == 3);
  CHECK(f4.inv(2) == 3);  // x (x+1) = 1 mod x^2+x+1

  CHECK_THROWS_AS(f5.inv(0), std::domain_error);
  CHECK_THROWS_AS(f5.add(5, 0), std::out_of_range);
  CHECK_THROWS_AS(f4.mul(1, 4), std::out_of_range);
}

TEST_CASE("field axioms, exhaustive") {
  for (int q : kSupported) {
    Gf f(q);
    CAPTURE(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, q - 1) == 1);
      }
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic") {
  for (int q : kSupported) {
    Gf f(q);
    bool found_generator = false;
    for (int a = 1; a < q && !found_generator; ++a) {
      int ord = 1, x = a;
      while (x != 1) {
        x = f.mul(x, a);
        ++ord;
      }
      found_generator = ord == q - 1;
    }
    CHECK(found_generator);
  }
}
