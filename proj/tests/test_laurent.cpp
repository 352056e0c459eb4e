#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colorlink/determinant.hpp"
#include "support.hpp"

using namespace colorlink;

namespace {

LaurentPoly P(const char* text, int nvars = 1) { return parse_laurent(text, nvars); }

}  // namespace

TEST_CASE("arithmetic") {
  CHECK((P("t0") + P("-t0")).is_zero());
  CHECK((P("t0 - 1") * P("t0 + 1")) == P("t0^2 - 1"));
  const LaurentPoly twist = P("t0 - t0^-1");
  CHECK(twist * twist == P("t0^2 - 2 + t0^-2"));
  CHECK(twist_factor(0, 1) == twist);
}

TEST_CASE("printing") {
  CHECK(P("t0*t1*t2 - t0*t2", 3).to_string() == "t0*t1*t2 - t0*t2");
  CHECK(P("t0^-1").to_string() == "t0^-1");
  CHECK(P("1 - t0 + t0^2").to_string() == "t0^2 - t0 + 1");
  CHECK(LaurentPoly(BigInt(0), 2).to_string() == "0");
  CHECK(P("-2*t0^(-1) + 1").to_string() == "1 - 2*t0^-1");
  CHECK_THROWS_AS(parse_laurent("t0 +* 1", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("t3", 2), std::invalid_argument);
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("t0^2 - 1"), P("t0 - 1")) == P("t0 + 1"));
  CHECK(exact_div(P("t0*t1 - t0", 2), P("t1 - 1", 2)) == P("t0", 2));
  CHECK_THROWS_AS(exact_div(P("t0 + 1", 2), P("t1 - 1", 2)), NotDivisible);
  CHECK(exact_div(P("t0^-3 - t0^-1"), P("t0^-1")) == P("t0^-2 - 1"));
  CHECK(exact_div(12LL, -4LL) == -3);
  CHECK_THROWS_AS(exact_div(7LL, 2LL), NotDivisible);
}

TEST_CASE("reduce potential") {
  const auto irreducible = reduce_potential(P("t0^2 - 1 + t0^-2"), {1});
  CHECK(irreducible.numerator == P("t0^2 - 1 + t0^-2"));
  CHECK(irreducible.denominator == std::vector<int>{1});

  const auto cancelled = reduce_potential(P("t0 - t0^-1"), {1});
  CHECK(cancelled.numerator == P("1"));
  CHECK(cancelled.denominator == std::vector<int>{0});

  const auto zero = reduce_potential(LaurentPoly(BigInt(0), 2), {3, 1});
  CHECK(zero.numerator.is_zero());
  CHECK(zero.denominator == std::vector<int>{0, 0});
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly a = testing::random_poly(rng, 2, 3);
    const LaurentPoly b = testing::random_poly(rng, 2, 3);
    const LaurentPoly c = testing::random_poly(rng, 2, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.inverted().inverted() == a);
  }
}

TEST_CASE("exact_div inverts multiplication") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly p = testing::random_poly(rng, 3, 3);
    const LaurentPoly q = testing::random_poly(rng, 3, 3);
    if (q.is_zero()) continue;
    CHECK(exact_div(p * q, q) == p);
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("parse round trip") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly p = testing::random_poly(rng, 3, 4);
    CHECK(parse_laurent(p.to_string(), 3) == p);
  }
}

TEST_CASE("bareiss fixtures") {
  PolyMatrix one(1, 1);
  one(0, 0) = P("t0 - 3");
  CHECK(bareiss_det(one) == P("t0 - 3"));

  PolyMatrix rank_one(2, 2);
  rank_one << P("t0"), P("1"), P("1"), P("t0^-1");
  CHECK(bareiss_det(rank_one).is_zero());

  CHECK(bareiss_det(PolyMatrix(0, 0)) == LaurentPoly(1));

  PolyMatrix zero_column(2, 2);
  zero_column << P("0"), P("t0"), P("0"), P("1");
  CHECK(bareiss_det(zero_column).is_zero());

  Eigen::Matrix<long long, 3, 3> ints;
  ints << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  CHECK(fraction_free_det(ints) == 4);
}

TEST_CASE("bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(14);
  int cases = 0;
  for (int size = 1; size <= 4; ++size)
    for (int k = 0; k < 60; ++k, ++cases) {
      const PolyMatrix m = testing::random_poly_matrix(rng, size, 2, 2);
      CHECK(bareiss_det(m) == testing::cofactor_det(m));
    }
  CHECK(cases >= 200);
}

TEST_CASE("bareiss row swap and transpose") {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 50; ++k) {
    const PolyMatrix m = testing::random_poly_matrix(rng, 4, 3, 2);
    PolyMatrix swapped = m;
    swapped.row(0).swap(swapped.row(2));
    const LaurentPoly d = bareiss_det(m);
    CHECK(bareiss_det(swapped) == -d);
    CHECK(bareiss_det(PolyMatrix(m.transpose())) == d);
  }
}

TEST_CASE("evaluation") {
  const auto z = P("t0^2 - t0 + 1").evaluate({std::polar(1.0, M_PI / 3)});
  CHECK(std::abs(z) < 1e-12);
}
