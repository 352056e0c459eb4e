#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "colorlink/determinant.hpp"
#include "support.hpp"

using namespace colorlink;

namespace {

LaurentPoly P(const char* text, int nvars = 1) { return parse_laurent(text, nvars); }

IntMatrix mat2(int a, int b, int c, int d) {
  IntMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

/// The 3-color family printed in the sample output of the original tool.
SeifertFamily printed_family() {
  SeifertFamily f;
  f.mu = 3;
  f.pairwise = true;
  f.basis.resize(2);
  f.signs = sign_tuples(3);
  f.matrices = {mat2(0, -1, 0, 1), mat2(0, 0, 0, 0), mat2(0, -1, 0, 0), mat2(0, 0, 0, 0),
                mat2(0, 0, 0, 0),  mat2(0, 0, -1, 0), mat2(0, 0, 0, 0), mat2(0, 0, -1, 1)};
  return f;
}

SeifertFamily family_of(const ColoredBraid& b, bool pairwise = false) {
  return seifert_family(build_spine(b, DragOrder::identity(b.mu), pairwise));
}

}  // namespace

TEST_CASE("conway potential fixtures") {
  const PotentialFunction unknot = testing::potential_of(testing::unknot());
  CHECK(unknot.numerator == P("1"));
  CHECK(unknot.denominator == std::vector<int>{1});
  CHECK(unknot.to_string() == "(1)/((t0 - t0^-1))");

  const PotentialFunction trefoil = testing::potential_of(testing::trefoil());
  CHECK(trefoil.numerator == P("t0^2 - 1 + t0^-2"));
  CHECK(trefoil.denominator == std::vector<int>{1});

  // z^2 + 1 under z = t - t^-1
  const LaurentPoly z = twist_factor(0, 1);
  CHECK(trefoil.numerator == z * z + LaurentPoly(1));

  const PotentialFunction eight = testing::potential_of(testing::figure_eight());
  CHECK(eight.numerator == LaurentPoly(1) - z * z);
  CHECK(eight.denominator == std::vector<int>{1});

  const PotentialFunction hopf_pos = testing::potential_of(testing::hopf(1));
  CHECK(hopf_pos.numerator == P("1", 2));
  CHECK(hopf_pos.denominator == std::vector<int>{0, 0});
  const PotentialFunction hopf_neg = testing::potential_of(testing::hopf(-1));
  CHECK(hopf_neg.numerator == P("-1", 2));
}

TEST_CASE("conway matrix of the trefoil") {
  const PolyMatrix m = conway_matrix(family_of(testing::trefoil()));
  CHECK(m(0, 0) == P("t0 - t0^-1"));
  CHECK(m(0, 1) == P("-t0^-1"));
  CHECK(m(1, 0) == P("t0"));
  CHECK(m(1, 1) == P("t0 - t0^-1"));
}

TEST_CASE("alexander from conway") {
  CHECK(alexander_from_conway(testing::potential_of(testing::trefoil())) == P("1 - t0 + t0^2"));
  CHECK(alexander_from_conway(testing::potential_of(testing::figure_eight())) == P("1 - 3*t0 + t0^2"));
  CHECK(alexander_from_conway(testing::potential_of(testing::unknot())) == P("1"));
  CHECK(alexander_from_conway(testing::potential_of(testing::hopf(1))) == P("1", 2));
  CHECK(alexander_from_conway(testing::potential_of(testing::hopf(-1))) == P("1", 2));
  CHECK(alexander_from_conway(testing::potential_of(testing::running_example())) == P("1 - t1", 3));

  CHECK_THROWS_AS(alexander_from_conway({P("t0 + 1", 2), {0, 0}}), ParityViolation);
  CHECK_THROWS_AS(alexander_from_conway({P("1", 2), {1, 0}}), ParityViolation);
  CHECK(alexander_from_conway({LaurentPoly(BigInt(0), 2), {0, 0}}).is_zero());
}

TEST_CASE("normalization") {
  CHECK(normalize_alexander(P("-t0^-3 + t0^-2")) == P("1 - t0"));
  CHECK(normalize_alexander(P("t0^2*t1 - t0", 2)) == P("1 - t0*t1", 2));
}

TEST_CASE("presentation matrix of the printed family") {
  const PolyMatrix a = presentation_matrix(printed_family());
  REQUIRE(a.rows() == 2);
  CHECK(a(0, 0) == P("0", 3));
  CHECK(a(0, 1) == P("t0*t1*t2 - t0*t2", 3));
  CHECK(a(1, 0) == P("t1 - 1", 3));
  CHECK(a(1, 1) == P("-t0*t1*t2 + 1", 3));
  CHECK(bareiss_det(a) == P("-t0*t2", 3) * P("t1 - 1", 3) * P("t1 - 1", 3));
}

TEST_CASE("presentation matrix basics") {
  const SeifertFamily trefoil = family_of(testing::trefoil(), true);
  const PolyMatrix a = presentation_matrix(trefoil);
  const IntMatrix plus = trefoil.matrix({1});
  const IntMatrix minus = trefoil.matrix({-1});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(a(i, j) == LaurentPoly(plus(i, j)) - P("t0") * LaurentPoly(minus(i, j)));

  CHECK(presentation_matrix(family_of(testing::hopf(1), true)).rows() == 0);
  CHECK_THROWS_AS(presentation_matrix(family_of(testing::trefoil(), false)), PairwiseRequired);
}

TEST_CASE("hermitian matrix and signature of the trefoil") {
  const SeifertFamily trefoil = family_of(testing::trefoil());
  const Eigen::MatrixXcd h = hermitian_H(trefoil, SignaturePoint{{0.5}});
  Eigen::MatrixXcd expected(2, 2);
  expected << -4, -2, -2, -4;
  CHECK((h - expected).norm() < 1e-12);

  const SignatureResult at_minus_one = signature_nullity(h);
  CHECK(at_minus_one.signature == -2);
  CHECK(at_minus_one.nullity == 0);
  REQUIRE(at_minus_one.eigenvalues.size() == 2);
  CHECK(at_minus_one.eigenvalues[0] == doctest::Approx(-6.0));
  CHECK(at_minus_one.eigenvalues[1] == doctest::Approx(-2.0));

  const SignatureResult at_sixth = signature_nullity(hermitian_H(trefoil, SignaturePoint{{1.0 / 6.0}}));
  CHECK(at_sixth.nullity == 1);

  // (1 - conj w) A + (1 - w) A^T for one color
  const std::complex<double> w = std::polar(1.0, 0.7);
  const Eigen::MatrixXcd a = trefoil.matrix({1}).cast<std::complex<double>>();
  const Eigen::MatrixXcd direct = (1.0 - std::conj(w)) * a + (1.0 - w) * a.transpose();
  CHECK((hermitian_H(trefoil, SignaturePoint{{0.7 / (2 * std::numbers::pi)}}) - direct).norm() < 1e-12);
}

TEST_CASE("signature edge cases") {
  const SignatureResult empty = signature_nullity(Eigen::MatrixXcd(0, 0));
  CHECK(empty.signature == 0);
  CHECK(empty.nullity == 0);

  Eigen::MatrixXcd skew(2, 2);
  skew << 0, 1, -1, 0;
  CHECK_THROWS_AS(signature_nullity(skew), NotHermitian);

  const SignaturePoint at_one{{1.0}};
  const SignaturePoint partly_one{{0.0, 0.5}};
  CHECK_THROWS_AS(at_one.omega(), OmegaAtOne);
  CHECK_THROWS_AS(partly_one.omega(), OmegaAtOne);
  CHECK(SignaturePoint::parse("1/3, 0.25").theta[0] == doctest::Approx(1.0 / 3.0));
  CHECK(SignaturePoint::parse("1/3, 0.25").theta[1] == doctest::Approx(0.25));
  CHECK_THROWS_AS(SignaturePoint::parse("1/0"), MalformedInput);
  CHECK_THROWS_AS(SignaturePoint::parse("x"), MalformedInput);
}

TEST_CASE("signature is conjugation invariant") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> turn(0.01, 0.99);
  for (int k = 0; k < 60; ++k) {
    const ColoredBraid b = testing::random_braid(rng, 1, 6, 12, 3);
    const SeifertFamily family = family_of(b);
    SignaturePoint point;
    for (int c = 0; c < b.mu; ++c) point.theta.push_back(turn(rng));
    SignaturePoint conj = point;
    for (double& t : conj.theta) t = 1.0 - t;
    const SignatureResult r1 = signature_nullity(hermitian_H(family, point));
    const SignatureResult r2 = signature_nullity(hermitian_H(family, conj));
    CHECK(r1.signature == r2.signature);
    CHECK(r1.nullity == r2.nullity);
    CHECK(std::abs(r1.signature) + r1.nullity <= family.rank());
  }
}

TEST_CASE("fox calculus oracle") {
  CHECK(oracle_alexander(testing::trefoil()) == P("1 - t0 + t0^2"));
  CHECK(oracle_alexander(testing::figure_eight()) == P("1 - 3*t0 + t0^2"));
  CHECK(oracle_alexander(testing::hopf(1)) == P("1", 2));
  CHECK(oracle_alexander(testing::unknot()) == P("1"));
  CHECK(oracle_alexander(parse_braid("[]", 2, "0,1")).is_zero());
  // (2,4) torus link
  CHECK(oracle_alexander(parse_braid("[1,1,1,1]", 2, "0,1")) == P("1 + t0*t1", 2));

  std::vector<int> long_word(15, 1);
  CHECK_THROWS_AS(oracle_alexander(make_braid(2, long_word, {0, 0})), FixtureTooLarge);
  CHECK_THROWS_AS(oracle_alexander(parse_braid("[]", 7, "0,0,0,0,0,0,0")), FixtureTooLarge);
}

TEST_CASE("conway route matches the oracle on random braids") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 60; ++k) {
    const ColoredBraid b = testing::random_braid(rng, 1, 5, 12, 3);
    CHECK(alexander_from_conway(testing::potential_of(b)) == oracle_alexander(b));
  }
}
