#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "colorlink/braid.hpp"
#include "colorlink/laurent.hpp"
#include "colorlink/seifert.hpp"

namespace colorlink {

class ParityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PairwiseRequired : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OmegaAtOne : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitian : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FixtureTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eigenvalues with absolute value at or below this count as zero.
inline constexpr double kEigenvalueThreshold = 1e-5;

/// Point omega_i = exp(2 pi i theta_i) of the mu-torus, given in turns.
struct SignaturePoint {
  std::vector<double> theta;

  /// Throws OmegaAtOne when some theta_i is an integer.
  std::vector<std::complex<double>> omega() const;
  /// "1/3, 0.25" -> {1/3, 0.25}; fractions and decimals are both accepted.
  static SignaturePoint parse(std::string_view text);
};

struct SignatureResult {
  int signature = 0;
  int nullity = 0;
  std::vector<double> eigenvalues;
};

/// -sum_eps (prod eps_i) (prod t_i^{eps_i}) A^eps
PolyMatrix conway_matrix(const SeifertFamily& family);

/// sgn * prod_i (t_i - t_i^{-1})^{-1 + chi_i} * det(conway_matrix), reduced.
PotentialFunction conway_potential(const SeifertFamily& family, int sign, const std::vector<int>& chi);

/// Bring a polynomial defined up to +-monomials to canonical form: smallest
/// exponent of each variable is 0 and the graded-lex-smallest term is positive.
LaurentPoly normalize_alexander(const LaurentPoly& p);

/// Multivariable Alexander polynomial from the Conway potential function
/// (one-variable Alexander polynomial when mu = 1), canonically normalized.
LaurentPoly alexander_from_conway(const PotentialFunction& potential);

/// A(t) = sum_eps (prod eps_i) (prod t_i^{(1 - eps_i)/2}) A^eps. Requires a
/// complex in which every two colors share a clasp.
PolyMatrix presentation_matrix(const SeifertFamily& family);

/// prod_i (1 - conj(omega_i)) * A(omega).
Eigen::MatrixXcd hermitian_H(const SeifertFamily& family, const SignaturePoint& point);

SignatureResult signature_nullity(const Eigen::MatrixXcd& h, int b0 = 1);

/// Alexander polynomial via Fox calculus on the Wirtinger presentation of
/// the closed braid diagram; independent of the C-complex route. Small
/// braids only (at most 6 strands and 14 crossings).
LaurentPoly oracle_alexander(const ColoredBraid& braid);

}  // namespace colorlink
