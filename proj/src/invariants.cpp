#include "colorlink/invariants.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "colorlink/determinant.hpp"

namespace colorlink {

namespace {

int sign_product(const SignTuple& eps) {
  int p = 1;
  for (int e : eps) p *= e;
  return p;
}

double parse_turns(std::string_view token) {
  std::string text(token);
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    double value;
    if (slash != std::string::npos) {
      const double num = std::stod(text.substr(0, slash), &used);
      std::size_t used_den = 0;
      const std::string den_text = text.substr(slash + 1);
      const double den = std::stod(den_text, &used_den);
      if (den == 0.0) throw std::invalid_argument("zero denominator");
      if (used_den != den_text.find_last_not_of(' ') + 1) throw std::invalid_argument("trailing text");
      value = num / den;
    } else {
      value = std::stod(text, &used);
      if (used != text.find_last_not_of(' ') + 1) throw std::invalid_argument("trailing text");
    }
    return value;
  } catch (const std::exception&) {
    throw MalformedInput("cannot parse omega coordinate '" + text + "'");
  }
}

}  // namespace

std::vector<std::complex<double>> SignaturePoint::omega() const {
  std::vector<std::complex<double>> out;
  for (double t : theta) {
    const double frac = t - std::floor(t);
    if (frac == 0.0) throw OmegaAtOne("omega = exp(2 pi i theta) must differ from 1 (theta = " + std::to_string(t) + ")");
    out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * frac));
  }
  return out;
}

SignaturePoint SignaturePoint::parse(std::string_view text) {
  SignaturePoint point;
  std::string s(text);
  for (char& c : s)
    if (c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
  std::stringstream stream(s);
  std::string token;
  while (std::getline(stream, token, ',')) point.theta.push_back(parse_turns(token));
  if (point.theta.empty()) throw MalformedInput("empty omega");
  return point;
}

PolyMatrix conway_matrix(const SeifertFamily& family) {
  const int g = family.rank();
  PolyMatrix m = PolyMatrix::Constant(g, g, LaurentPoly(BigInt(0), family.mu));
  for (std::size_t k = 0; k < family.signs.size(); ++k) {
    const SignTuple& eps = family.signs[k];
    const LaurentPoly weight = LaurentPoly::monomial(Exponents(eps.begin(), eps.end()), -sign_product(eps));
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        if (const int a = family.matrices[k](i, j); a != 0) m(i, j) += weight * LaurentPoly(BigInt(a), family.mu);
  }
  return m;
}

PotentialFunction conway_potential(const SeifertFamily& family, int sign, const std::vector<int>& chi) {
  if (static_cast<int>(chi.size()) != family.mu) throw std::invalid_argument("need one Euler characteristic per color");
  LaurentPoly numerator = bareiss_det(conway_matrix(family)).widened(family.mu) * LaurentPoly(BigInt(sign), family.mu);
  std::vector<int> denominator(chi.size(), 0);
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const int exponent = chi[i] - 1;
    if (exponent < 0) {
      denominator[i] = -exponent;
    } else {
      const LaurentPoly factor = twist_factor(static_cast<int>(i), family.mu);
      for (int k = 0; k < exponent; ++k) numerator *= factor;
    }
  }
  return reduce_potential(std::move(numerator), std::move(denominator));
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponents shift = p.min_exponents();
  for (int& x : shift) x = -x;
  LaurentPoly out = p.shifted(shift);
  if (out.terms().rbegin()->second < 0) out = -out;
  return out;
}

LaurentPoly alexander_from_conway(const PotentialFunction& potential) {
  const int mu = static_cast<int>(potential.denominator.size());
  LaurentPoly q = potential.numerator.widened(mu);
  if (mu == 1) {
    if (potential.denominator[0] == 0) q *= twist_factor(0, 1);
    else if (potential.denominator[0] != 1)
      throw ParityViolation("one-variable potential has denominator exponent " +
                            std::to_string(potential.denominator[0]));
  } else {
    for (int d : potential.denominator)
      if (d != 0) throw ParityViolation("multivariable potential function is not a Laurent polynomial");
  }
  if (q.is_zero()) return q;

  Exponents shift = q.min_exponents();
  for (int& x : shift) x = -x;
  q = q.shifted(shift);
  LaurentPoly halved(BigInt(0), mu);
  for (const auto& [e, c] : q.terms()) {
    Exponents h = e;
    for (int& x : h) {
      if (x % 2 != 0) throw ParityViolation("exponents of " + potential.to_string() + " have mixed parity");
      x /= 2;
    }
    halved += LaurentPoly::monomial(std::move(h), c);
  }
  return normalize_alexander(halved);
}

PolyMatrix presentation_matrix(const SeifertFamily& family) {
  if (!family.pairwise)
    throw PairwiseRequired("the presentation matrix needs a C-complex built with pairwise clasps (--pairwise)");
  const int g = family.rank();
  PolyMatrix m = PolyMatrix::Constant(g, g, LaurentPoly(BigInt(0), family.mu));
  for (std::size_t k = 0; k < family.signs.size(); ++k) {
    const SignTuple& eps = family.signs[k];
    Exponents e(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) e[i] = (1 - eps[i]) / 2;
    const LaurentPoly weight = LaurentPoly::monomial(std::move(e), sign_product(eps));
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        if (const int a = family.matrices[k](i, j); a != 0) m(i, j) += weight * LaurentPoly(BigInt(a), family.mu);
  }
  return m;
}

Eigen::MatrixXcd hermitian_H(const SeifertFamily& family, const SignaturePoint& point) {
  if (static_cast<int>(point.theta.size()) != family.mu)
    throw std::invalid_argument("omega needs " + std::to_string(family.mu) + " coordinates");
  const std::vector<std::complex<double>> omega = point.omega();
  const int g = family.rank();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(g, g);
  for (std::size_t k = 0; k < family.signs.size(); ++k) {
    const SignTuple& eps = family.signs[k];
    std::complex<double> weight = static_cast<double>(sign_product(eps));
    for (std::size_t i = 0; i < eps.size(); ++i)
      if (eps[i] < 0) weight *= omega[i];
    h += weight * family.matrices[k].cast<std::complex<double>>();
  }
  std::complex<double> scale = 1.0;
  for (const auto& w : omega) scale *= 1.0 - std::conj(w);
  return scale * h;
}

SignatureResult signature_nullity(const Eigen::MatrixXcd& h, int b0) {
  SignatureResult result;
  result.nullity = b0 - 1;
  if (h.rows() == 0) return result;
  const double asymmetry = (h - h.adjoint()).norm();
  if (asymmetry > 1e-9 * std::max(1.0, h.norm()))
    throw NotHermitian("H(omega) is not Hermitian (asymmetry " + std::to_string(asymmetry) + ")");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd values = solver.eigenvalues();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double lambda = values(i);
    result.eigenvalues.push_back(lambda);
    if (lambda > kEigenvalueThreshold) ++result.signature;
    else if (lambda < -kEigenvalueThreshold) --result.signature;
    else ++result.nullity;
  }
  return result;
}

}  // namespace colorlink
