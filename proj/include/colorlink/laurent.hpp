#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace colorlink {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent vector of a monomial t0^e0 * t1^e1 * ...; trailing zeros are implicit.
using Exponents = std::vector<int>;

class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Graded-lex order, largest first: higher total degree wins, ties broken by
/// comparing exponents of t0, t1, ... in turn.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients in the variables t0, t1, ...
///
/// A polynomial in k variables is also a polynomial in any k' > k variables,
/// so mixing operands of different widths pads the narrower one with zero
/// exponents. The default value is the zero polynomial.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, BigInt, GrlexGreater>;

  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT: implicit, Eigen builds Scalar(0) and Scalar(1)
  LaurentPoly(const BigInt& constant, int nvars);

  static LaurentPoly variable(int index, int nvars, int power = 1);
  static LaurentPoly monomial(Exponents exponents, const BigInt& coefficient = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const TermMap& terms() const { return terms_; }

  /// Componentwise minimum / maximum exponent over all terms (zeros for the zero polynomial).
  Exponents min_exponents() const;
  Exponents max_exponents() const;

  /// Multiply by t^shift.
  LaurentPoly shifted(const Exponents& shift) const;
  /// Substitute t_i -> t_i^{-1} for every variable.
  LaurentPoly inverted() const;
  /// Substitute t_i -> t_i^{factor} (factor may be zero or negative).
  LaurentPoly power_substituted(int factor) const;
  /// Widen to at least `nvars` variables.
  LaurentPoly widened(int nvars) const;

  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Sage-style text, e.g. "t0*t1*t2 - t0*t2" or "1 - 2*t0^-1".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void add_term(const Exponents& e, const BigInt& c);
  void widen_in_place(int nvars);

  int nvars_ = 0;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Parse the textual form produced by LaurentPoly::to_string (plus "^(-2)" and
/// spaces). Throws std::invalid_argument on malformed text.
LaurentPoly parse_laurent(std::string_view text, int nvars);

/// r with r * divisor == dividend. Throws NotDivisible if no such Laurent polynomial exists.
LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Integer overload, so the fraction-free determinant works on plain integer matrices.
long long exact_div(long long dividend, long long divisor);

/// t_i - t_i^{-1}
LaurentPoly twist_factor(int index, int nvars);

/// The numerator / prod_i (t_i - t_i^{-1})^{d_i}, kept fully reduced.
struct PotentialFunction {
  LaurentPoly numerator;
  std::vector<int> denominator;

  bool operator==(const PotentialFunction&) const = default;
  std::string to_string() const;
  std::string to_latex() const;
};

/// Cancel factors (t_i - t_i^{-1}) from the numerator while d_i > 0.
PotentialFunction reduce_potential(LaurentPoly numerator, std::vector<int> denominator);

using PolyMatrix = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace colorlink

namespace Eigen {
template <>
struct NumTraits<colorlink::LaurentPoly> : GenericNumTraits<colorlink::LaurentPoly> {
  using Real = colorlink::LaurentPoly;
  using NonInteger = colorlink::LaurentPoly;
  using Nested = colorlink::LaurentPoly;
  using Literal = colorlink::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 50,
    MulCost = 200
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
