#ifndef STATFIELD_SYMBOLIC_HPP
#define STATFIELD_SYMBOLIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "statfield/errors.hpp"

namespace statfield::symbolic {

using Rational = boost::multiprecision::cpp_rational;

/// Jet variables u0 = rho, u1 = rho', u2 = rho'', u3 = rho''', u4 = rho''''.
constexpr int kJetVars = 5;
/// Exact Laurent polynomial in the jet variables: term map from integer
/// exponent tuples (possibly negative) to rational coefficients. Zero
/// coefficients are never stored; the map order is the canonical term order.
class JetPolynomial {
public:
  using Exponents = std::array<int, kJetVars>;
  using TermMap = std::map<Exponents, Rational>;

  /// Laurent exponents beyond this bound signal a malformed input.
  static constexpr int kExponentCap = 16;

  JetPolynomial() = default;

  static JetPolynomial constant(const Rational& c);
  static JetPolynomial variable(int k);  // u_k
  static JetPolynomial monomial(const Rational& c, const Exponents& e);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  /// Highest jet variable index appearing with a nonzero exponent (-1 if none).
  int max_jet_order() const;

  JetPolynomial& operator+=(const JetPolynomial& o);
  JetPolynomial& operator-=(const JetPolynomial& o);
  friend JetPolynomial operator+(JetPolynomial a, const JetPolynomial& b) { return a += b; }
  friend JetPolynomial operator-(JetPolynomial a, const JetPolynomial& b) { return a -= b; }
  friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);
  JetPolynomial scaled(const Rational& c) const;
  /// Multiplication by the monomial c * u^e (cheap exponent shift).
  JetPolynomial shifted(const Rational& c, const Exponents& e) const;

  bool operator==(const JetPolynomial& o) const { return terms_ == o.terms_; }

  /// Partial derivative with respect to u_k.
  JetPolynomial partial(int k) const;

  /// Total x-derivative d/dx = sum_k u_{k+1} d/du_k; raises the jet order by
  /// one and throws JetOverflowError if order 4 terms are present.
  JetPolynomial total_derivative() const;

  /// Numeric evaluation at u = (u0..u4). Negative powers divide; the caller
  /// is responsible for keeping denominators away from zero.
  double eval(const std::array<double, kJetVars>& u) const;

  std::string str() const;

private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

/// beta(rho, rho', rho'') for the polynomial solution family:
///   beta = C(rho,rho') rho'' + D(rho,rho'),
///   C = sum_n C_n rho^n (rho')^{-n},
///   D = A rho - sum_n ((n-1)/(n-2)) C_n rho^{n-1} (rho')^{-n+2},
/// with admissible indices n <= 0 or n >= 3. Throws BadIndexError for
/// n in {1, 2}.
JetPolynomial family_beta(const Rational& A, const std::map<int, Rational>& coeffs);

/// Q with dQ/dx = L0 rho' for the same family:
///   Q = A rho - sum_n C_n/(n-2) rho^{n-1} (rho')^{2-n}.
JetPolynomial family_q(const Rational& A, const std::map<int, Rational>& coeffs);

/// Left-hand side of the variational PDE for beta = rho L0:
///   -d^2/dx^2 (dbeta/du2) + d/dx (dbeta/du1) - dbeta/du0 + beta/u0.
/// Exact; the zero polynomial iff beta solves the PDE.
JetPolynomial pde_residual(const JetPolynomial& beta);

/// u-dependent part of the Euler-Lagrange equation of C[rho]:
///   -d^2/dx^2 (u0 dL0/du2) + u1 dL0/du1 + u0 d/dx (dL0/du1) - u0 dL0/du0.
/// Equals pde_residual(u0 * L0) as an exact identity.
JetPolynomial euler_lagrange_residual(const JetPolynomial& L0);

/// First-order (null-Lagrangian) criterion: d^2/dx^2 (dbeta/du2) == 0.
struct FirstOrderResult {
  bool pass = false;
  JetPolynomial witness;  // the nonzero polynomial when the criterion fails
};
FirstOrderResult first_order_criterion(const JetPolynomial& beta);

/// Coefficient grids c_{n,m}, d_{n,m} over a finite index window; entries
/// outside the window are treated as zero.
struct CoefficientGrid {
  int window = 6;
  std::map<std::pair<int, int>, Rational> c;
  std::map<std::pair<int, int>, Rational> d;

  /// beta = sum c_{n,m} u0^n u1^m u2 + sum d_{n,m} u0^n u1^m.
  JetPolynomial beta() const;
};

/// Builds the linear recursion constraints
///   (n m + 2n + m + 1) c_{n+1,m} = (m+1)(m+2) d_{n,m+2}
///   (n+1)(n+2) c_{n+2,m-2} = (n m - n + m) d_{n+1,m}
/// over the window [-window, window]^2 (out-of-window entries fixed to zero)
/// and returns an exact rational nullspace basis.
std::vector<CoefficientGrid> solve_recursions(int window);

/// One verification check of the symbolic suite.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness polynomial / diagnostic on failure
};

/// Runs the full symbolic verification suite (variational-PDE solutions,
/// Euler-Lagrange identity, recursion nullspace, index-set exclusions,
/// first-order criterion, linearity).
std::vector<CheckResult> run_verification_suite(int window = 6);

}  // namespace statfield::symbolic

#endif
