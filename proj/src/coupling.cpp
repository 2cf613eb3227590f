#include "statfield/coupling.hpp"

#include <cmath>
#include <sstream>

namespace statfield {

CouplingSpec CouplingSpec::classical() {
  CouplingSpec s;
  s.kind_ = CouplingKind::Classical;
  return s;
}

CouplingSpec CouplingSpec::power_law(int n, double coeff) {
  if (n < 1) throw ConfigError("power_law coupling requires n >= 1");
  CouplingSpec s;
  s.kind_ = CouplingKind::PowerLaw;
  s.power_n_ = n;
  s.power_coeff_ = coeff;
  return s;
}

CouplingSpec CouplingSpec::quantum(double hbar_eff, double mass) {
  if (!(hbar_eff > 0.0) || !(mass > 0.0))
    throw ConfigError("quantum coupling requires hbar_eff > 0 and mass > 0");
  CouplingSpec s;
  s.kind_ = CouplingKind::Quantum;
  s.hbar_eff_ = hbar_eff;
  s.mass_ = mass;
  return s;
}

CouplingSpec CouplingSpec::polynomial_family(double A, std::map<int, double> coeffs) {
  for (const auto& [n, c] : coeffs)
    if (n == 1 || n == 2)
      throw BadIndexError("polynomial family index n must satisfy n <= 0 or n >= 3");
  CouplingSpec s;
  s.kind_ = CouplingKind::PolynomialFamily;
  s.family_A_ = A;
  s.family_coeffs_ = std::move(coeffs);
  return s;
}

std::string CouplingSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case CouplingKind::Classical: os << "classical"; break;
    case CouplingKind::PowerLaw: os << "power_law(n=" << power_n_ << ", coeff=" << power_coeff_ << ")"; break;
    case CouplingKind::Quantum: os << "quantum(hbar_eff=" << hbar_eff_ << ", mass=" << mass_ << ")"; break;
    case CouplingKind::PolynomialFamily: {
      os << "polynomial_family(A=" << family_A_;
      for (const auto& [n, c] : family_coeffs_) os << ", C_" << n << "=" << c;
      os << ")";
      break;
    }
  }
  return os.str();
}

symbolic::JetPolynomial family_member(double A, const std::map<int, double>& coeffs) {
  std::map<int, symbolic::Rational> rc;
  for (const auto& [n, c] : coeffs) rc[n] = symbolic::Rational(c);
  return symbolic::family_beta(symbolic::Rational(A), rc);
}

namespace {

// Any term of p carrying a negative exponent of u_k?
bool has_negative_power(const symbolic::JetPolynomial& p, int k) {
  for (const auto& [e, c] : p.terms())
    if (e[static_cast<std::size_t>(k)] < 0) return true;
  return false;
}

}  // namespace

CouplingEval eval_L0(const CouplingSpec& spec, const SampledField& rho,
                     const CouplingEvalOptions& opts) {
  const int n = rho.size();
  CouplingEval out;
  out.L0 = SampledField(rho.grid);
  out.defined.assign(static_cast<std::size_t>(n), 1);

  bool gap = false;
  const SupportRange sup = above_floor_range_lenient(rho, &gap, opts.floor_rel);
  if (sup.lo > sup.hi) throw division_by_floor("density is everywhere below the floor");

  auto mask_subfloor = [&](bool variant_divides) {
    if (!variant_divides) return;
    for (int k = 0; k < n; ++k) {
      if (rho[k] > sup.floor_abs) continue;
      if (k > sup.lo && k < sup.hi && opts.require_interior_defined)
        throw division_by_floor("rho below floor at interior point " + std::to_string(k));
      out.defined[static_cast<std::size_t>(k)] = 0;
    }
  };

  switch (spec.kind()) {
    case CouplingKind::Classical: {
      out.Q = SampledField(rho.grid);  // Q = 0
      return out;
    }
    case CouplingKind::PowerLaw: {
      const int p = spec.power_n();
      const double c = spec.power_coeff();
      SampledField q(rho.grid);
      for (int k = 0; k < n; ++k) {
        out.L0[k] = c * p * std::pow(rho[k], p - 1);
        q[k] = c * std::pow(rho[k], p);
      }
      out.Q = std::move(q);
      return out;
    }
    case CouplingKind::Quantum: {
      // L0 = (hbar^2/2m) u''/u with u = sqrt(rho): algebraically equal to the
      // (rho', rho'') form but better conditioned near small rho.
      const double pref = spec.hbar_eff() * spec.hbar_eff() / (2.0 * spec.mass());
      SampledField u(rho.grid);
      for (int k = 0; k < n; ++k) u[k] = std::sqrt(std::max(rho[k], 0.0));
      const SampledField upp = derivative(u, 2, opts.scheme);
      const SampledField up = derivative(u, 1, opts.scheme);
      mask_subfloor(true);
      SampledField q(rho.grid);
      for (int k = 0; k < n; ++k) {
        if (out.defined[static_cast<std::size_t>(k)]) out.L0[k] = pref * upp[k] / u[k];
        q[k] = pref * up[k] * up[k];
      }
      out.Q = std::move(q);
      return out;
    }
    case CouplingKind::PolynomialFamily: {
      const symbolic::JetPolynomial beta = family_member(spec.family_A(), spec.family_coeffs());
      const symbolic::JetPolynomial q_jet =
          symbolic::family_q(symbolic::Rational(spec.family_A()), [&] {
            std::map<int, symbolic::Rational> rc;
            for (const auto& [idx, c] : spec.family_coeffs()) rc[idx] = symbolic::Rational(c);
            return rc;
          }());
      const SampledField rp = derivative(rho, 1, opts.scheme);
      const SampledField rpp = derivative(rho, 2, opts.scheme);

      // L0 = beta/rho always divides by rho; rho' division only when some
      // term carries a negative rho' exponent (members with n >= 3).
      const bool needs_slope = has_negative_power(beta, 1) || has_negative_power(q_jet, 1);
      const double slope_floor = opts.slope_floor_rel * max_abs(rp);
      mask_subfloor(true);
      for (int k = 0; k < n; ++k) {
        if (needs_slope && std::abs(rp[k]) <= slope_floor)
          out.defined[static_cast<std::size_t>(k)] = 0;
      }

      SampledField q(rho.grid);
      for (int k = 0; k < n; ++k) {
        if (!out.defined[static_cast<std::size_t>(k)]) continue;
        const std::array<double, symbolic::kJetVars> u{rho[k], rp[k], rpp[k], 0.0, 0.0};
        out.L0[k] = beta.eval(u) / rho[k];
        q[k] = q_jet.eval(u);
      }
      out.Q = std::move(q);
      return out;
    }
  }
  throw Error(ErrorKind::Internal, "unreachable coupling kind");
}

}  // namespace statfield
