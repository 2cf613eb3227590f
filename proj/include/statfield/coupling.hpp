#ifndef STATFIELD_COUPLING_HPP
#define STATFIELD_COUPLING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "statfield/grid.hpp"
#include "statfield/symbolic.hpp"

namespace statfield {

enum class CouplingKind { Classical, PowerLaw, Quantum, PolynomialFamily };

/// Selects the coupling term L0 (equivalently Q) closing the generalized
/// Hamilton-Jacobi equation dS/dt = L0 - (S')^2/2m - V.
class CouplingSpec {
public:
  static CouplingSpec classical();
  static CouplingSpec power_law(int n, double coeff);            // L0 = coeff n rho^{n-1}, n >= 1
  static CouplingSpec quantum(double hbar_eff, double mass);     // L0 = (hbar^2/2m)(sqrt rho)''/sqrt rho
  static CouplingSpec polynomial_family(double A, std::map<int, double> coeffs);

  CouplingKind kind() const { return kind_; }
  int power_n() const { return power_n_; }
  double power_coeff() const { return power_coeff_; }
  double hbar_eff() const { return hbar_eff_; }
  double mass() const { return mass_; }
  double family_A() const { return family_A_; }
  const std::map<int, double>& family_coeffs() const { return family_coeffs_; }

  std::string describe() const;

private:
  CouplingSpec() = default;
  CouplingKind kind_ = CouplingKind::Classical;
  int power_n_ = 1;
  double power_coeff_ = 0.0;
  double hbar_eff_ = 1.0;
  double mass_ = 1.0;
  double family_A_ = 0.0;
  std::map<int, double> family_coeffs_;
};

/// Pointwise evaluation of L0 (and Q where a closed form exists). `defined`
/// flags points where all divisions were healthy; undefined points carry 0.
struct CouplingEval {
  SampledField L0;
  std::optional<SampledField> Q;
  std::vector<std::uint8_t> defined;
};

struct CouplingEvalOptions {
  DerivScheme scheme = DerivScheme::Spectral;
  /// Throw DivisionByFloor when a division is unhealthy at an *interior*
  /// point of the above-floor support (sub-floor tails are always masked).
  bool require_interior_defined = true;
  double floor_rel = kDensityFloorRel;
  /// Relative floor on |rho'| for family members with negative rho' powers.
  double slope_floor_rel = 1e-10;
};

CouplingEval eval_L0(const CouplingSpec& spec, const SampledField& rho,
                     const CouplingEvalOptions& opts = {});

/// beta = rho L0 for the polynomial family (paper's admissible index set;
/// throws BadIndexError for keys in {1,2}).
symbolic::JetPolynomial family_member(double A, const std::map<int, double>& coeffs);

}  // namespace statfield

#endif
