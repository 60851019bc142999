#pragma once

// The Dirac delta well -g delta(x), its bound state, and its SUSY partners.
// These are the alpha -> infinity limits of the Poschl-Teller quantities at
// fixed g. The +g delta(x) barrier that appears in the partner is never
// evaluated; only the regular part is returned.

namespace susypt {

struct DeltaWell {
  double g;       // strength, > 0
  double energy;  // -(g/2)^2
  double sigma;   // factorization energy, equal to energy
};

/// Throws DomainError for g <= 0.
DeltaWell delta_well(double g);

/// sqrt(g/2) exp(-g|x|/2).
double delta_ground_state(const DeltaWell& w, double x);

/// sgn(x) (e^{g|x|} - 1) / g, the alpha -> infinity limit of L.
double delta_l_limit(double g, double x);

/// (g/2) sgn(x) + omega e^{g|x|} / (1 - omega sgn(x) (e^{g|x|} - 1)/g).
/// Throws SingularityError at the pole.
double delta_susy_beta(double g, double omega, double x);

/// Regular (non-distributional) part of the partner potential,
///   2 g xi e^{g|x|} sgn(x) / D + 2 xi^2 e^{2g|x|} / D^2,
///   D = 1 - xi sgn(x) (e^{g|x|} - 1)/g.
/// Requires x != 0; throws SingularityError at the pole.
double delta_susy_potential_regular(double g, double xi, double x);

/// Pole of the partner: sgn(xi)/g ln(1 + g/|xi|). Requires xi != 0.
double delta_singular_point(double g, double xi);

}  // namespace susypt
