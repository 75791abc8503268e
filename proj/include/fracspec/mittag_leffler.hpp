#pragma once

namespace fracspec {

// Two-parameter Mittag-Leffler function E_{mu,nu}(z) for real z,
// mu in (0, 2], nu > 0. Absolute accuracy ~1e-12 on the negative real
// axis (the only region the solvers touch).
double mittag_leffler(double mu, double nu, double z);

// One-parameter form E_mu(z) = E_{mu,1}(z).
double mittag_leffler(double mu, double z);

}  // namespace fracspec
