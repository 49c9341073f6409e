#pragma once

namespace kslab {

/// Volume of the unit ball in dimension n (alpha_n). Throws std::domain_error
/// for n < 1.
double ball_volume(int n);

/// Surface area of the unit sphere in dimension n: omega_n = n * alpha_n.
double sphere_area(int n);

/// The two normalization constants of a fixed dimension. The 2D blow-up and
/// kernel-gradient formulas bind to alpha_n; the cumulative-mass formulas of
/// the radial solver bind to omega_n. Keeping both named avoids silently mixing
/// the two conventions.
struct DimensionConstants {
    int n;
    double alpha_n;  ///< unit-ball volume
    double omega_n;  ///< unit-sphere area, n * alpha_n

    static DimensionConstants of(int n);
};

/// Mass above which finite-time blow-up is certified.
///   n = 2: 8*pi / chi0 with chi0 the coefficient value at the origin
///          (p is ignored).
///   n >= 3 with p == n: 2^n * n * alpha_n / chi0.
/// Throws std::invalid_argument for n >= 3 with p != n: that regime has a
/// moment threshold (see cb_threshold), not a mass threshold.
double critical_mass_blowup(int n, double chi0, double p = 2.0);

/// Mass below which global existence is certified in the radial-ball setting:
/// 2 * n * omega_n / chi. At n = 2 this coincides with the blow-up threshold.
double critical_mass_global(int n, double chi);

}  // namespace kslab
