#pragma once

namespace cusplab {

/// Numeric thresholds shared across the library. Values are frozen here;
/// class_tol is additionally exposed as a CLI flag because classification
/// of borderline germs is discontinuous and callers may want to widen or
/// tighten it against the reported margins.
struct tolerances {
    /// Absolute threshold below which a jet constant term counts as zero
    /// (division / elementary-function domain checks).
    double tol_zero = 1e-12;

    /// Relative threshold for coordinate-divisibility of a jet: coefficients
    /// below power*max|coeff| must not exceed this fraction.
    double tol_divisibility = 1e-9;

    /// Relative threshold for classification decisions on scale-normalized
    /// quantities (omega, omega_r, bias, kappa_c, r_c, ...).
    double class_tol = 1e-9;

    /// Absolute floor on tangent-line pairings in side checks; values scale
    /// like t^4 at the smallest sample.
    double side_tol = 1e-14;
};

inline constexpr int default_surface_order = 8;
inline constexpr int default_curve_order = 9;

} // namespace cusplab
