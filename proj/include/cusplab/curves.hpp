#pragma once

#include <cmath>
#include <map>
#include <string>

#include "cusplab/errors.hpp"
#include "cusplab/jet1.hpp"
#include "cusplab/jetvec.hpp"
#include "cusplab/tolerances.hpp"

namespace cusplab {

/// Invariants of an A-type plane-curve germ at a singular parameter value.
/// omega is the cuspidal curvature; when it vanishes, l is the ratio in
/// gamma''' = l gamma'', bias is the fourth-order side invariant and
/// omega_r the secondary cuspidal curvature.
struct CurveInvariants {
    double omega = 0;
    double l = 0;
    double bias = 0;
    double omega_r = 0;
    bool a_type = false;
    bool omega_defined = false;
    /// true when omega vanished within tolerance so l/bias/omega_r apply
    bool higher_defined = false;
};

enum class cusp_verdict {
    regular,
    a_type_non_cusp,
    cusp_3_2,
    cusp_5_2_balanced,
    cusp_5_2_non_balanced,
    degenerate_higher,
};

inline const char* to_string(cusp_verdict v)
{
    switch (v) {
    case cusp_verdict::regular: return "Regular";
    case cusp_verdict::a_type_non_cusp: return "ATypeNonCusp";
    case cusp_verdict::cusp_3_2: return "Cusp32";
    case cusp_verdict::cusp_5_2_balanced: return "Cusp52Balanced";
    case cusp_verdict::cusp_5_2_non_balanced: return "Cusp52NonBalanced";
    case cusp_verdict::degenerate_higher: return "DegenerateHigher";
    }
    return "?";
}

/// Classification result together with the quantities that decided it,
/// computed on the |gamma''|-normalized germ.
struct CuspClass {
    cusp_verdict verdict = cusp_verdict::degenerate_higher;
    std::map<std::string, double> margins;
};

namespace detail {

struct curve_derivs {
    JetVec<double, 2> d1, d2, d3, d4, d5;
    double scale; // max coefficient magnitude of the input jets
};

inline JetVec<double, 2> deriv_at0(const Curve2& g, int k)
{
    return {g[0].derivative(k), g[1].derivative(k)};
}

inline double det2d(const JetVec<double, 2>& a, const JetVec<double, 2>& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

inline double dot2d(const JetVec<double, 2>& a, const JetVec<double, 2>& b)
{
    return a[0] * b[0] + a[1] * b[1];
}

inline double norm2d(const JetVec<double, 2>& a) { return std::sqrt(dot2d(a, a)); }

inline curve_derivs take_derivs(const Curve2& g)
{
    curve_derivs d;
    d.d1 = deriv_at0(g, 1);
    d.d2 = deriv_at0(g, 2);
    d.d3 = deriv_at0(g, 3);
    d.d4 = deriv_at0(g, 4);
    d.d5 = deriv_at0(g, 5);
    d.scale = std::max({g[0].max_abs_coeff(), g[1].max_abs_coeff(), 1e-300});
    return d;
}

/// Invariants evaluated on arbitrary-scale derivative data.
inline CurveInvariants invariants_from_derivs(const curve_derivs& d, double class_tol)
{
    CurveInvariants inv;
    const double n2 = norm2d(d.d2);
    inv.a_type = n2 > class_tol * d.scale;
    if (!inv.a_type) return inv;

    inv.omega = det2d(d.d2, d.d3) / std::pow(n2, 2.5);
    inv.omega_defined = true;

    // decide omega ~ 0 on the normalized germ: scaling gamma by c scales
    // omega by c^{-1/2}, so normalize against |gamma''| = 2
    const double omega_n = inv.omega * std::sqrt(n2 / 2.0);
    if (std::abs(omega_n) <= class_tol) {
        inv.l = dot2d(d.d3, d.d2) / (n2 * n2);
        inv.bias = det2d(d.d2, d.d4) / (n2 * n2 * n2);
        JetVec<double, 2> m{3 * d.d5[0] - 10 * inv.l * d.d4[0], 3 * d.d5[1] - 10 * inv.l * d.d4[1]};
        inv.omega_r = det2d(d.d2, m) / std::pow(n2, 3.5);
        inv.higher_defined = true;
    }
    return inv;
}

} // namespace detail

/// Cuspidal curvature, bias and secondary cuspidal curvature of a singular
/// plane-curve germ. Requires jet order >= 5, gamma(0) = 0 and gamma'(0) = 0.
inline CurveInvariants curve_invariants(const Curve2& gamma,
                                        const tolerances& tol = tolerances{})
{
    const auto d = detail::take_derivs(gamma);
    if (detail::norm2d(d.d1) > tol.class_tol * d.scale)
        fail(errc::not_singular, "gamma'(0) != 0");
    if (detail::norm2d(d.d2) <= tol.class_tol * d.scale)
        fail(errc::not_a_type, "gamma''(0) = 0, omega undefined");
    return detail::invariants_from_derivs(d, tol.class_tol);
}

/// Decision tree over the normalized germ: Regular / Cusp32 / Cusp52* /
/// DegenerateHigher, with the decisive quantities recorded as margins.
inline CuspClass classify_cusp(const Curve2& gamma, const tolerances& tol = tolerances{})
{
    const auto d = detail::take_derivs(gamma);
    CuspClass out;
    const double n1 = detail::norm2d(d.d1);
    const double n2 = detail::norm2d(d.d2);
    out.margins["gamma1_abs"] = n1 / d.scale;
    out.margins["gamma2_abs"] = n2 / d.scale;
    if (n1 > tol.class_tol * d.scale) {
        out.verdict = cusp_verdict::regular;
        return out;
    }
    if (n2 <= tol.class_tol * d.scale) {
        out.verdict = cusp_verdict::degenerate_higher;
        return out;
    }

    // all decision quantities on the germ normalized to |gamma''| = 2,
    // matching the (t^2, ...) models
    const double c = 2.0 / n2;
    detail::curve_derivs dn = d;
    for (auto* v : {&dn.d1, &dn.d2, &dn.d3, &dn.d4, &dn.d5}) {
        (*v)[0] *= c;
        (*v)[1] *= c;
    }
    dn.scale = 1.0;
    const CurveInvariants inv = detail::invariants_from_derivs(dn, tol.class_tol);
    out.margins["omega"] = inv.omega;
    out.margins["det23_residual"] = detail::det2d(dn.d2, dn.d3);
    if (std::abs(inv.omega) > tol.class_tol) {
        out.verdict = cusp_verdict::cusp_3_2;
        return out;
    }
    out.margins["bias"] = inv.bias;
    out.margins["omega_r"] = inv.omega_r;
    if (std::abs(inv.omega_r) > tol.class_tol) {
        out.verdict = std::abs(inv.bias) <= tol.class_tol ? cusp_verdict::cusp_5_2_balanced
                                                          : cusp_verdict::cusp_5_2_non_balanced;
        return out;
    }
    out.verdict = cusp_verdict::degenerate_higher;
    return out;
}

/// Signed curvature across a 5/2-cusp. Builds the jet of sgn(t) kappa by
/// cancelling the t^3 / |t|^3 factor and the half-arclength jet
/// s(t) = t sqrt(C(t)), then returns (ktilde(0), d ktilde/ds (0)).
struct CurvatureExtension {
    double ktilde0 = 0;
    double ktilde_prime0 = 0; // derivative with respect to half-arclength
};

inline CurvatureExtension signed_curvature_extension(const Curve2& gamma,
                                                     const tolerances& tol = tolerances{})
{
    const CuspClass cls = classify_cusp(gamma, tol);
    if (cls.verdict != cusp_verdict::cusp_5_2_balanced &&
        cls.verdict != cusp_verdict::cusp_5_2_non_balanced)
        fail(errc::not_ramphoid, "germ is not a 5/2-cusp");

    const Curve2 g1 = derivative(gamma);
    const Curve2 g2 = derivative(gamma, 2);
    // gamma' = t A(t), A(0) = gamma''(0) != 0
    Curve2 a;
    for (int i = 0; i < 2; ++i) a[i] = jet_divide_by_power(g1[i], 1, 1e-6);
    const Jet1 det_g = det2(g1, g2);
    const Jet1 e = jet_divide_by_power(det_g, 3, 1e-6);
    const Jet1 a_norm = sqrt(dot(a, a));
    const Jet1 ktilde = e / (a_norm * a_norm * a_norm);

    // s_g(t) = int |t| |A|; the jet part C with s = t sqrt(C)
    const Jet1 sg_over_sign = jet_antiderivative(Jet1::variable(0.0, a_norm.order()) * a_norm);
    const Jet1 c = jet_divide_by_power(sg_over_sign, 2, 1e-9);
    const Jet1 s = Jet1::variable(0.0, c.order()) * sqrt(c);

    CurvatureExtension out;
    out.ktilde0 = ktilde[0];
    out.ktilde_prime0 = ktilde[1] / s[1];
    return out;
}

/// Curvature and torsion jets of a regular space curve plus the Frenet
/// frame at the base point.
struct FrenetData {
    Jet1 kappa;
    Jet1 tau;
    Vec3 e, n, b;
    bool frame_valid = false; // requires kappa(0) > 0
};

inline FrenetData frenet_data(const Curve3& g, const tolerances& tol = tolerances{})
{
    const Curve3 d1 = derivative(g);
    const Curve3 d2 = derivative(g, 2);
    const Curve3 d3 = derivative(g, 3);
    const Jet1 speed2 = dot(d1, d1);
    if (speed2[0] <= tol.tol_zero) fail(errc::not_regular, "curve not regular at 0");
    const Curve3 c = cross(d1, d2);
    const Jet1 c2 = dot(c, c);

    FrenetData out;
    const Jet1 speed = sqrt(speed2);
    if (c2[0] > tol.tol_zero * std::max(1.0, speed2[0] * speed2[0])) {
        out.kappa = sqrt(c2) / (speed * speed * speed);
        out.tau = det3(d1, d2, d3) / c2;
        out.frame_valid = true;
        const Vec3 e = normalized(value(d1));
        Vec3 d2v = value(d2);
        const double along = dot(d2v, e);
        const Vec3 n = normalized(d2v - along * e);
        out.e = e;
        out.n = n;
        out.b = cross(e, n);
    } else {
        // curvature vanishes at 0: kappa as |cross|/speed^3 is not jet-smooth;
        // report the zero jet and no frame
        out.kappa = Jet1::constant(0.0, g[0].order());
        out.tau = Jet1::constant(0.0, g[0].order());
        out.e = normalized(value(d1));
    }
    return out;
}

/// Arc-length space curve with prescribed curvature and torsion jets,
/// solved from the Frenet system by Picard iteration on coefficients.
inline Curve3 curve_from_curvature(const Jet1& kappa, const Jet1& tau, int order)
{
    const int n = order;
    auto lift = [n](double x, double y, double z) {
        Curve3 v;
        v[0] = Jet1::constant(x, n);
        v[1] = Jet1::constant(y, n);
        v[2] = Jet1::constant(z, n);
        return v;
    };
    const Jet1 k = kappa.truncated(n);
    const Jet1 t = tau.truncated(n);
    Curve3 e = lift(1, 0, 0), m = lift(0, 1, 0), b = lift(0, 0, 1);
    for (int it = 0; it <= n; ++it) {
        Curve3 en, mn, bn;
        for (int i = 0; i < 3; ++i) {
            en[i] = jet_antiderivative(k * m[i]).truncated(n);
            mn[i] = jet_antiderivative(t * b[i] - k * e[i]).truncated(n);
            bn[i] = jet_antiderivative(-1.0 * (t * m[i])).truncated(n);
        }
        e = lift(1, 0, 0) + en;
        m = lift(0, 1, 0) + mn;
        b = lift(0, 0, 1) + bn;
    }
    Curve3 g;
    for (int i = 0; i < 3; ++i) g[i] = jet_antiderivative(e[i]).truncated(n);
    return g;
}

/// Projection of a regular space curve into its normal plane at 0,
/// expressed in the right-handed basis (n(0), b(0)). Reparameterizes to
/// arc length internally when needed.
inline Curve2 project_to_normal_plane(const Curve3& big_gamma,
                                      const tolerances& tol = tolerances{})
{
    Curve3 g = big_gamma;
    const Jet1 speed2 = dot(derivative(g), derivative(g));
    if (speed2[0] <= tol.tol_zero) fail(errc::not_regular, "curve not regular at 0");

    bool unit_speed = true;
    for (int kk = 0; kk <= speed2.order(); ++kk)
        if (std::abs(speed2[kk] - (kk == 0 ? 1.0 : 0.0)) > 1e-9) unit_speed = false;
    if (!unit_speed) {
        const Jet1 s = jet_antiderivative(sqrt(speed2)).truncated(g[0].order());
        const Jet1 t_of_s = jet_revert(s);
        for (int i = 0; i < 3; ++i) g[i] = jet_compose(g[i], t_of_s);
    }

    const FrenetData fr = frenet_data(g, tol);
    Vec3 n = fr.n, b = fr.b;
    if (!fr.frame_valid) {
        // flat at 0: any orthonormal completion of e works
        const Vec3 e = fr.e;
        Vec3 cand = std::abs(e.x) <= std::abs(e.y) && std::abs(e.x) <= std::abs(e.z)
                        ? Vec3{1, 0, 0}
                        : (std::abs(e.y) <= std::abs(e.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
        n = normalized(cand - dot(cand, e) * e);
        b = cross(e, n);
    }
    Curve2 out;
    out[0] = g[0] * n.x + g[1] * n.y + g[2] * n.z;
    out[1] = g[0] * b.x + g[1] * b.y + g[2] * b.z;
    return out;
}

/// Closed-form invariants of the normal-plane projection in terms of
/// kappa and tau of the space curve.
inline CurveInvariants projection_invariants_closed_form(const FrenetData& fr,
                                                         const tolerances& tol = tolerances{})
{
    const double k0 = fr.kappa[0];
    if (k0 <= tol.tol_zero) fail(errc::flat_point, "kappa(0) = 0");
    const double k1 = fr.kappa.derivative(1);
    const double t0 = fr.tau[0];
    const double t1 = fr.tau.derivative(1);
    const double t2 = fr.tau.derivative(2);

    CurveInvariants inv;
    inv.a_type = true;
    inv.omega_defined = true;
    inv.omega = t0 / std::sqrt(k0);
    if (std::abs(inv.omega) <= tol.class_tol) {
        inv.l = k1 / k0;
        inv.bias = t1 / k0;
        inv.omega_r = (-k1 * t1 + 3.0 * k0 * t2) / std::pow(k0, 2.5);
        inv.higher_defined = true;
    }
    return inv;
}

enum class side_verdict { same_side, both_sides, inconclusive };

inline const char* to_string(side_verdict v)
{
    switch (v) {
    case side_verdict::same_side: return "SameSide";
    case side_verdict::both_sides: return "BothSides";
    case side_verdict::inconclusive: return "Inconclusive";
    }
    return "?";
}

/// Samples the signed distance of the two half-branches to the tangent
/// line. The jet itself is the sampled representative.
inline side_verdict tangent_side_check(const Curve2& gamma, double epsilon, int samples,
                                       const tolerances& tol = tolerances{})
{
    const auto d = detail::take_derivs(gamma);
    const double n2 = detail::norm2d(d.d2);
    if (n2 <= tol.class_tol * d.scale) return side_verdict::inconclusive;
    // normal of the tangent line: rot90(gamma''(0))
    const double nx = -d.d2[1] / n2;
    const double ny = d.d2[0] / n2;

    auto branch_sign = [&](double sgn) -> int {
        int res = 0;
        for (int i = 1; i <= samples; ++i) {
            const double t = sgn * epsilon * i / samples;
            const double h = gamma[0].eval(t) * nx + gamma[1].eval(t) * ny;
            if (std::abs(h) <= tol.side_tol) return 2; // indeterminate
            const int s = h > 0 ? 1 : -1;
            if (res == 0)
                res = s;
            else if (res != s)
                return 2;
        }
        return res;
    };

    const int plus = branch_sign(+1.0);
    const int minus = branch_sign(-1.0);
    if (plus == 2 || minus == 2 || plus == 0 || minus == 0) return side_verdict::inconclusive;
    return plus == minus ? side_verdict::same_side : side_verdict::both_sides;
}

} // namespace cusplab
