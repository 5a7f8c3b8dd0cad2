#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <vector>

#include "cusplab/errors.hpp"
#include "cusplab/tolerances.hpp"

namespace cusplab {

/// Truncated Taylor polynomial in one variable, expanded at a local origin.
/// coeffs[k] is the coefficient of t^k, i.e. f^(k)(0)/k!. Immutable by
/// convention: every operation returns a fresh value.
class Jet1 {
public:
    Jet1() : c_(1, 0.0) {}
    explicit Jet1(int order) : c_(static_cast<size_t>(order) + 1, 0.0) { assert(order >= 0); }
    Jet1(int order, double constant) : Jet1(order) { c_[0] = constant; }

    static Jet1 constant(double x, int order) { return Jet1(order, x); }

    /// The jet of t itself: x0 + t.
    static Jet1 variable(double x0, int order)
    {
        Jet1 j(order);
        j.c_[0] = x0;
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    static Jet1 from_coeffs(std::vector<double> coeffs)
    {
        Jet1 j;
        assert(!coeffs.empty());
        j.c_ = std::move(coeffs);
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int k) const { return k <= order() ? c_[static_cast<size_t>(k)] : 0.0; }
    double& at(int k) { return c_[static_cast<size_t>(k)]; }
    const std::vector<double>& coeffs() const { return c_; }

    /// k-th derivative value at the base point (k! * coeffs[k]).
    double derivative(int k) const
    {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return (*this)[k] * f;
    }

    double value() const { return c_[0]; }

    double max_abs_coeff() const
    {
        double m = 0.0;
        for (double x : c_) m = std::max(m, std::abs(x));
        return m;
    }

    Jet1 truncated(int new_order) const
    {
        Jet1 r(new_order);
        for (int k = 0; k <= std::min(new_order, order()); ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
        return r;
    }

    /// Evaluates the truncated polynomial at offset t from the base point.
    double eval(double t) const
    {
        double acc = 0.0;
        for (int k = order(); k >= 0; --k) acc = acc * t + c_[static_cast<size_t>(k)];
        return acc;
    }

    friend Jet1 operator-(const Jet1& a)
    {
        Jet1 r = a;
        for (double& x : r.c_) x = -x;
        return r;
    }

    friend Jet1 operator+(const Jet1& a, const Jet1& b)
    {
        Jet1 r(std::max(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<size_t>(k)] = a[k] + b[k];
        return r;
    }

    friend Jet1 operator-(const Jet1& a, const Jet1& b)
    {
        Jet1 r(std::max(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<size_t>(k)] = a[k] - b[k];
        return r;
    }

    friend Jet1 operator*(const Jet1& a, const Jet1& b)
    {
        const int n = std::max(a.order(), b.order());
        Jet1 r(n);
        for (int i = 0; i <= std::min(n, a.order()); ++i) {
            const double ai = a[i];
            if (ai == 0.0) continue;
            const int jmax = std::min(b.order(), n - i);
            for (int j = 0; j <= jmax; ++j) r.c_[static_cast<size_t>(i + j)] += ai * b[j];
        }
        return r;
    }

    friend Jet1 operator/(const Jet1& a, const Jet1& b)
    {
        if (std::abs(b[0]) <= tolerances{}.tol_zero)
            fail(errc::division_by_near_zero, "jet divisor has near-zero constant term");
        const int n = std::max(a.order(), b.order());
        Jet1 r(n);
        const double inv = 1.0 / b[0];
        for (int k = 0; k <= n; ++k) {
            double acc = a[k];
            for (int j = 1; j <= std::min(k, b.order()); ++j) acc -= b[j] * r[k - j];
            r.c_[static_cast<size_t>(k)] = acc * inv;
        }
        return r;
    }

    friend Jet1 operator+(const Jet1& a, double s)
    {
        Jet1 r = a;
        r.c_[0] += s;
        return r;
    }
    friend Jet1 operator+(double s, const Jet1& a) { return a + s; }
    friend Jet1 operator-(const Jet1& a, double s) { return a + (-s); }
    friend Jet1 operator-(double s, const Jet1& a) { return (-a) + s; }
    friend Jet1 operator*(const Jet1& a, double s)
    {
        Jet1 r = a;
        for (double& x : r.c_) x *= s;
        return r;
    }
    friend Jet1 operator*(double s, const Jet1& a) { return a * s; }
    friend Jet1 operator/(const Jet1& a, double s) { return a * (1.0 / s); }
    friend Jet1 operator/(double s, const Jet1& a) { return Jet1::constant(s, a.order()) / a; }

    friend std::ostream& operator<<(std::ostream& out, const Jet1& j)
    {
        out << "[";
        for (int k = 0; k <= j.order(); ++k) out << (k ? ", " : "") << j[k];
        return out << "]";
    }

private:
    std::vector<double> c_;
};

/// Formal derivative d/dt; result has order N-1 (or order 0 for constants).
inline Jet1 jet_derivative(const Jet1& g)
{
    const int n = std::max(g.order() - 1, 0);
    Jet1 r(n);
    for (int k = 1; k <= g.order(); ++k) {
        if (k - 1 <= n) r.at(k - 1) = g[k] * k;
    }
    return r;
}

/// Antiderivative with lower limit at the base point: h(0) = 0, h' = g.
inline Jet1 jet_antiderivative(const Jet1& g)
{
    Jet1 r(g.order() + 1);
    for (int k = 0; k <= g.order(); ++k) r.at(k + 1) = g[k] / (k + 1);
    return r;
}

/// Quotient g / t^power; coefficients below the power must be negligible
/// relative to the jet scale.
inline Jet1 jet_divide_by_power(const Jet1& g, int power,
                                double tol_rel = tolerances{}.tol_divisibility)
{
    assert(power >= 1);
    const double tol = tol_rel * std::max(g.max_abs_coeff(), 1e-300);
    for (int k = 0; k < power && k <= g.order(); ++k)
        if (std::abs(g[k]) > tol) fail(errc::not_divisible, "jet not divisible by t^power");
    const int n = std::max(g.order() - power, 0);
    Jet1 r(n);
    for (int k = 0; k <= n; ++k) r.at(k) = g[k + power];
    return r;
}

/// Composition f(g(t)) for g with vanishing constant term.
inline Jet1 jet_compose(const Jet1& f, const Jet1& g)
{
    assert(std::abs(g[0]) == 0.0 && "inner jet must be origin-preserving");
    const int n = std::max(f.order(), g.order());
    Jet1 acc = Jet1::constant(0.0, n);
    for (int k = std::min(f.order(), n); k >= 0; --k) {
        acc = acc * g.truncated(n);
        acc.at(0) += f[k];
    }
    return acc;
}

/// Compositional inverse of s(t) with s(0) = 0, s'(0) != 0: returns t(s)
/// with s(t(s)) = s through the common order. Newton iteration in jet space.
inline Jet1 jet_revert(const Jet1& s)
{
    if (std::abs(s[0]) > tolerances{}.tol_zero) fail(errc::domain_violation, "reversion needs s(0) = 0");
    if (std::abs(s[1]) <= tolerances{}.tol_zero) fail(errc::domain_violation, "reversion needs s'(0) != 0");
    const int n = s.order();
    const Jet1 id = Jet1::variable(0.0, n);
    const Jet1 ds = jet_derivative(s).truncated(n);
    Jet1 t = id / s[1];
    int steps = 1;
    for (int reached = 1; reached < n; reached *= 2) ++steps;
    for (int it = 0; it < steps + 1; ++it) {
        Jet1 err = jet_compose(s.truncated(n), t) - id;
        t = t - err / jet_compose(ds, t);
    }
    return t;
}

/// Re-expansion of the same polynomial around base + dt (exact binomial shift).
inline Jet1 jet_shift(const Jet1& g, double dt)
{
    const int n = g.order();
    Jet1 r(n);
    for (int k = 0; k <= n; ++k) {
        // contribution of g_k (t0 + dt + T)^k -> sum_j C(k,j) dt^(k-j) T^j
        double binom = 1.0;
        double p = 1.0;
        for (int j = k; j >= 0; --j) {
            r.at(j) += g[k] * binom * p;
            binom = binom * j / (k - j + 1);
            p *= dt;
        }
    }
    return r;
}

namespace detail {

/// Builds f(a) by composing the univariate Taylor series of f around a's
/// constant term with the perturbation part of a. derivs[k] must hold
/// f^(k)(a0).
inline Jet1 taylor_apply(const Jet1& a, const std::vector<double>& derivs)
{
    const int n = a.order();
    Jet1 da = a;
    da.at(0) = 0.0;
    Jet1 acc = Jet1::constant(0.0, n);
    double fact = 1.0;
    for (int k = 1; k <= n; ++k) fact *= k;
    for (int k = n; k >= 0; --k) {
        acc = acc * da;
        acc.at(0) += derivs[static_cast<size_t>(k)] / fact;
        if (k > 0) fact /= k;
    }
    return acc;
}

} // namespace detail

inline Jet1 sqrt(const Jet1& a)
{
    const double a0 = a[0];
    if (a0 <= tolerances{}.tol_zero) fail(errc::domain_violation, "sqrt needs positive constant term");
    // d^k sqrt = (1/2)(1/2-1)...(1/2-k+1) a0^(1/2-k)
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    double coeff = 1.0;
    double p = std::sqrt(a0);
    for (int k = 0; k <= a.order(); ++k) {
        d[static_cast<size_t>(k)] = coeff * p;
        coeff *= (0.5 - k);
        p /= a0;
    }
    return detail::taylor_apply(a, d);
}

inline Jet1 exp(const Jet1& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1, std::exp(a[0]));
    return detail::taylor_apply(a, d);
}

inline Jet1 log(const Jet1& a)
{
    const double a0 = a[0];
    if (a0 <= tolerances{}.tol_zero) fail(errc::domain_violation, "log needs positive constant term");
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    d[0] = std::log(a0);
    double v = 1.0 / a0;
    for (int k = 1; k <= a.order(); ++k) {
        d[static_cast<size_t>(k)] = v;
        v *= -static_cast<double>(k) / a0;
    }
    return detail::taylor_apply(a, d);
}

inline Jet1 sin(const Jet1& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    const double s = std::sin(a[0]);
    const double c = std::cos(a[0]);
    const double cyc[4] = {s, c, -s, -c};
    for (int k = 0; k <= a.order(); ++k) d[static_cast<size_t>(k)] = cyc[k % 4];
    return detail::taylor_apply(a, d);
}

inline Jet1 cos(const Jet1& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    const double s = std::sin(a[0]);
    const double c = std::cos(a[0]);
    const double cyc[4] = {c, -s, -c, s};
    for (int k = 0; k <= a.order(); ++k) d[static_cast<size_t>(k)] = cyc[k % 4];
    return detail::taylor_apply(a, d);
}

inline Jet1 sinh(const Jet1& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    const double s = std::sinh(a[0]);
    const double c = std::cosh(a[0]);
    for (int k = 0; k <= a.order(); ++k) d[static_cast<size_t>(k)] = (k % 2 == 0) ? s : c;
    return detail::taylor_apply(a, d);
}

inline Jet1 cosh(const Jet1& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    const double s = std::sinh(a[0]);
    const double c = std::cosh(a[0]);
    for (int k = 0; k <= a.order(); ++k) d[static_cast<size_t>(k)] = (k % 2 == 0) ? c : s;
    return detail::taylor_apply(a, d);
}

/// Integer power by repeated multiplication (any constant term).
inline Jet1 powi(const Jet1& a, int e)
{
    if (e < 0) return Jet1::constant(1.0, a.order()) / powi(a, -e);
    Jet1 r = Jet1::constant(1.0, a.order());
    Jet1 base = a;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * base;
        base = base * base;
    }
    return r;
}

/// Real power a^e for a with positive constant term.
inline Jet1 pow(const Jet1& a, double e)
{
    if (e == static_cast<double>(static_cast<int>(e)) && std::abs(e) < 64)
        return powi(a, static_cast<int>(e));
    const double a0 = a[0];
    if (a0 <= tolerances{}.tol_zero) fail(errc::domain_violation, "pow needs positive constant term");
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    double coeff = 1.0;
    double p = std::pow(a0, e);
    for (int k = 0; k <= a.order(); ++k) {
        d[static_cast<size_t>(k)] = coeff * p;
        coeff *= (e - k);
        p /= a0;
    }
    return detail::taylor_apply(a, d);
}

} // namespace cusplab
