#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <vector>

#include "cusplab/errors.hpp"
#include "cusplab/jet1.hpp"
#include "cusplab/tolerances.hpp"

namespace cusplab {

enum class axis { u, v };

/// Truncated Taylor polynomial in two variables at a local origin.
/// Coefficients form the triangular table {(i,j) : i+j <= N}; entry (i,j)
/// multiplies u^i v^j and equals d_u^i d_v^j f / (i! j!).
class Jet2 {
public:
    Jet2() : n_(0), c_(1, 0.0) {}
    explicit Jet2(int order) : n_(order), c_(size_of(order), 0.0) { assert(order >= 0); }
    Jet2(int order, double constant) : Jet2(order) { c_[0] = constant; }

    static Jet2 constant(double x, int order) { return Jet2(order, x); }

    static Jet2 variable(axis ax, double x0, int order)
    {
        Jet2 j(order);
        j.c_[0] = x0;
        if (order >= 1) j.ref(ax == axis::u ? 1 : 0, ax == axis::u ? 0 : 1) = 1.0;
        return j;
    }

    /// Lifts a univariate jet in the given axis to a bivariate jet.
    static Jet2 from_jet1(const Jet1& g, axis ax, int order)
    {
        Jet2 j(order);
        for (int k = 0; k <= std::min(order, g.order()); ++k) {
            if (ax == axis::u)
                j.ref(k, 0) = g[k];
            else
                j.ref(0, k) = g[k];
        }
        return j;
    }

    int order() const { return n_; }

    double operator()(int i, int j) const
    {
        if (i < 0 || j < 0 || i + j > n_) return 0.0;
        return c_[idx(i, j)];
    }

    double& ref(int i, int j)
    {
        assert(i >= 0 && j >= 0 && i + j <= n_);
        return c_[idx(i, j)];
    }

    /// Derivative value d_u^i d_v^j f at the base point.
    double derivative(int i, int j) const
    {
        double f = 1.0;
        for (int k = 2; k <= i; ++k) f *= k;
        for (int k = 2; k <= j; ++k) f *= k;
        return (*this)(i, j) * f;
    }

    double value() const { return c_[0]; }

    double max_abs_coeff() const
    {
        double m = 0.0;
        for (double x : c_) m = std::max(m, std::abs(x));
        return m;
    }

    Jet2 truncated(int new_order) const
    {
        Jet2 r(new_order);
        for (int i = 0; i <= std::min(new_order, n_); ++i)
            for (int j = 0; i + j <= std::min(new_order, n_); ++j) r.ref(i, j) = (*this)(i, j);
        return r;
    }

    /// Restriction to an axis as a univariate jet: v=0 for axis::u, u=0 for axis::v.
    Jet1 on_axis(axis ax) const
    {
        Jet1 r(n_);
        for (int k = 0; k <= n_; ++k) r.at(k) = ax == axis::u ? (*this)(k, 0) : (*this)(0, k);
        return r;
    }

    double eval(double u, double v) const
    {
        double acc = 0.0;
        for (int i = n_; i >= 0; --i) {
            double row = 0.0;
            for (int j = n_ - i; j >= 0; --j) row = row * v + (*this)(i, j);
            acc = acc * u + row;
        }
        return acc;
    }

    friend Jet2 operator-(const Jet2& a)
    {
        Jet2 r = a;
        for (double& x : r.c_) x = -x;
        return r;
    }

    friend Jet2 operator+(const Jet2& a, const Jet2& b)
    {
        Jet2 r(std::max(a.n_, b.n_));
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; i + j <= r.n_; ++j) r.ref(i, j) = a(i, j) + b(i, j);
        return r;
    }

    friend Jet2 operator-(const Jet2& a, const Jet2& b)
    {
        Jet2 r(std::max(a.n_, b.n_));
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; i + j <= r.n_; ++j) r.ref(i, j) = a(i, j) - b(i, j);
        return r;
    }

    friend Jet2 operator*(const Jet2& a, const Jet2& b)
    {
        const int n = std::max(a.n_, b.n_);
        Jet2 r(n);
        for (int i = 0; i <= std::min(a.n_, n); ++i)
            for (int j = 0; i + j <= std::min(a.n_, n); ++j) {
                const double aij = a(i, j);
                if (aij == 0.0) continue;
                const int rem = n - i - j;
                for (int p = 0; p <= std::min(b.n_, rem); ++p)
                    for (int q = 0; p + q <= std::min(b.n_, rem); ++q) {
                        const double bpq = b(p, q);
                        if (bpq != 0.0) r.ref(i + p, j + q) += aij * bpq;
                    }
            }
        return r;
    }

    friend Jet2 operator/(const Jet2& a, const Jet2& b)
    {
        if (std::abs(b(0, 0)) <= tolerances{}.tol_zero)
            fail(errc::division_by_near_zero, "jet divisor has near-zero constant term");
        const int n = std::max(a.n_, b.n_);
        Jet2 r(n);
        const double inv = 1.0 / b(0, 0);
        // resolve coefficients in order of total degree
        for (int d = 0; d <= n; ++d)
            for (int i = 0; i <= d; ++i) {
                const int j = d - i;
                double acc = a(i, j);
                for (int p = 0; p <= i; ++p)
                    for (int q = 0; q <= j; ++q) {
                        if (p == 0 && q == 0) continue;
                        const double bpq = b(p, q);
                        if (bpq != 0.0) acc -= bpq * r(i - p, j - q);
                    }
                r.ref(i, j) = acc * inv;
            }
        return r;
    }

    friend Jet2 operator+(const Jet2& a, double s)
    {
        Jet2 r = a;
        r.c_[0] += s;
        return r;
    }
    friend Jet2 operator+(double s, const Jet2& a) { return a + s; }
    friend Jet2 operator-(const Jet2& a, double s) { return a + (-s); }
    friend Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }
    friend Jet2 operator*(const Jet2& a, double s)
    {
        Jet2 r = a;
        for (double& x : r.c_) x *= s;
        return r;
    }
    friend Jet2 operator*(double s, const Jet2& a) { return a * s; }
    friend Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
    friend Jet2 operator/(double s, const Jet2& a) { return Jet2::constant(s, a.n_) / a; }

    friend std::ostream& operator<<(std::ostream& out, const Jet2& j)
    {
        out << "{";
        bool first = true;
        for (int d = 0; d <= j.n_; ++d)
            for (int i = d; i >= 0; --i) {
                const double x = j(i, d - i);
                if (x == 0.0) continue;
                if (!first) out << " + ";
                out << x << "*u^" << i << "v^" << (d - i);
                first = false;
            }
        if (first) out << "0";
        return out << "}";
    }

private:
    static size_t size_of(int n) { return static_cast<size_t>((n + 1) * (n + 2) / 2); }

    size_t idx(int i, int j) const
    {
        // row i holds n_+1-i entries
        return static_cast<size_t>(i * (2 * n_ + 3 - i) / 2 + j);
    }

    int n_;
    std::vector<double> c_;
};

/// Exact formal partial derivative, repeated `times`; order drops accordingly.
inline Jet2 jet_partial(const Jet2& a, axis ax, int times = 1)
{
    assert(times >= 0);
    Jet2 cur = a;
    for (int t = 0; t < times; ++t) {
        const int n = std::max(cur.order() - 1, 0);
        Jet2 r(n);
        for (int i = 0; i <= cur.order(); ++i)
            for (int j = 0; i + j <= cur.order(); ++j) {
                const double x = cur(i, j);
                if (x == 0.0) continue;
                if (ax == axis::u && i >= 1 && (i - 1) + j <= n) r.ref(i - 1, j) += x * i;
                if (ax == axis::v && j >= 1 && i + (j - 1) <= n) r.ref(i, j - 1) += x * j;
            }
        cur = r;
    }
    return cur;
}

/// Quotient a / axis^power when every coefficient below the power is
/// negligible relative to the jet scale; the failure signals geometric
/// obstructions (e.g. unbounded curvature across a front-type edge).
inline Jet2 jet_divide_by_coordinate(const Jet2& a, axis ax, int power,
                                     double tol_rel = tolerances{}.tol_divisibility)
{
    assert(power >= 1);
    const double scale = a.max_abs_coeff();
    const double tol = tol_rel * std::max(scale, 1e-300);
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; i + j <= a.order(); ++j) {
            const int e = ax == axis::u ? i : j;
            if (e < power && std::abs(a(i, j)) > tol)
                fail(errc::not_divisible, "jet not divisible by coordinate power");
        }
    const int n = std::max(a.order() - power, 0);
    Jet2 r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r.ref(i, j) = ax == axis::u ? a(i + power, j) : a(i, j + power);
    return r;
}

/// Substitution of univariate jets for both variables: returns the jet in t
/// of f(p(t), q(t)). Both p and q must be origin-preserving.
inline Jet1 jet_substitute(const Jet2& f, const Jet1& p, const Jet1& q)
{
    assert(std::abs(p[0]) == 0.0 && std::abs(q[0]) == 0.0);
    const int n = std::max({f.order(), p.order(), q.order()});
    // Horner in u with inner Horner in v
    Jet1 acc = Jet1::constant(0.0, n);
    for (int i = f.order(); i >= 0; --i) {
        Jet1 row = Jet1::constant(0.0, n);
        for (int j = f.order() - i; j >= 0; --j) {
            row = row * q;
            row.at(0) += f(i, j);
        }
        acc = acc * p + row;
    }
    return acc;
}

/// Full bivariate substitution f(p(U,V), q(U,V)) with origin-preserving p, q.
inline Jet2 jet_substitute(const Jet2& f, const Jet2& p, const Jet2& q)
{
    assert(std::abs(p(0, 0)) == 0.0 && std::abs(q(0, 0)) == 0.0);
    const int n = std::max({f.order(), p.order(), q.order()});
    Jet2 acc = Jet2::constant(0.0, n);
    for (int i = f.order(); i >= 0; --i) {
        Jet2 row = Jet2::constant(0.0, n);
        for (int j = f.order() - i; j >= 0; --j) {
            row = row * q;
            row.ref(0, 0) += f(i, j);
        }
        acc = acc * p + row;
    }
    return acc;
}

/// Inverse of an origin-preserving jet map (p, q) with invertible linear
/// part: returns (P, Q) with p(P,Q) = U, q(P,Q) = V through the truncation
/// order. Newton iteration with the jet-valued Jacobian.
inline std::pair<Jet2, Jet2> jet_invert_map(const Jet2& p, const Jet2& q)
{
    const int n = std::max(p.order(), q.order());
    const double a = p(1, 0), b = p(0, 1), c = q(1, 0), d = q(0, 1);
    const double det = a * d - b * c;
    if (std::abs(det) <= tolerances{}.tol_zero)
        fail(errc::domain_violation, "jet map has singular linear part");
    const Jet2 idu = Jet2::variable(axis::u, 0.0, n);
    const Jet2 idv = Jet2::variable(axis::v, 0.0, n);
    // linear-part inverse as the seed
    Jet2 big_p = (d * idu - b * idv) / det;
    Jet2 big_q = (a * idv - c * idu) / det;
    int steps = 1;
    for (int reached = 1; reached < n; reached *= 2) ++steps;
    for (int it = 0; it < steps + 1; ++it) {
        const Jet2 ru = jet_substitute(p, big_p, big_q) - idu;
        const Jet2 rv = jet_substitute(q, big_p, big_q) - idv;
        const Jet2 ju = jet_substitute(jet_partial(p, axis::u).truncated(n), big_p, big_q);
        const Jet2 jv = jet_substitute(jet_partial(p, axis::v).truncated(n), big_p, big_q);
        const Jet2 ku = jet_substitute(jet_partial(q, axis::u).truncated(n), big_p, big_q);
        const Jet2 kv = jet_substitute(jet_partial(q, axis::v).truncated(n), big_p, big_q);
        const Jet2 jac_det = ju * kv - jv * ku;
        big_p = big_p - (kv * ru - jv * rv) / jac_det;
        big_q = big_q - (ju * rv - ku * ru) / jac_det;
    }
    return {big_p, big_q};
}

/// Exact binomial re-expansion around a shifted base point (du, dv).
inline Jet2 jet_shift(const Jet2& g, double du, double dv)
{
    const int n = g.order();
    Jet2 r(n);
    std::vector<std::vector<double>> bu(static_cast<size_t>(n) + 1), bv(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        // (x + d)^k coefficients: C(k,m) d^(k-m)
        bu[static_cast<size_t>(k)].resize(static_cast<size_t>(k) + 1);
        bv[static_cast<size_t>(k)].resize(static_cast<size_t>(k) + 1);
        double cu = 1.0, cv = 1.0;
        for (int m = k; m >= 0; --m) {
            bu[static_cast<size_t>(k)][static_cast<size_t>(m)] = cu;
            bv[static_cast<size_t>(k)][static_cast<size_t>(m)] = cv;
            cu = cu * m / (k - m + 1) * du;
            cv = cv * m / (k - m + 1) * dv;
        }
    }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            const double x = g(i, j);
            if (x == 0.0) continue;
            for (int p2 = 0; p2 <= i; ++p2)
                for (int q2 = 0; q2 <= j; ++q2)
                    r.ref(p2, q2) += x * bu[static_cast<size_t>(i)][static_cast<size_t>(p2)] *
                                     bv[static_cast<size_t>(j)][static_cast<size_t>(q2)];
        }
    return r;
}

namespace detail {

inline Jet2 taylor_apply(const Jet2& a, const std::vector<double>& derivs)
{
    const int n = a.order();
    Jet2 da = a;
    da.ref(0, 0) = 0.0;
    Jet2 acc = Jet2::constant(0.0, n);
    double fact = 1.0;
    for (int k = 1; k <= n; ++k) fact *= k;
    for (int k = n; k >= 0; --k) {
        acc = acc * da;
        acc.ref(0, 0) += derivs[static_cast<size_t>(k)] / fact;
        if (k > 0) fact /= k;
    }
    return acc;
}

} // namespace detail

inline Jet2 sqrt(const Jet2& a)
{
    const double a0 = a(0, 0);
    if (a0 <= tolerances{}.tol_zero) fail(errc::domain_violation, "sqrt needs positive constant term");
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

inline Jet2 exp(const Jet2& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1, std::exp(a(0, 0)));
    return detail::taylor_apply(a, d);
}

inline Jet2 log(const Jet2& a)
{
    const double a0 = a(0, 0);
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

inline Jet2 sin(const Jet2& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    const double s = std::sin(a(0, 0));
    const double c = std::cos(a(0, 0));
    const double cyc[4] = {s, c, -s, -c};
    for (int k = 0; k <= a.order(); ++k) d[static_cast<size_t>(k)] = cyc[k % 4];
    return detail::taylor_apply(a, d);
}

inline Jet2 cos(const Jet2& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    const double s = std::sin(a(0, 0));
    const double c = std::cos(a(0, 0));
    const double cyc[4] = {c, -s, -c, s};
    for (int k = 0; k <= a.order(); ++k) d[static_cast<size_t>(k)] = cyc[k % 4];
    return detail::taylor_apply(a, d);
}

inline Jet2 sinh(const Jet2& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    const double s = std::sinh(a(0, 0));
    const double c = std::cosh(a(0, 0));
    for (int k = 0; k <= a.order(); ++k) d[static_cast<size_t>(k)] = (k % 2 == 0) ? s : c;
    return detail::taylor_apply(a, d);
}

inline Jet2 cosh(const Jet2& a)
{
    std::vector<double> d(static_cast<size_t>(a.order()) + 1);
    const double s = std::sinh(a(0, 0));
    const double c = std::cosh(a(0, 0));
    for (int k = 0; k <= a.order(); ++k) d[static_cast<size_t>(k)] = (k % 2 == 0) ? c : s;
    return detail::taylor_apply(a, d);
}

inline Jet2 powi(const Jet2& a, int e)
{
    if (e < 0) return Jet2::constant(1.0, a.order()) / powi(a, -e);
    Jet2 r = Jet2::constant(1.0, a.order());
    Jet2 base = a;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * base;
        base = base * base;
    }
    return r;
}

inline Jet2 pow(const Jet2& a, double e)
{
    if (e == static_cast<double>(static_cast<int>(e)) && std::abs(e) < 64)
        return powi(a, static_cast<int>(e));
    const double a0 = a(0, 0);
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

/// Antiderivative in one variable with zero value on the complementary axis.
inline Jet2 jet_antiderivative(const Jet2& g, axis ax)
{
    Jet2 r(g.order() + 1);
    for (int i = 0; i <= g.order(); ++i)
        for (int j = 0; i + j <= g.order(); ++j) {
            if (ax == axis::u)
                r.ref(i + 1, j) = g(i, j) / (i + 1);
            else
                r.ref(i, j + 1) = g(i, j) / (j + 1);
        }
    return r;
}

} // namespace cusplab
