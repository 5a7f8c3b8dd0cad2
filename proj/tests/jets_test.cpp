#include <gtest/gtest.h>

#include <cmath>

#include "cusplab/jet1.hpp"
#include "cusplab/jet2.hpp"
#include "cusplab/jetvec.hpp"
#include "cusplab/rng.hpp"

namespace cusplab {
namespace {

Jet1 poly1(std::vector<double> c) { return Jet1::from_coeffs(std::move(c)); }

void expect_jet_near(const Jet1& a, const Jet1& b, double tol)
{
    ASSERT_EQ(a.order(), b.order());
    for (int k = 0; k <= a.order(); ++k) EXPECT_NEAR(a[k], b[k], tol) << "coeff " << k;
}

void expect_jet_near(const Jet2& a, const Jet2& b, double tol)
{
    ASSERT_EQ(a.order(), b.order());
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; i + j <= a.order(); ++j)
            EXPECT_NEAR(a(i, j), b(i, j), tol) << "coeff " << i << "," << j;
}

Jet1 random_jet1(rng& r, int order, double lo = -2.0, double hi = 2.0)
{
    Jet1 j(order);
    for (int k = 0; k <= order; ++k) j.at(k) = r.uniform(lo, hi);
    return j;
}

Jet2 random_jet2(rng& r, int order, double lo = -2.0, double hi = 2.0)
{
    Jet2 j(order);
    for (int i = 0; i <= order; ++i)
        for (int k = 0; i + k <= order; ++k) j.ref(i, k) = r.uniform(lo, hi);
    return j;
}

TEST(Jet1Algebra, OneMinusTSquared)
{
    const Jet1 a = poly1({1, 1, 0});
    const Jet1 b = poly1({1, -1, 0});
    expect_jet_near(a * b, poly1({1, 0, -1}), 0);
}

TEST(Jet1Algebra, SelfDivisionIsOne)
{
    const Jet1 a = poly1({1, 1, 0, 0});
    expect_jet_near(a / a, poly1({1, 0, 0, 0}), 0);
}

TEST(Jet1Algebra, HandExpandedProduct)
{
    // (2+t)(3+t^2) = 6 + 3t + 2t^2 + t^3
    const Jet1 a = poly1({2, 1, 0, 0});
    const Jet1 b = poly1({3, 0, 1, 0});
    expect_jet_near(a * b, poly1({6, 3, 2, 1}), 0);
}

TEST(Jet1Algebra, DivisionByNearZeroThrows)
{
    const Jet1 a = poly1({1, 1});
    const Jet1 b = poly1({0, 1});
    EXPECT_THROW(a / b, error);
}

TEST(Jet1Elementary, SqrtOfPerfectSquare)
{
    const Jet1 a = poly1({1, 2, 1});
    expect_jet_near(sqrt(a), poly1({1, 1, 0}), 1e-14);
}

TEST(Jet1Elementary, ExpSeries)
{
    const Jet1 t = Jet1::variable(0.0, 3);
    expect_jet_near(exp(t), poly1({1, 1, 0.5, 1.0 / 6}), 1e-15);
}

TEST(Jet1Elementary, RationalPower)
{
    // (4+t)^(5/2) = 32 + 20 t + O(t^2)
    const Jet1 a = poly1({4, 1});
    const Jet1 p = pow(a, 2.5);
    EXPECT_NEAR(p[0], 32.0, 1e-12);
    EXPECT_NEAR(p[1], 20.0, 1e-12);
}

TEST(Jet1Elementary, DomainViolationAtConstantTerm)
{
    EXPECT_THROW(sqrt(poly1({-1, 1})), error);
    EXPECT_THROW(log(poly1({0, 1})), error);
    EXPECT_THROW(pow(poly1({-2, 1}), 0.5), error);
}

TEST(Jet1Antiderivative, SpecExamples)
{
    expect_jet_near(jet_antiderivative(poly1({1})), poly1({0, 1}), 0);
    expect_jet_near(jet_antiderivative(poly1({0, 0, 1})), poly1({0, 0, 0, 1.0 / 3}), 0);
    expect_jet_near(jet_antiderivative(poly1({1, 2, 3})), poly1({0, 1, 1, 1}), 0);
}

TEST(Jet1Antiderivative, DerivativeRoundTrip)
{
    rng r(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Jet1 g = random_jet1(r, 9);
        expect_jet_near(jet_derivative(jet_antiderivative(g)), g, 0);
    }
}

TEST(Jet1Compose, PolynomialSubstitution)
{
    // f(x) = 1 + x^2, g(t) = t + t^2 -> f(g) = 1 + t^2 + 2t^3 + t^4
    const Jet1 f = poly1({1, 0, 1, 0, 0});
    const Jet1 g = poly1({0, 1, 1, 0, 0});
    expect_jet_near(jet_compose(f, g), poly1({1, 0, 1, 2, 1}), 1e-14);
}

TEST(Jet1Revert, RoundTrip)
{
    rng r(11);
    for (int trial = 0; trial < 20; ++trial) {
        // arc-length-style series: unit-scale slope, mild higher terms
        Jet1 s = random_jet1(r, 8, -0.4, 0.4);
        s.at(0) = 0.0;
        s.at(1) = r.uniform(0.8, 1.25);
        const Jet1 t = jet_revert(s);
        const Jet1 id = jet_compose(s, t);
        expect_jet_near(id, Jet1::variable(0.0, 8), 1e-10);
    }
}

TEST(Jet1Shift, MatchesEvaluation)
{
    rng r(13);
    const Jet1 g = random_jet1(r, 7);
    const Jet1 h = jet_shift(g, 0.25);
    for (double t : {-0.1, 0.0, 0.2}) EXPECT_NEAR(h.eval(t), g.eval(0.25 + t), 1e-12);
}

TEST(Jet2Partial, SpecExamples)
{
    Jet2 v2(5);
    v2.ref(0, 2) = 1.0;
    const Jet2 dv = jet_partial(v2, axis::v);
    EXPECT_DOUBLE_EQ(dv(0, 1), 2.0);

    Jet2 uv5(6);
    uv5.ref(1, 0) = 1.0;
    uv5.ref(0, 5) = 1.0;
    const Jet2 d2 = jet_partial(uv5, axis::v, 2);
    EXPECT_DOUBLE_EQ(d2(0, 3), 20.0);

    Jet2 uv(3);
    uv.ref(1, 1) = 1.0;
    const Jet2 duv = jet_partial(jet_partial(uv, axis::u), axis::v);
    EXPECT_DOUBLE_EQ(duv(0, 0), 1.0);
}

TEST(Jet2Divide, SpecExamples)
{
    Jet2 a(4);
    a.ref(0, 2) = 1.0;
    a.ref(1, 2) = 1.0;
    const Jet2 q = jet_divide_by_coordinate(a, axis::v, 2);
    EXPECT_DOUBLE_EQ(q(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(q(1, 0), 1.0);

    Jet2 lam2(6);
    lam2.ref(0, 2) = 4.0;
    lam2.ref(0, 4) = 9.0;
    const Jet2 q2 = jet_divide_by_coordinate(lam2, axis::v, 2);
    EXPECT_DOUBLE_EQ(q2(0, 0), 4.0);
    EXPECT_DOUBLE_EQ(q2(0, 2), 9.0);

    Jet2 bad(3);
    bad.ref(0, 1) = 1.0;
    EXPECT_THROW(jet_divide_by_coordinate(bad, axis::v, 2), error);
}

TEST(Jet2Divide, MultiplyBackIsExact)
{
    rng r(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Jet2 a = random_jet2(r, 5);
        Jet2 v(7);
        v.ref(0, 1) = 1.0;
        const Jet2 av2 = a * v * v;
        const Jet2 back = jet_divide_by_coordinate(av2, axis::v, 2);
        for (int i = 0; i <= 5; ++i)
            for (int j = 0; i + j <= 5; ++j) EXPECT_DOUBLE_EQ(back(i, j), a(i, j));
    }
}

TEST(Jet2Ring, Distributivity)
{
    rng r(19);
    for (int trial = 0; trial < 20; ++trial) {
        const Jet2 a = random_jet2(r, 6);
        const Jet2 b = random_jet2(r, 6);
        const Jet2 c = random_jet2(r, 6);
        const Jet2 lhs = (a + b) * c;
        const Jet2 rhs = a * c + b * c;
        const double scale = std::max(1.0, lhs.max_abs_coeff());
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; i + j <= 6; ++j) EXPECT_NEAR(lhs(i, j), rhs(i, j), 1e-12 * scale);
    }
}

TEST(Jet2Elementary, ExpLogRoundTrip)
{
    rng r(23);
    for (int trial = 0; trial < 20; ++trial) {
        Jet2 a = random_jet2(r, 6);
        a.ref(0, 0) = r.uniform(0.5, 3.0);
        const Jet2 back = exp(log(a));
        const double scale = std::max(1.0, a.max_abs_coeff());
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; i + j <= 6; ++j) EXPECT_NEAR(back(i, j), a(i, j), 1e-10 * scale);
    }
}

TEST(Jet2Elementary, TrigIdentity)
{
    rng r(29);
    Jet2 a = random_jet2(r, 6);
    const Jet2 one = sin(a) * sin(a) + cos(a) * cos(a);
    EXPECT_NEAR(one(0, 0), 1.0, 1e-12);
    for (int i = 0; i <= 6; ++i)
        for (int j = (i == 0 ? 1 : 0); i + j <= 6; ++j) EXPECT_NEAR(one(i, j), 0.0, 1e-11);
}

TEST(Jet2Substitute, AgreesWithEvaluation)
{
    rng r(31);
    const Jet2 f = random_jet2(r, 6);
    Jet2 p = random_jet2(r, 6, -0.5, 0.5);
    Jet2 q = random_jet2(r, 6, -0.5, 0.5);
    p.ref(0, 0) = 0.0;
    q.ref(0, 0) = 0.0;
    const Jet2 comp = jet_substitute(f, p, q);
    // low-degree coefficients of the composition are exact; compare a few
    // directional derivatives numerically via evaluation at small offsets
    for (double u : {0.01, -0.02})
        for (double v : {0.015, -0.01})
            EXPECT_NEAR(comp.eval(u, v), f.eval(p.eval(u, v), q.eval(u, v)), 1e-8);
}

TEST(Jet2Shift, MatchesEvaluation)
{
    rng r(37);
    const Jet2 g = random_jet2(r, 6);
    const Jet2 h = jet_shift(g, 0.3, -0.2);
    for (double u : {-0.1, 0.05})
        for (double v : {0.0, 0.1}) EXPECT_NEAR(h.eval(u, v), g.eval(0.3 + u, -0.2 + v), 1e-11);
}

TEST(JetVec, CrossAndDet)
{
    const int n = 3;
    Surface3 f;
    f[0] = Jet2::variable(axis::u, 0.0, n);
    f[1] = Jet2::variable(axis::v, 0.0, n);
    f[2] = Jet2::constant(0.0, n);
    const Surface3 fu = partial(f, axis::u);
    const Surface3 fv = partial(f, axis::v);
    const JetVec<Jet2, 3> c = cross(fu, fv);
    EXPECT_DOUBLE_EQ(c[2](0, 0), 1.0);
    EXPECT_DOUBLE_EQ(det3(fu, fv, c)(0, 0), 1.0);
}

} // namespace
} // namespace cusplab
