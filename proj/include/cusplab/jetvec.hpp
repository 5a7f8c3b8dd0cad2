#pragma once

#include <array>
#include <cmath>

#include "cusplab/jet1.hpp"
#include "cusplab/jet2.hpp"

namespace cusplab {

/// Small fixed-size vector of jets; the carrier for map-germ components.
template <class J, int D>
struct JetVec {
    std::array<J, D> c{};

    J& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const J& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    friend JetVec operator+(const JetVec& a, const JetVec& b)
    {
        JetVec r;
        for (int i = 0; i < D; ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend JetVec operator-(const JetVec& a, const JetVec& b)
    {
        JetVec r;
        for (int i = 0; i < D; ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend JetVec operator-(const JetVec& a)
    {
        JetVec r;
        for (int i = 0; i < D; ++i) r[i] = -a[i];
        return r;
    }
    friend JetVec operator*(const J& s, const JetVec& a)
    {
        JetVec r;
        for (int i = 0; i < D; ++i) r[i] = s * a[i];
        return r;
    }
    friend JetVec operator*(double s, const JetVec& a)
    {
        JetVec r;
        for (int i = 0; i < D; ++i) r[i] = a[i] * s;
        return r;
    }
    friend JetVec operator/(const JetVec& a, const J& s)
    {
        JetVec r;
        for (int i = 0; i < D; ++i) r[i] = a[i] / s;
        return r;
    }
};

using Curve2 = JetVec<Jet1, 2>;
using Curve3 = JetVec<Jet1, 3>;
using Surface3 = JetVec<Jet2, 3>;

template <class J, int D>
J dot(const JetVec<J, D>& a, const JetVec<J, D>& b)
{
    J acc = a[0] * b[0];
    for (int i = 1; i < D; ++i) acc = acc + a[i] * b[i];
    return acc;
}

template <class J>
JetVec<J, 3> cross(const JetVec<J, 3>& a, const JetVec<J, 3>& b)
{
    JetVec<J, 3> r;
    r[0] = a[1] * b[2] - a[2] * b[1];
    r[1] = a[2] * b[0] - a[0] * b[2];
    r[2] = a[0] * b[1] - a[1] * b[0];
    return r;
}

template <class J>
J det2(const JetVec<J, 2>& a, const JetVec<J, 2>& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

template <class J>
J det3(const JetVec<J, 3>& a, const JetVec<J, 3>& b, const JetVec<J, 3>& c)
{
    return dot(cross(a, b), c);
}

template <class J, int D>
J norm(const JetVec<J, D>& a)
{
    return sqrt(dot(a, a));
}

/// Componentwise u/v partial of a surface germ.
inline Surface3 partial(const Surface3& f, axis ax, int times = 1)
{
    Surface3 r;
    for (int i = 0; i < 3; ++i) r[i] = jet_partial(f[i], ax, times);
    return r;
}

inline Curve2 derivative(const Curve2& g, int times = 1)
{
    Curve2 r = g;
    for (int t = 0; t < times; ++t)
        for (int i = 0; i < 2; ++i) r[i] = jet_derivative(r[i]);
    return r;
}

inline Curve3 derivative(const Curve3& g, int times = 1)
{
    Curve3 r = g;
    for (int t = 0; t < times; ++t)
        for (int i = 0; i < 3; ++i) r[i] = jet_derivative(r[i]);
    return r;
}

/// Restriction of each component to the given axis.
inline Curve3 on_axis(const Surface3& f, axis ax)
{
    Curve3 r;
    for (int i = 0; i < 3; ++i) r[i] = f[i].on_axis(ax);
    return r;
}

inline Curve3 substitute(const Surface3& f, const Jet1& p, const Jet1& q)
{
    Curve3 r;
    for (int i = 0; i < 3; ++i) r[i] = jet_substitute(f[i], p, q);
    return r;
}

inline Surface3 substitute(const Surface3& f, const Jet2& p, const Jet2& q)
{
    Surface3 r;
    for (int i = 0; i < 3; ++i) r[i] = jet_substitute(f[i], p, q);
    return r;
}

/// Plain numeric 3-vectors for frames and sampled points.
struct Vec3 {
    double x = 0, y = 0, z = 0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a)
{
    const double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

/// Value of a jet-vector at the base point.
inline Vec3 value(const Curve3& g) { return {g[0].value(), g[1].value(), g[2].value()}; }
inline Vec3 value(const Surface3& f) { return {f[0].value(), f[1].value(), f[2].value()}; }

} // namespace cusplab
