#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "tropmoduli/base.hpp"

namespace tropmoduli {

struct LatticePoint {
    Int x{};
    Int y{};

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    // Lexicographic by x, then y; this is the deterministic point order used
    // throughout (point lists, triangulation indices, ...).
    friend auto operator<=>(const LatticePoint& a, const LatticePoint& b)
    {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator-() const { return {-x, -y}; }
    LatticePoint operator*(Int c) const { return {x * c, y * c}; }
};

using LatticeVec = LatticePoint;

inline Int cross(const LatticeVec& a, const LatticeVec& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const LatticeVec& a, const LatticeVec& b) { return a.x * b.x + a.y * b.y; }

// Orientation of the triangle (a, b, c): >0 counterclockwise, 0 collinear.
inline Int orient(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c)
{
    return cross(b - a, c - a);
}

inline LatticeVec primitive(const LatticeVec& v)
{
    Int g = gcd_int(v.x, v.y);
    return g == 0 ? v : LatticeVec{v.x / g, v.y / g};
}

struct RatPoint {
    Rat x{};
    Rat y{};

    friend bool operator==(const RatPoint&, const RatPoint&) = default;
    friend bool operator<(const RatPoint& a, const RatPoint& b)
    {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    RatPoint operator+(const RatPoint& o) const { return {x + o.x, y + o.y}; }
    RatPoint operator-(const RatPoint& o) const { return {x - o.x, y - o.y}; }
};

inline Rat cross(const RatPoint& a, const RatPoint& b) { return a.x * b.y - a.y * b.x; }

inline RatPoint to_rat(const LatticePoint& p) { return {Rat(p.x), Rat(p.y)}; }

// Affine map p |-> A p + t with det(A) = +/-1; sends Z^2 onto Z^2.
struct UnimodularMap {
    // Row-major matrix entries.
    Int a{1}, b{0}, c{0}, d{1};
    Int tx{0}, ty{0};

    UnimodularMap() = default;
    UnimodularMap(Int a_, Int b_, Int c_, Int d_, Int tx_ = 0, Int ty_ = 0)
        : a(a_), b(b_), c(c_), d(d_), tx(tx_), ty(ty_)
    {
        if (det() != 1 && det() != -1)
            throw input_error("unimodular map must have determinant +1 or -1");
    }

    Int det() const { return a * d - b * c; }

    LatticePoint operator()(const LatticePoint& p) const
    {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }
    RatPoint operator()(const RatPoint& p) const
    {
        return {Rat(a) * p.x + Rat(b) * p.y + tx, Rat(c) * p.x + Rat(d) * p.y + ty};
    }
    LatticeVec linear(const LatticeVec& v) const
    {
        return {a * v.x + b * v.y, c * v.x + d * v.y};
    }

    // this after other: (this o other)(p) = this(other(p)).
    UnimodularMap compose(const UnimodularMap& o) const
    {
        UnimodularMap r;
        r.a = a * o.a + b * o.c;
        r.b = a * o.b + b * o.d;
        r.c = c * o.a + d * o.c;
        r.d = c * o.b + d * o.d;
        LatticePoint t = (*this)(LatticePoint{o.tx, o.ty});
        r.tx = t.x;
        r.ty = t.y;
        return r;
    }

    UnimodularMap inverse() const
    {
        // adjugate / det with det = +/-1 keeps entries integral
        Int dt = det();
        UnimodularMap r;
        r.a = d * dt;
        r.b = -b * dt;
        r.c = -c * dt;
        r.d = a * dt;
        LatticeVec t = r.linear(LatticeVec{tx, ty});
        r.tx = -t.x;
        r.ty = -t.y;
        return r;
    }

    static UnimodularMap translation(Int tx, Int ty) { return UnimodularMap(1, 0, 0, 1, tx, ty); }
    static UnimodularMap shear_x_by_y(Int t) { return UnimodularMap(1, t, 0, 1); }

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

// Line segment with rational endpoints (and therefore rational slope).
struct Segment {
    RatPoint a;
    RatPoint b;

    Segment(RatPoint a_, RatPoint b_) : a(std::move(a_)), b(std::move(b_))
    {
        if (a == b) throw input_error("segment endpoints must be distinct");
    }
    Segment(const LatticePoint& p, const LatticePoint& q) : Segment(to_rat(p), to_rat(q)) {}
};

// Lattice length: for lattice endpoints, one less than the number of lattice
// points on the segment; extended to rational segments by the scaling rule
// l(lambda S) = lambda l(S). Invariant under unimodular maps and translation.
Rat lattice_length(const Segment& s);

// Number of lattice points on the closed segment between two lattice points,
// minus one (gcd of the coordinate differences).
inline Int lattice_length_int(const LatticePoint& p, const LatticePoint& q)
{
    return gcd_int(q.x - p.x, q.y - p.y);
}

}  // namespace tropmoduli

template <>
struct std::hash<tropmoduli::LatticePoint> {
    size_t operator()(const tropmoduli::LatticePoint& p) const
    {
        return std::hash<long long>()(p.x * 1000003LL + p.y);
    }
};
