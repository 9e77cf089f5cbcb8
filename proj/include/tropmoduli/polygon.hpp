#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmoduli/geometry.hpp"

namespace tropmoduli {

/**
 * Convex polygon with integer vertices (a Newton polygon).
 *
 * Construction accepts any point list: the convex hull is computed and
 * non-two-dimensional input is rejected. Vertices are stored strictly convex
 * (no three consecutive collinear), counterclockwise, starting at the
 * lexicographically smallest vertex. Immutable after construction.
 */
class LatticePolygon {
  public:
    explicit LatticePolygon(const std::vector<LatticePoint>& points);

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    // Twice the enclosed area (shoelace); always a positive integer.
    Int doubled_area() const;

    bool contains(const LatticePoint& p) const;          // closed region
    bool contains_interior(const LatticePoint& p) const; // open region
    bool on_boundary(const LatticePoint& p) const;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
    friend auto operator<=>(const LatticePolygon& a, const LatticePolygon& b)
    {
        return a.verts_ <=> b.verts_;
    }

  private:
    std::vector<LatticePoint> verts_;
};

// Convex polygon with rational vertices, e.g. a relaxed polygon that left the
// lattice. Same normalization as LatticePolygon.
class RationalPolygon {
  public:
    explicit RationalPolygon(const std::vector<RatPoint>& points);

    const std::vector<RatPoint>& vertices() const { return verts_; }
    bool contains(const RatPoint& p) const;

    // All vertices integral?
    bool is_lattice() const;
    LatticePolygon to_lattice() const;

    friend bool operator==(const RationalPolygon&, const RationalPolygon&) = default;

  private:
    std::vector<RatPoint> verts_;
};

// Convex hull of the interior lattice points, with its dimension made
// explicit. Degenerate hulls are ordinary values, not errors: the
// hyperelliptic pipeline consumes them.
struct InteriorHull {
    enum class Kind { empty, point, segment, polygon };
    Kind kind = Kind::empty;
    // Hull vertices: 0, 1, 2 or >= 3 entries according to kind. For a
    // segment these are the two endpoints; every interior lattice point lies
    // on the closed segment between them.
    std::vector<LatticePoint> points;

    const LatticePolygon& polygon() const;

  private:
    friend InteriorHull interior_hull(const LatticePolygon&);
    mutable std::optional<LatticePolygon> poly_;
};

// --- point sets and counts ---------------------------------------------

// All lattice points in the closed polygon, in lexicographic order.
std::vector<LatticePoint> lattice_points(const LatticePolygon& P);

// Number of interior lattice points.
Int genus(const LatticePolygon& P);

// Number of lattice points on the boundary; equals the sum of the lattice
// lengths of the edges.
Int boundary_point_count(const LatticePolygon& P);

std::vector<LatticePoint> interior_points(const LatticePolygon& P);
std::vector<LatticePoint> boundary_points(const LatticePolygon& P);

InteriorHull interior_hull(const LatticePolygon& P);

// True iff all interior points are collinear (degenerate interior hull).
// Requires genus >= 1; the classification is undefined for genus 0.
bool is_hyperelliptic(const LatticePolygon& P);

// --- relaxation and maximality -------------------------------------------

// Push every edge half-plane a x + b y <= c (primitive integer data) out to
// c + 1 and intersect; redundant half-planes are dropped. The result need
// not be a lattice polygon.
RationalPolygon relaxed_polygon(const LatticePolygon& Q);

// P is maximal iff it equals the relaxed polygon of its interior hull.
// Rejects hyperelliptic input: the relaxation of a degenerate hull is not
// defined here.
bool is_maximal(const LatticePolygon& P);

// --- unimodular equivalence ------------------------------------------------

LatticePolygon apply_unimodular(const LatticePolygon& P, const UnimodularMap& t);
RationalPolygon apply_unimodular(const RationalPolygon& P, const UnimodularMap& t);

struct NormalFormResult {
    LatticePolygon polygon;
    UnimodularMap map;  // map(P) == polygon
};

// Canonical representative of the unimodular equivalence class:
// normal_form(t(P)) == normal_form(P) for every unimodular t. The
// representative minimizes the cyclic edge-vector sequence over all
// edge-aligned unimodular frames, with the least vertex translated to the
// origin.
NormalFormResult normal_form(const LatticePolygon& P);

// --- text formats -----------------------------------------------------------

// Accepts either the literal `x1,y1 x2,y2 ...` or the JSON document
// {"vertices": [[x,y], ...]}.
LatticePolygon parse_polygon(const std::string& text);
std::string polygon_literal(const LatticePolygon& P);

}  // namespace tropmoduli
