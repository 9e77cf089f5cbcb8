#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tropmoduli/linalg.hpp"
#include "tropmoduli/polygon.hpp"

namespace tropmoduli {

/**
 * A triangulation of the convex hull of a point set. Points are stored in
 * lexicographic order; triangles as sorted index triples, the triangle list
 * itself sorted. The constructor checks that the triangles form a valid
 * cover: non-degenerate, pairwise interior-disjoint, union equal to the
 * hull. Unimodularity and fineness are separate predicates, so that
 * non-unimodular covers remain representable.
 */
class Triangulation {
  public:
    Triangulation(std::vector<LatticePoint> points, std::vector<std::array<int, 3>> triangles);

    const std::vector<LatticePoint>& points() const { return pts_; }
    const std::vector<std::array<int, 3>>& triangles() const { return tris_; }
    const LatticePolygon& hull() const;

    int point_index(const LatticePoint& p) const;  // -1 if absent

    // Every point is used and the point set is all of hull() /\ Z^2.
    bool is_fine() const;

    friend bool operator==(const Triangulation& a, const Triangulation& b)
    {
        return a.pts_ == b.pts_ && a.tris_ == b.tris_;
    }
    friend auto operator<=>(const Triangulation& a, const Triangulation& b)
    {
        if (auto c = a.pts_ <=> b.pts_; c != 0) return c;
        return a.tris_ <=> b.tris_;
    }

    // Fast path for internally generated, already-valid data.
    static Triangulation unchecked(std::vector<LatticePoint> points,
                                   std::vector<std::array<int, 3>> triangles);

  private:
    Triangulation() = default;
    void normalize();

    std::vector<LatticePoint> pts_;
    std::vector<std::array<int, 3>> tris_;
    mutable std::optional<LatticePolygon> hull_;
};

// 1-cells of a triangulation, split into interior and boundary edges.
// Interior edges carry their two incident triangles and opposite apexes.
struct TriangulationEdges {
    struct Interior {
        int a, b;          // endpoint indices, a < b
        int tri[2];        // incident triangle indices
        int apex[2];       // opposite vertex in tri[0] / tri[1]
    };
    struct Boundary {
        int a, b;
        int tri;
    };
    std::vector<Interior> interior;
    std::vector<Boundary> boundary;
};

TriangulationEdges edges(const Triangulation& T);

// True iff every triangle has lattice area 1/2.
bool is_unimodular(const Triangulation& T);

struct EnumerationOptions {
    std::size_t max_points = 16;
    std::uint64_t max_triangulations = 1000000;
};

// Visits every fine unimodular triangulation of P exactly once, in a
// deterministic order (frontier-edge extension with canonical branching).
// The callback may return false to stop early. Returns the number of
// triangulations visited. Throws cap_exceeded when a cap is hit.
std::uint64_t enumerate_unimodular_triangulations(
    const LatticePolygon& P, const EnumerationOptions& opt,
    const std::function<bool(const Triangulation&)>& visit);

// Convenience: all triangulations in canonical (sorted) order.
std::vector<Triangulation> all_unimodular_triangulations(const LatticePolygon& P,
                                                         const EnumerationOptions& opt = {});

// Completes a partial subdivision (a crossing-free edge set on lattice
// points of P; edges may pass through lattice points and are split there)
// to a fine unimodular triangulation containing it. Deterministic.
Triangulation refine_to_unimodular(
    const LatticePolygon& P,
    const std::vector<std::pair<LatticePoint, LatticePoint>>& subdivision_edges);

// All triangulations reachable from T by one legal quadrilateral flip.
std::vector<Triangulation> legal_flips(const Triangulation& T);

// Rational lift of the lattice points of a triangulation, indexed like
// Triangulation::points().
struct HeightFunction {
    RatVec heights;

    Rat operator()(int i) const { return heights[i]; }
};

// One primitive integer fold inequality per interior edge; h satisfies all
// of them strictly exactly when the lower hull of the lift induces T.
struct FoldInequality {
    int edge_a, edge_b;       // the interior edge
    std::vector<Int> coeffs;  // dense functional over point indices
};

struct SecondaryCone {
    std::vector<FoldInequality> inequalities;

    bool strictly_contains(const HeightFunction& h) const;
};

SecondaryCone secondary_cone(const Triangulation& T);

struct RegularityResult {
    bool regular = false;
    HeightFunction witness;  // strictly inside the secondary cone when regular
    Rat slack;               // optimal fold slack with heights in [-1, 1]
};

// Exact LP: maximize the minimum fold slack over heights in [-1, 1].
// Regular iff the optimum is positive.
RegularityResult is_regular(const Triangulation& T);

}  // namespace tropmoduli
