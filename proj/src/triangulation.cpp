#include "tropmoduli/triangulation.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace tropmoduli {

namespace {

bool proper_cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                  const LatticePoint& d)
{
    // Both segments are primitive lattice segments that do not share an
    // endpoint; collinear partial overlap is impossible for those, so only
    // the transversal case remains.
    Int d1 = orient(a, b, c), d2 = orient(a, b, d);
    Int d3 = orient(c, d, a), d4 = orient(c, d, b);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
           ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// Shared precomputation for the enumerator and the refinement completion.
struct PointConfig {
    std::vector<LatticePoint> pts;
    int n = 0;
    std::vector<std::pair<int, int>> edge_of;     // by edge id, (i, j) with i < j
    std::vector<std::vector<int>> edge_id;        // n x n, -1 when not a usable edge
    int E = 0;
    int words = 0;
    std::vector<std::uint64_t> cross_mask;        // E x words
    std::vector<std::array<std::vector<int>, 2>> cand;  // apexes by (edge, side)
    std::vector<int> boundary_edges;              // edge ids along the hull
    std::vector<int> boundary_exterior_side;      // 0 = left of (i->j), 1 = right

    explicit PointConfig(const LatticePolygon& P) : pts(lattice_points(P))
    {
        n = static_cast<int>(pts.size());
        edge_id.assign(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (lattice_length_int(pts[i], pts[j]) == 1) {
                    edge_id[i][j] = edge_id[j][i] = E++;
                    edge_of.emplace_back(i, j);
                }
        words = (E + 63) / 64;
        cross_mask.assign(static_cast<std::size_t>(E) * words, 0);
        for (int e = 0; e < E; ++e) {
            auto [a, b] = edge_of[e];
            for (int f = e + 1; f < E; ++f) {
                auto [c, d] = edge_of[f];
                if (a == c || a == d || b == c || b == d) continue;
                if (proper_cross(pts[a], pts[b], pts[c], pts[d])) {
                    cross_mask[static_cast<std::size_t>(e) * words + f / 64] |= 1ULL << (f % 64);
                    cross_mask[static_cast<std::size_t>(f) * words + e / 64] |= 1ULL << (e % 64);
                }
            }
        }
        cand.resize(E);
        for (int e = 0; e < E; ++e) {
            auto [a, b] = edge_of[e];
            for (int c = 0; c < n; ++c) {
                Int o = orient(pts[a], pts[b], pts[c]);
                if (o == 1) cand[e][0].push_back(c);
                if (o == -1) cand[e][1].push_back(c);
            }
        }
        // Boundary edges: consecutive lattice points along the hull.
        const auto& hv = P.vertices();
        std::vector<LatticePoint> bpts;
        for (std::size_t i = 0; i < hv.size(); ++i) {
            LatticePoint u = hv[i], v = hv[(i + 1) % hv.size()];
            LatticeVec step = primitive(v - u);
            Int len = lattice_length_int(u, v);
            for (Int k = 0; k < len; ++k) {
                LatticePoint p = u + step * k, q = u + step * (k + 1);
                int ip = index_of(p), iq = index_of(q);
                int e = edge_id[ip][iq];
                boundary_edges.push_back(e);
                // interior lies to the left of the CCW boundary walk
                auto [x, y] = edge_of[e];
                bool walk_matches = (x == ip);
                boundary_exterior_side.push_back(walk_matches ? 1 : 0);
            }
        }
    }

    int index_of(const LatticePoint& p) const
    {
        auto it = std::lower_bound(pts.begin(), pts.end(), p);
        assert(it != pts.end() && *it == p);
        return static_cast<int>(it - pts.begin());
    }
};

struct Bitset {
    std::vector<std::uint64_t> w;
    explicit Bitset(int words) : w(words, 0) {}
    void set(int i) { w[i / 64] |= 1ULL << (i % 64); }
    void clear(int i) { w[i / 64] &= ~(1ULL << (i % 64)); }
    bool test(int i) const { return (w[i / 64] >> (i % 64)) & 1; }
};

bool mask_intersects(const std::vector<std::uint64_t>& mask, std::size_t offset,
                     const Bitset& present)
{
    for (std::size_t k = 0; k < present.w.size(); ++k)
        if (mask[offset + k] & present.w[k]) return true;
    return false;
}

class Enumerator {
  public:
    Enumerator(const LatticePolygon& P, const EnumerationOptions& opt,
               const std::function<bool(const Triangulation&)>& visit)
        : cfg_(P), opt_(opt), visit_(visit), present_(cfg_.words), filled_l_(cfg_.words),
          filled_r_(cfg_.words)
    {
        if (cfg_.pts.size() > opt.max_points)
            throw cap_exceeded("lattice point count " + std::to_string(cfg_.pts.size()) +
                               " exceeds cap " + std::to_string(opt.max_points));
        for (std::size_t k = 0; k < cfg_.boundary_edges.size(); ++k) {
            int e = cfg_.boundary_edges[k];
            present_.set(e);
            (cfg_.boundary_exterior_side[k] == 0 ? filled_l_ : filled_r_).set(e);
        }
    }

    std::uint64_t run()
    {
        dfs();
        return count_;
    }

  private:
    // Lowest-id present edge with exactly one side filled. The choice is a
    // function of the state alone, so each triangulation is derived along a
    // unique branch of the search tree.
    int next_pending() const
    {
        for (int k = 0; k < cfg_.words; ++k) {
            std::uint64_t wv = present_.w[k] & (filled_l_.w[k] ^ filled_r_.w[k]);
            if (wv) return k * 64 + __builtin_ctzll(wv);
        }
        return -1;
    }

    void dfs()
    {
        if (stop_) return;
        int e = next_pending();
        if (e < 0) {
            emit();
            return;
        }
        auto [a, b] = cfg_.edge_of[e];
        int side = filled_l_.test(e) ? 1 : 0;
        for (int c : cfg_.cand[e][side]) {
            if (try_place(a, b, c)) {
                dfs();
                undo_place();
                if (stop_) return;
            }
        }
    }

    struct Placement {
        int edges[3];
        bool was_present[3];
        bool side_left[3];
    };

    bool try_place(int a, int b, int c)
    {
        int vs[3][2] = {{a, b}, {a, c}, {b, c}};
        Placement pl;
        for (int k = 0; k < 3; ++k) {
            int u = std::min(vs[k][0], vs[k][1]), v = std::max(vs[k][0], vs[k][1]);
            int e = cfg_.edge_id[u][v];
            if (e < 0) return false;
            int other = a + b + c - u - v;
            bool left = orient(cfg_.pts[u], cfg_.pts[v], cfg_.pts[other]) > 0;
            if (present_.test(e)) {
                if ((left ? filled_l_ : filled_r_).test(e)) return false;
            } else {
                if (mask_intersects(cfg_.cross_mask, static_cast<std::size_t>(e) * cfg_.words,
                                    present_))
                    return false;
            }
            pl.edges[k] = e;
            pl.side_left[k] = left;
        }
        for (int k = 0; k < 3; ++k) {
            int e = pl.edges[k];
            pl.was_present[k] = present_.test(e);
            present_.set(e);
            (pl.side_left[k] ? filled_l_ : filled_r_).set(e);
        }
        placements_.push_back(pl);
        tris_.push_back({a, b, c});
        return true;
    }

    void undo_place()
    {
        const Placement& pl = placements_.back();
        for (int k = 0; k < 3; ++k) {
            int e = pl.edges[k];
            (pl.side_left[k] ? filled_l_ : filled_r_).clear(e);
            if (!pl.was_present[k]) present_.clear(e);
        }
        placements_.pop_back();
        tris_.pop_back();
    }

    void emit()
    {
        if (++count_ > opt_.max_triangulations)
            throw cap_exceeded("triangulation count exceeds cap " +
                               std::to_string(opt_.max_triangulations));
        std::vector<std::array<int, 3>> tris;
        tris.reserve(tris_.size());
        for (auto t : tris_) {
            std::sort(t.begin(), t.end());
            tris.push_back(t);
        }
        std::sort(tris.begin(), tris.end());
        if (!visit_(Triangulation::unchecked(cfg_.pts, std::move(tris)))) stop_ = true;
    }

    PointConfig cfg_;
    EnumerationOptions opt_;
    const std::function<bool(const Triangulation&)>& visit_;
    Bitset present_, filled_l_, filled_r_;
    std::vector<Placement> placements_;
    std::vector<std::array<int, 3>> tris_;
    std::uint64_t count_ = 0;
    bool stop_ = false;
};

}  // namespace

Triangulation::Triangulation(std::vector<LatticePoint> points,
                             std::vector<std::array<int, 3>> triangles)
{
    pts_ = std::move(points);
    tris_ = std::move(triangles);
    normalize();

    const int n = static_cast<int>(pts_.size());
    for (const auto& t : tris_) {
        for (int v : t)
            if (v < 0 || v >= n) throw input_error("triangle index out of range");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw input_error("degenerate triangle (repeated vertex)");
        if (orient(pts_[t[0]], pts_[t[1]], pts_[t[2]]) == 0)
            throw input_error("degenerate triangle (collinear vertices)");
    }
    for (std::size_t i = 1; i < tris_.size(); ++i)
        if (tris_[i] == tris_[i - 1]) throw input_error("duplicate triangle");

    // Pairwise interior-disjoint (separating axis over edge lines).
    auto overlap = [&](const std::array<int, 3>& s, const std::array<int, 3>& t) {
        auto separated_by_edge_of = [&](const std::array<int, 3>& e, const std::array<int, 3>& o) {
            for (int k = 0; k < 3; ++k) {
                const LatticePoint& a = pts_[e[k]];
                const LatticePoint& b = pts_[e[(k + 1) % 3]];
                Int self = orient(a, b, pts_[e[(k + 2) % 3]]);
                bool all_out = true;
                for (int v : o)
                    if (orient(a, b, pts_[v]) * (self > 0 ? 1 : -1) > 0) all_out = false;
                if (all_out) return true;
            }
            return false;
        };
        return !separated_by_edge_of(s, t) && !separated_by_edge_of(t, s);
    };
    for (std::size_t i = 0; i < tris_.size(); ++i)
        for (std::size_t j = i + 1; j < tris_.size(); ++j)
            if (overlap(tris_[i], tris_[j]))
                throw input_error("triangles overlap");

    // Total area must match the hull: with disjoint interiors this forces
    // the union to be the whole hull.
    Int area2 = 0;
    for (const auto& t : tris_) {
        Int o = orient(pts_[t[0]], pts_[t[1]], pts_[t[2]]);
        area2 += o > 0 ? o : -o;
    }
    if (area2 != hull().doubled_area()) throw input_error("triangles do not cover the hull");
}

void Triangulation::normalize()
{
    std::vector<LatticePoint> sorted = pts_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != pts_.size()) throw input_error("duplicate points in triangulation");
    if (sorted != pts_) {
        // remap triangle indices onto the sorted order
        std::vector<int> newindex(pts_.size());
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), pts_[i]);
            newindex[i] = static_cast<int>(it - sorted.begin());
        }
        for (auto& t : tris_)
            for (auto& v : t) v = newindex[v];
        pts_ = std::move(sorted);
    }
    for (auto& t : tris_) std::sort(t.begin(), t.end());
    std::sort(tris_.begin(), tris_.end());
}

Triangulation Triangulation::unchecked(std::vector<LatticePoint> points,
                                       std::vector<std::array<int, 3>> triangles)
{
    Triangulation t;
    t.pts_ = std::move(points);
    t.tris_ = std::move(triangles);
    return t;
}

const LatticePolygon& Triangulation::hull() const
{
    if (!hull_) hull_.emplace(pts_);
    return *hull_;
}

int Triangulation::point_index(const LatticePoint& p) const
{
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    if (it == pts_.end() || *it != p) return -1;
    return static_cast<int>(it - pts_.begin());
}

bool Triangulation::is_fine() const
{
    std::vector<char> used(pts_.size(), 0);
    for (const auto& t : tris_)
        for (int v : t) used[v] = 1;
    for (char u : used)
        if (!u) return false;
    return lattice_points(hull()) == pts_;
}

TriangulationEdges edges(const Triangulation& T)
{
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> inc;  // edge -> (tri, apex)
    const auto& tris = T.triangles();
    for (std::size_t ti = 0; ti < tris.size(); ++ti) {
        const auto& t = tris[ti];
        int pairs[3][3] = {{t[0], t[1], t[2]}, {t[0], t[2], t[1]}, {t[1], t[2], t[0]}};
        for (auto& pr : pairs)
            inc[{pr[0], pr[1]}].push_back({static_cast<int>(ti), pr[2]});
    }
    TriangulationEdges out;
    for (const auto& [e, ts] : inc) {
        if (ts.size() == 2) {
            TriangulationEdges::Interior ie;
            ie.a = e.first;
            ie.b = e.second;
            ie.tri[0] = ts[0].first;
            ie.tri[1] = ts[1].first;
            ie.apex[0] = ts[0].second;
            ie.apex[1] = ts[1].second;
            out.interior.push_back(ie);
        } else if (ts.size() == 1) {
            out.boundary.push_back({e.first, e.second, ts[0].first});
        } else {
            throw input_error("edge incident to more than two triangles");
        }
    }
    return out;
}

bool is_unimodular(const Triangulation& T)
{
    for (const auto& t : T.triangles()) {
        Int o = orient(T.points()[t[0]], T.points()[t[1]], T.points()[t[2]]);
        if (o != 1 && o != -1) return false;
    }
    return true;
}

std::uint64_t enumerate_unimodular_triangulations(
    const LatticePolygon& P, const EnumerationOptions& opt,
    const std::function<bool(const Triangulation&)>& visit)
{
    Enumerator e(P, opt, visit);
    return e.run();
}

std::vector<Triangulation> all_unimodular_triangulations(const LatticePolygon& P,
                                                         const EnumerationOptions& opt)
{
    std::vector<Triangulation> out;
    enumerate_unimodular_triangulations(P, opt, [&](const Triangulation& t) {
        out.push_back(t);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

Triangulation refine_to_unimodular(
    const LatticePolygon& P,
    const std::vector<std::pair<LatticePoint, LatticePoint>>& subdivision_edges)
{
    PointConfig cfg(P);
    Bitset present(cfg.words);

    // Split the input edges at lattice points, then pin them.
    std::vector<int> pinned;
    for (const auto& [p, q] : subdivision_edges) {
        if (!P.contains(p) || !P.contains(q))
            throw input_error("subdivision edge endpoint outside the polygon");
        if (p == q) throw input_error("degenerate subdivision edge");
        LatticeVec step = primitive(q - p);
        Int len = lattice_length_int(p, q);
        for (Int k = 0; k < len; ++k) {
            int u = cfg.index_of(p + step * k), v = cfg.index_of(p + step * (k + 1));
            int e = cfg.edge_id[std::min(u, v)][std::max(u, v)];
            assert(e >= 0);
            pinned.push_back(e);
        }
    }
    for (int e : pinned) {
        if (present.test(e)) continue;
        if (mask_intersects(cfg.cross_mask, static_cast<std::size_t>(e) * cfg.words, present))
            throw input_error("subdivision has crossing edges");
        present.set(e);
    }
    // Greedy completion in edge-id order: a maximal crossing-free edge set
    // on the full point set is a fine triangulation of the hull.
    for (int e = 0; e < cfg.E; ++e) {
        if (present.test(e)) continue;
        if (!mask_intersects(cfg.cross_mask, static_cast<std::size_t>(e) * cfg.words, present))
            present.set(e);
    }
    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < cfg.n; ++i)
        for (int j = i + 1; j < cfg.n; ++j) {
            int eij = cfg.edge_id[i][j];
            if (eij < 0 || !present.test(eij)) continue;
            for (int k = j + 1; k < cfg.n; ++k) {
                int eik = cfg.edge_id[i][k], ejk = cfg.edge_id[j][k];
                if (eik < 0 || ejk < 0 || !present.test(eik) || !present.test(ejk)) continue;
                Int o = orient(cfg.pts[i], cfg.pts[j], cfg.pts[k]);
                if (o == 1 || o == -1) tris.push_back({i, j, k});
            }
        }
    std::sort(tris.begin(), tris.end());
    return Triangulation(cfg.pts, tris);
}

std::vector<Triangulation> legal_flips(const Triangulation& T)
{
    std::vector<Triangulation> out;
    TriangulationEdges es = edges(T);
    const auto& pts = T.points();
    for (const auto& ie : es.interior) {
        int l = ie.apex[0], r = ie.apex[1];
        // strictly convex quadrilateral around the edge
        Int o1 = orient(pts[l], pts[ie.a], pts[r]);
        Int o2 = orient(pts[l], pts[ie.b], pts[r]);
        if (o1 == 0 || o2 == 0 || (o1 > 0) == (o2 > 0)) continue;
        std::vector<std::array<int, 3>> tris;
        for (std::size_t ti = 0; ti < T.triangles().size(); ++ti)
            if (static_cast<int>(ti) != ie.tri[0] && static_cast<int>(ti) != ie.tri[1])
                tris.push_back(T.triangles()[ti]);
        std::array<int, 3> t1{l, r, ie.a}, t2{l, r, ie.b};
        std::sort(t1.begin(), t1.end());
        std::sort(t2.begin(), t2.end());
        tris.push_back(t1);
        tris.push_back(t2);
        std::sort(tris.begin(), tris.end());
        out.push_back(Triangulation(pts, tris));
    }
    return out;
}

SecondaryCone secondary_cone(const Triangulation& T)
{
    SecondaryCone cone;
    const auto& pts = T.points();
    for (const auto& ie : edges(T).interior) {
        const LatticePoint& p = pts[ie.a];
        const LatticePoint& q = pts[ie.b];
        const LatticePoint& r = pts[ie.apex[0]];
        const LatticePoint& s = pts[ie.apex[1]];
        // s = alpha p + beta q + gamma r affinely; unimodular triangles make
        // the coefficients integers.
        Int D = cross(p - r, q - r);
        if (D != 1 && D != -1)
            throw input_error("secondary cone requires a unimodular triangulation");
        Int alpha = cross(s - r, q - r) / D;
        Int beta = cross(p - r, s - r) / D;
        Int gamma = 1 - alpha - beta;
        FoldInequality f;
        f.edge_a = ie.a;
        f.edge_b = ie.b;
        f.coeffs.assign(pts.size(), 0);
        f.coeffs[ie.apex[1]] += 1;
        f.coeffs[ie.a] -= alpha;
        f.coeffs[ie.b] -= beta;
        f.coeffs[ie.apex[0]] -= gamma;
        cone.inequalities.push_back(std::move(f));
    }
    return cone;
}

bool SecondaryCone::strictly_contains(const HeightFunction& h) const
{
    for (const auto& f : inequalities) {
        Rat v = 0;
        for (std::size_t i = 0; i < f.coeffs.size(); ++i)
            if (f.coeffs[i] != 0) v += Rat(f.coeffs[i]) * h.heights[i];
        if (v <= 0) return false;
    }
    return true;
}

RegularityResult is_regular(const Triangulation& T)
{
    const std::size_t n = T.points().size();
    SecondaryCone cone = secondary_cone(T);
    RegularityResult res;
    if (cone.inequalities.empty()) {
        res.regular = true;
        res.witness.heights.assign(n, Rat(0));
        res.slack = 1;
        return res;
    }
    // Variables u_0..u_{n-1} in [0, 2] (heights are u - 1) plus t = tp - tm;
    // maximize t subject to t <= F.u for every fold F. Fold coefficients sum
    // to zero, so the shift by 1 drops out.
    const std::size_t nv = n + 2;
    RatMatrix A;
    RatVec b, c(nv, Rat(0));
    c[n] = 1;
    c[n + 1] = -1;
    for (const auto& f : cone.inequalities) {
        RatVec row(nv, Rat(0));
        for (std::size_t i = 0; i < n; ++i) row[i] = Rat(-f.coeffs[i]);
        row[n] = 1;
        row[n + 1] = -1;
        A.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    for (std::size_t i = 0; i < n; ++i) {
        RatVec row(nv, Rat(0));
        row[i] = 1;
        A.push_back(std::move(row));
        b.push_back(Rat(2));
    }
    LpResult lp = simplex_max(A, b, c);
    assert(lp.bounded);
    res.slack = lp.value;
    res.regular = lp.value > 0;
    res.witness.heights.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) res.witness.heights[i] = lp.solution[i] - 1;
    return res;
}

}  // namespace tropmoduli
