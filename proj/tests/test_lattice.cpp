#include <random>
#include <set>

#include "doctest.h"
#include "tropmoduli/polygon.hpp"

using namespace tropmoduli;

namespace {

LatticePolygon poly(std::initializer_list<std::pair<Int, Int>> pts)
{
    std::vector<LatticePoint> v;
    for (auto [x, y] : pts) v.push_back({x, y});
    return LatticePolygon(v);
}

UnimodularMap random_unimodular(std::mt19937& rng)
{
    std::uniform_int_distribution<Int> shear(-3, 3), trans(-5, 5), pick(0, 1);
    // Random product of shears and flips stays unimodular.
    UnimodularMap m;
    for (int k = 0; k < 3; ++k) {
        m = UnimodularMap(1, shear(rng), 0, 1).compose(m);
        m = UnimodularMap(1, 0, shear(rng), 1).compose(m);
        if (pick(rng)) m = UnimodularMap(0, 1, 1, 0).compose(m);
    }
    return UnimodularMap(m.a, m.b, m.c, m.d, trans(rng), trans(rng));
}

LatticePolygon random_polygon(std::mt19937& rng)
{
    std::uniform_int_distribution<Int> coord(0, 6);
    std::uniform_int_distribution<int> cnt(3, 7);
    for (;;) {
        std::vector<LatticePoint> pts;
        int n = cnt(rng);
        for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
        try {
            return LatticePolygon(pts);
        } catch (const input_error&) {
        }
    }
}

// Equivalence oracle: exhaustive search over small-coefficient matrices.
bool equivalent_bruteforce(const LatticePolygon& P, const LatticePolygon& Q, Int bound)
{
    for (Int a = -bound; a <= bound; ++a)
        for (Int b = -bound; b <= bound; ++b)
            for (Int c = -bound; c <= bound; ++c)
                for (Int d = -bound; d <= bound; ++d) {
                    if (a * d - b * c != 1 && a * d - b * c != -1) continue;
                    UnimodularMap m(a, b, c, d);
                    LatticePolygon img = apply_unimodular(P, m);
                    // align lex-min vertices, then compare
                    LatticePoint mi = img.vertices()[0], mq = Q.vertices()[0];
                    for (const auto& v : img.vertices()) mi = std::min(mi, v);
                    for (const auto& v : Q.vertices()) mq = std::min(mq, v);
                    UnimodularMap t =
                        UnimodularMap::translation(mq.x - mi.x, mq.y - mi.y).compose(m);
                    if (apply_unimodular(P, t) == Q) return true;
                }
    return false;
}

}  // namespace

TEST_CASE("lattice_points examples")
{
    auto pts = lattice_points(poly({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(pts == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});

    CHECK(lattice_points(poly({{0, 0}, {2, 0}, {0, 2}})).size() == 6);
    // exhaustive-scan value for the genus-3 triangle with three boundary points
    CHECK(lattice_points(poly({{1, 0}, {0, 3}, {3, 1}})).size() == 6);
}

TEST_CASE("genus examples")
{
    CHECK(genus(poly({{0, 0}, {1, 0}, {0, 1}})) == 0);
    CHECK(genus(poly({{1, 0}, {0, 3}, {3, 1}})) == 3);
    CHECK(genus(poly({{0, 0}, {3, 0}, {0, 3}, {3, 3}})) == 4);
}

TEST_CASE("boundary_point_count examples")
{
    CHECK(boundary_point_count(poly({{1, 0}, {0, 3}, {3, 1}})) == 3);
    CHECK(boundary_point_count(poly({{0, 0}, {2, 0}, {0, 2}})) == 6);
    CHECK(boundary_point_count(poly({{0, 0}, {0, 3}, {3, 0}, {3, 3}})) == 12);
}

TEST_CASE("lattice_length examples and invariance")
{
    CHECK(lattice_length(Segment{LatticePoint{0, 0}, LatticePoint{2, 2}}) == 2);
    CHECK(lattice_length(Segment{LatticePoint{0, 0}, LatticePoint{3, 0}}) == 3);
    CHECK(lattice_length(Segment{RatPoint{0, 0}, RatPoint{Rat(1, 2), Rat(1, 2)}}) == Rat(1, 2));

    std::mt19937 rng(7);
    std::uniform_int_distribution<Int> c(-6, 6), den(1, 4);
    for (int k = 0; k < 100; ++k) {
        RatPoint a{Rat(c(rng), den(rng)), Rat(c(rng), den(rng))};
        RatPoint b{Rat(c(rng), den(rng)), Rat(c(rng), den(rng))};
        if (a == b) continue;
        Segment s{a, b};
        Rat len = lattice_length(s);
        UnimodularMap m = random_unimodular(rng);
        CHECK(lattice_length(Segment{m(a), m(b)}) == len);
        RatPoint shift{Rat(c(rng), den(rng)), Rat(c(rng), den(rng))};
        CHECK(lattice_length(Segment{a + shift, b + shift}) == len);
    }
}

TEST_CASE("interior_hull shapes")
{
    CHECK(interior_hull(poly({{0, 0}, {1, 0}, {0, 1}})).kind == InteriorHull::Kind::empty);

    InteriorHull h = interior_hull(poly({{0, 0}, {4, 0}, {0, 4}}));
    REQUIRE(h.kind == InteriorHull::Kind::polygon);
    CHECK(h.polygon() == poly({{1, 1}, {2, 1}, {1, 2}}));

    InteriorHull seg = interior_hull(poly({{0, 0}, {0, 3}, {2, 0}, {2, 3}}));
    REQUIRE(seg.kind == InteriorHull::Kind::segment);
    CHECK(seg.points == std::vector<LatticePoint>{{1, 1}, {1, 2}});

    InteriorHull pt = interior_hull(poly({{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
    REQUIRE(pt.kind == InteriorHull::Kind::point);
    CHECK(pt.points == std::vector<LatticePoint>{{1, 1}});
}

TEST_CASE("is_hyperelliptic")
{
    CHECK_FALSE(is_hyperelliptic(poly({{0, 0}, {4, 0}, {0, 4}})));
    CHECK(is_hyperelliptic(poly({{0, 0}, {0, 3}, {2, 0}, {2, 3}})));
    CHECK_FALSE(is_hyperelliptic(poly({{1, 0}, {0, 3}, {3, 1}})));
    CHECK_THROWS_AS(is_hyperelliptic(poly({{0, 0}, {1, 0}, {0, 1}})), input_error);
}

TEST_CASE("relaxed_polygon examples")
{
    // T_{2,3}
    RationalPolygon r = relaxed_polygon(poly({{0, 0}, {0, 1}, {3, 0}, {2, 1}}));
    REQUIRE(r.is_lattice());
    CHECK(r.to_lattice() == poly({{-1, -1}, {-1, 2}, {5, -1}, {2, 2}}));

    RationalPolygon r2 = relaxed_polygon(poly({{1, 1}, {2, 1}, {1, 2}}));
    REQUIRE(r2.is_lattice());
    CHECK(r2.to_lattice() == poly({{0, 0}, {4, 0}, {0, 4}}));

    RationalPolygon r3 = relaxed_polygon(poly({{0, 0}, {1, 0}, {0, 1}}));
    REQUIRE(r3.is_lattice());
    CHECK(r3.to_lattice() == poly({{-1, -1}, {2, -1}, {-1, 2}}));
}

TEST_CASE("is_maximal examples")
{
    CHECK(is_maximal(poly({{0, 0}, {4, 0}, {0, 4}})));
    CHECK_FALSE(is_maximal(poly({{1, 0}, {0, 3}, {3, 1}})));
    // relaxation of T_{2,3} is maximal by construction
    CHECK(is_maximal(poly({{-1, -1}, {-1, 2}, {5, -1}, {2, 2}})));
    CHECK_THROWS_AS(is_maximal(poly({{0, 0}, {0, 3}, {2, 0}, {2, 3}})), input_error);
}

TEST_CASE("apply_unimodular basics")
{
    LatticePolygon p = poly({{1, 0}, {0, 3}, {3, 1}});
    CHECK(apply_unimodular(p, UnimodularMap()) == p);
    // group law: shear twice equals the squared shear
    UnimodularMap s(1, -1, 0, 1);
    CHECK(apply_unimodular(apply_unimodular(p, s), s) ==
          apply_unimodular(p, UnimodularMap(1, -2, 0, 1)));
}

TEST_CASE("Pick identity on random polygons")
{
    std::mt19937 rng(11);
    for (int k = 0; k < 120; ++k) {
        LatticePolygon p = random_polygon(rng);
        // 2*area == 2*genus + boundary - 2
        CHECK(p.doubled_area() == 2 * genus(p) + boundary_point_count(p) - 2);
    }
}

TEST_CASE("unimodular invariance of lattice invariants")
{
    std::mt19937 rng(13);
    for (int k = 0; k < 100; ++k) {
        LatticePolygon p = random_polygon(rng);
        UnimodularMap t = random_unimodular(rng);
        LatticePolygon q = apply_unimodular(p, t);
        CHECK(genus(q) == genus(p));
        CHECK(boundary_point_count(q) == boundary_point_count(p));
        if (genus(p) >= 1) {
            CHECK(is_hyperelliptic(q) == is_hyperelliptic(p));
            if (!is_hyperelliptic(p)) {
                CHECK(is_maximal(q) == is_maximal(p));
                CHECK(interior_hull(q).polygon() ==
                      apply_unimodular(interior_hull(p).polygon(), t));
            }
        }
    }
}

TEST_CASE("relaxation of the interior hull contains the polygon")
{
    std::mt19937 rng(17);
    int found = 0;
    while (found < 60) {
        LatticePolygon p = random_polygon(rng);
        if (genus(p) < 1 || is_hyperelliptic(p)) continue;
        ++found;
        RationalPolygon r = relaxed_polygon(interior_hull(p).polygon());
        for (const auto& v : p.vertices()) CHECK(r.contains(to_rat(v)));
        REQUIRE(r.is_lattice());
        CHECK(interior_points(r.to_lattice()) == interior_points(p));
    }
}

TEST_CASE("normal_form canonicality")
{
    std::mt19937 rng(19);
    for (int k = 0; k < 100; ++k) {
        LatticePolygon p = random_polygon(rng);
        NormalFormResult nf = normal_form(p);
        CHECK(apply_unimodular(p, nf.map) == nf.polygon);
        UnimodularMap t = random_unimodular(rng);
        CHECK(normal_form(apply_unimodular(p, t)).polygon == nf.polygon);
        // idempotent
        CHECK(normal_form(nf.polygon).polygon == nf.polygon);
    }
}

TEST_CASE("normal_form on the four equivalent polygons")
{
    LatticePolygon p = poly({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
    NormalFormResult nf = normal_form(p);
    for (UnimodularMap m : {UnimodularMap(0, 1, 1, 0), UnimodularMap(1, -1, 0, 1),
                            UnimodularMap(2, 1, 1, 1, 3, -2)}) {
        CHECK(normal_form(apply_unimodular(p, m)).polygon == nf.polygon);
    }
}

TEST_CASE("normal_form separates classes exactly when inequivalent")
{
    LatticePolygon a = poly({{0, 0}, {0, 1}, {9, 2}});
    LatticePolygon b = poly({{0, 0}, {0, 1}, {9, 7}});
    bool equiv = equivalent_bruteforce(a, b, 10);
    CHECK((normal_form(a).polygon == normal_form(b).polygon) == equiv);

    LatticePolygon c = poly({{0, 0}, {0, 1}, {9, 5}});
    bool equiv_ac = equivalent_bruteforce(a, c, 10);
    CHECK((normal_form(a).polygon == normal_form(c).polygon) == equiv_ac);
}

TEST_CASE("polygon parsing round trip")
{
    LatticePolygon p = parse_polygon("1,0 0,3 3,1");
    CHECK(p == poly({{1, 0}, {0, 3}, {3, 1}}));
    LatticePolygon q = parse_polygon(R"({"vertices": [[1,0],[0,3],[3,1]]})");
    CHECK(q == p);
    CHECK(parse_polygon(polygon_literal(p)) == p);
    CHECK_THROWS_AS(parse_polygon("1,0 0,3"), input_error);
    CHECK_THROWS_AS(parse_polygon("1,0 0,3 nonsense"), input_error);
    CHECK_THROWS_AS(parse_polygon("0,0 1,0 2,0"), input_error);  // collinear
}
