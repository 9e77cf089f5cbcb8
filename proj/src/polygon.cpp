#include "tropmoduli/polygon.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tropmoduli {

namespace {

// Andrew monotone chain; returns strictly convex hull, CCW, lex-min first.
template <typename Point, typename CrossFn>
std::vector<Point> convex_hull(std::vector<Point> pts, CrossFn orient3)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && orient3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && orient3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

Int orient_int(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c)
{
    return orient(a, b, c);
}

Rat orient_rat(const RatPoint& a, const RatPoint& b, const RatPoint& c)
{
    return cross(b - a, c - a);
}

}  // namespace

LatticePolygon::LatticePolygon(const std::vector<LatticePoint>& points)
{
    verts_ = convex_hull(points, orient_int);
    if (verts_.size() < 3)
        throw input_error("polygon must be two-dimensional (hull has fewer than 3 vertices)");
}

Int LatticePolygon::doubled_area() const
{
    Int s = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const LatticePoint& p = verts_[i];
        const LatticePoint& q = verts_[(i + 1) % verts_.size()];
        s += cross(p, q);
    }
    return s;
}

bool LatticePolygon::contains(const LatticePoint& p) const
{
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (orient(verts_[i], verts_[(i + 1) % verts_.size()], p) < 0) return false;
    return true;
}

bool LatticePolygon::contains_interior(const LatticePoint& p) const
{
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (orient(verts_[i], verts_[(i + 1) % verts_.size()], p) <= 0) return false;
    return true;
}

bool LatticePolygon::on_boundary(const LatticePoint& p) const
{
    return contains(p) && !contains_interior(p);
}

RationalPolygon::RationalPolygon(const std::vector<RatPoint>& points)
{
    verts_ = convex_hull(points, orient_rat);
    if (verts_.size() < 3) throw input_error("rational polygon must be two-dimensional");
}

bool RationalPolygon::contains(const RatPoint& p) const
{
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const RatPoint& a = verts_[i];
        const RatPoint& b = verts_[(i + 1) % verts_.size()];
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

bool RationalPolygon::is_lattice() const
{
    for (const auto& v : verts_)
        if (denominator(v.x) != 1 || denominator(v.y) != 1) return false;
    return true;
}

LatticePolygon RationalPolygon::to_lattice() const
{
    if (!is_lattice()) throw input_error("rational polygon has non-integral vertices");
    std::vector<LatticePoint> pts;
    for (const auto& v : verts_)
        pts.push_back({static_cast<Int>(numerator(v.x)), static_cast<Int>(numerator(v.y))});
    return LatticePolygon(pts);
}

Rat lattice_length(const Segment& s)
{
    RatPoint d = s.b - s.a;
    // Scale to an integer vector, take out the content.
    BigInt q = boost::multiprecision::lcm(denominator(d.x), denominator(d.y));
    BigInt vx = numerator(d.x) * (q / denominator(d.x));
    BigInt vy = numerator(d.y) * (q / denominator(d.y));
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(vx),
                                          boost::multiprecision::abs(vy));
    return Rat(g, q);
}

std::vector<LatticePoint> lattice_points(const LatticePolygon& P)
{
    Int xmin = P.vertices()[0].x, xmax = xmin, ymin = P.vertices()[0].y, ymax = ymin;
    for (const auto& v : P.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    std::vector<LatticePoint> out;
    for (Int x = xmin; x <= xmax; ++x)
        for (Int y = ymin; y <= ymax; ++y)
            if (P.contains({x, y})) out.push_back({x, y});
    return out;
}

std::vector<LatticePoint> interior_points(const LatticePolygon& P)
{
    std::vector<LatticePoint> out;
    for (const auto& p : lattice_points(P))
        if (P.contains_interior(p)) out.push_back(p);
    return out;
}

std::vector<LatticePoint> boundary_points(const LatticePolygon& P)
{
    std::vector<LatticePoint> out;
    for (const auto& p : lattice_points(P))
        if (!P.contains_interior(p)) out.push_back(p);
    return out;
}

Int genus(const LatticePolygon& P)
{
    return static_cast<Int>(interior_points(P).size());
}

Int boundary_point_count(const LatticePolygon& P)
{
    Int b = 0;
    const auto& v = P.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) b += lattice_length_int(v[i], v[(i + 1) % v.size()]);
    return b;
}

const LatticePolygon& InteriorHull::polygon() const
{
    if (kind != Kind::polygon) throw input_error("interior hull is not two-dimensional");
    if (!poly_) poly_.emplace(points);
    return *poly_;
}

InteriorHull interior_hull(const LatticePolygon& P)
{
    InteriorHull h;
    std::vector<LatticePoint> pts = interior_points(P);
    if (pts.empty()) {
        h.kind = InteriorHull::Kind::empty;
        return h;
    }
    std::vector<LatticePoint> hull = convex_hull(pts, orient_int);
    if (hull.size() == 1) {
        h.kind = InteriorHull::Kind::point;
        h.points = hull;
    } else if (hull.size() == 2) {
        h.kind = InteriorHull::Kind::segment;
        h.points = hull;
    } else {
        h.kind = InteriorHull::Kind::polygon;
        h.points = hull;
    }
    return h;
}

bool is_hyperelliptic(const LatticePolygon& P)
{
    InteriorHull h = interior_hull(P);
    if (h.kind == InteriorHull::Kind::empty)
        throw input_error("hyperelliptic classification requires genus >= 1");
    return h.kind != InteriorHull::Kind::polygon;
}

RationalPolygon relaxed_polygon(const LatticePolygon& Q)
{
    struct Line {
        Int a, b, c;  // a x + b y <= c, gcd(a, b) = 1
    };
    const auto& v = Q.vertices();
    std::vector<Line> lines;
    for (std::size_t i = 0; i < v.size(); ++i) {
        LatticeVec e = v[(i + 1) % v.size()] - v[i];
        LatticeVec n = primitive(LatticeVec{e.y, -e.x});  // outward normal
        lines.push_back({n.x, n.y, dot(n, v[i]) + 1});
    }
    // Candidate vertices are pairwise line intersections that satisfy every
    // relaxed constraint; the hull of the survivors is the intersection.
    std::vector<RatPoint> cand;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Int det = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
            if (det == 0) continue;
            RatPoint p{Rat(lines[i].c * lines[j].b - lines[i].b * lines[j].c, det),
                       Rat(lines[i].a * lines[j].c - lines[i].c * lines[j].a, det)};
            bool ok = true;
            for (const auto& l : lines)
                if (Rat(l.a) * p.x + Rat(l.b) * p.y > l.c) {
                    ok = false;
                    break;
                }
            if (ok) cand.push_back(p);
        }
    }
    return RationalPolygon(cand);
}

bool is_maximal(const LatticePolygon& P)
{
    if (is_hyperelliptic(P))
        throw input_error("is_maximal requires a non-hyperelliptic polygon");
    RationalPolygon r = relaxed_polygon(interior_hull(P).polygon());
    if (!r.is_lattice()) return false;
    return r.to_lattice() == P;
}

LatticePolygon apply_unimodular(const LatticePolygon& P, const UnimodularMap& t)
{
    std::vector<LatticePoint> pts;
    pts.reserve(P.size());
    for (const auto& v : P.vertices()) pts.push_back(t(v));
    return LatticePolygon(pts);
}

RationalPolygon apply_unimodular(const RationalPolygon& P, const UnimodularMap& t)
{
    std::vector<RatPoint> pts;
    for (const auto& v : P.vertices()) pts.push_back(t(v));
    return RationalPolygon(pts);
}

namespace {

// Edge vectors around the polygon, starting from vertex 0.
std::vector<LatticeVec> edge_cycle(const LatticePolygon& P)
{
    const auto& v = P.vertices();
    std::vector<LatticeVec> e;
    for (std::size_t i = 0; i < v.size(); ++i) e.push_back(v[(i + 1) % v.size()] - v[i]);
    return e;
}

std::vector<LatticeVec> min_rotation(std::vector<LatticeVec> e)
{
    std::vector<LatticeVec> best = e;
    for (std::size_t s = 1; s < e.size(); ++s) {
        std::rotate(e.begin(), e.begin() + 1, e.end());
        if (std::lexicographical_compare(e.begin(), e.end(), best.begin(), best.end(),
                                         [](const LatticeVec& a, const LatticeVec& b) {
                                             return a < b;
                                         }))
            best = e;
    }
    return best;
}

}  // namespace

NormalFormResult normal_form(const LatticePolygon& P)
{
    std::optional<NormalFormResult> best;
    std::optional<std::vector<LatticeVec>> best_key;

    const auto& verts = P.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        LatticeVec dir = primitive(verts[(i + 1) % verts.size()] - verts[i]);
        for (int sign = 0; sign < 2; ++sign) {
            LatticeVec d = sign ? -dir : dir;
            // U0 maps d to (1, 0): complete via extended gcd.
            Int u = 0, w = 0;
            {
                // solve u*d.x + w*d.y = 1 (d is primitive)
                Int r0 = d.x, r1 = d.y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
                while (r1 != 0) {
                    Int q = r0 / r1;
                    Int r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
                    r0 = r1; r1 = r2;
                    s0 = s1; s1 = s2;
                    t0 = t1; t1 = t2;
                }
                if (r0 < 0) {
                    s0 = -s0;
                    t0 = -t0;
                }
                u = s0;
                w = t0;
            }
            UnimodularMap U0(u, w, -d.y, d.x);
            for (int refl = 0; refl < 2; ++refl) {
                UnimodularMap M = refl ? UnimodularMap(1, 0, 0, -1).compose(U0) : U0;
                LatticePolygon Q = apply_unimodular(P, M);
                // Shear-normalize within the horizontal strip: anchor on the
                // lex-min vertices of the extreme rows.
                Int ymin = Q.vertices()[0].y, ymax = ymin;
                for (const auto& q : Q.vertices()) {
                    ymin = std::min(ymin, q.y);
                    ymax = std::max(ymax, q.y);
                }
                LatticePoint bot{0, 0}, top{0, 0};
                bool bs = false, ts = false;
                for (const auto& q : Q.vertices()) {
                    if (q.y == ymin && (!bs || q < bot)) bot = q, bs = true;
                    if (q.y == ymax && (!ts || q < top)) top = q, ts = true;
                }
                Int h = ymax - ymin;
                Int t = h > 0 ? -floor_div(top.x - bot.x, h) : 0;
                UnimodularMap S = UnimodularMap::shear_x_by_y(t).compose(M);
                LatticePolygon R = apply_unimodular(P, S);
                // Translate lex-min vertex to the origin.
                LatticePoint m = R.vertices()[0];
                for (const auto& q : R.vertices()) m = std::min(m, q);
                UnimodularMap F = UnimodularMap::translation(-m.x, -m.y).compose(S);
                LatticePolygon C = apply_unimodular(P, F);
                std::vector<LatticeVec> key = min_rotation(edge_cycle(C));
                if (!best_key ||
                    std::lexicographical_compare(key.begin(), key.end(), best_key->begin(),
                                                 best_key->end(),
                                                 [](const LatticeVec& a, const LatticeVec& b) {
                                                     return a < b;
                                                 })) {
                    best_key = key;
                    best = NormalFormResult{C, F};
                }
            }
        }
    }
    return *best;
}

LatticePolygon parse_polygon(const std::string& text)
{
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw input_error("empty polygon literal");
    std::vector<LatticePoint> pts;
    if (text[start] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("bad polygon JSON: ") + e.what());
        }
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw input_error("polygon JSON must contain a \"vertices\" array");
        for (const auto& v : j["vertices"]) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
                !v[1].is_number_integer())
                throw input_error("polygon JSON vertices must be [x,y] integer pairs");
            pts.push_back({v[0].get<Int>(), v[1].get<Int>()});
        }
    } else {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            std::size_t comma = tok.find(',');
            if (comma == std::string::npos)
                throw input_error("expected `x,y` pair in polygon literal, got `" + tok + "`");
            try {
                Int x = std::stoll(tok.substr(0, comma));
                Int y = std::stoll(tok.substr(comma + 1));
                pts.push_back({x, y});
            } catch (const std::exception&) {
                throw input_error("bad coordinate in polygon literal: `" + tok + "`");
            }
        }
    }
    if (pts.size() < 3) throw input_error("polygon needs at least 3 points");
    return LatticePolygon(pts);
}

std::string polygon_literal(const LatticePolygon& P)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < P.vertices().size(); ++i) {
        if (i) out << ' ';
        out << P.vertices()[i].x << ',' << P.vertices()[i].y;
    }
    return out.str();
}

}  // namespace tropmoduli
