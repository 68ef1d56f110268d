#include "glg/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "glg/error.hpp"

namespace glg {

namespace {

struct Tri {
    std::size_t a, b, c;
    bool alive;
};

double orient2d(const Point2& p, const Point2& q, const Point2& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

// Positive iff d lies strictly inside the circumcircle of CCW triangle (a,b,c).
double in_circle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    double adx = a.x - d.x, ady = a.y - d.y;
    double bdx = b.x - d.x, bdy = b.y - d.y;
    double cdx = c.x - d.x, cdy = c.y - d.y;
    double ad = adx * adx + ady * ady;
    double bd = bdx * bdx + bdy * bdy;
    double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
           ad * (bdx * cdy - bdy * cdx);
}

void check_input(const std::vector<Point2>& points) {
    if (points.size() < 3) {
        throw Error(ErrorCode::DegenerateInput,
                    "Delaunay triangulation needs at least 3 points, got " +
                        std::to_string(points.size()));
    }
    std::vector<std::pair<double, double>> sorted;
    sorted.reserve(points.size());
    for (const Point2& p : points) sorted.emplace_back(p.x, p.y);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw Error(ErrorCode::DuplicatePoints, "duplicate input point");
        }
    }
}

std::vector<Tri> triangulate_impl(const std::vector<Point2>& points,
                                  std::vector<Point2>& all) {
    std::size_t n = points.size();
    all = points;

    double min_x = all[0].x, max_x = all[0].x, min_y = all[0].y, max_y = all[0].y;
    for (const Point2& p : all) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    double cx = (min_x + max_x) / 2.0;
    double cy = (min_y + max_y) / 2.0;
    double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    // Super-triangle generously containing every circumcircle of interest.
    all.push_back({cx - 30.0 * span, cy - 10.0 * span});
    all.push_back({cx + 30.0 * span, cy - 10.0 * span});
    all.push_back({cx, cy + 30.0 * span});
    std::size_t s0 = n, s1 = n + 1, s2 = n + 2;

    std::vector<Tri> tris;
    tris.push_back({s0, s1, s2, true});

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (all[i].x != all[j].x) return all[i].x < all[j].x;
        if (all[i].y != all[j].y) return all[i].y < all[j].y;
        return i < j;
    });

    for (std::size_t idx : order) {
        const Point2& p = all[idx];
        // Cavity: triangles whose circumcircle strictly contains p.
        std::map<std::pair<std::size_t, std::size_t>, int> edge_count;
        std::vector<std::array<std::size_t, 3>> cavity;
        for (Tri& t : tris) {
            if (!t.alive) continue;
            Point2 pa = all[t.a], pb = all[t.b], pc = all[t.c];
            std::size_t va = t.a, vb = t.b, vc = t.c;
            if (orient2d(pa, pb, pc) < 0.0) {
                std::swap(pb, pc);
                std::swap(vb, vc);
            }
            if (in_circle(pa, pb, pc, p) > 0.0) {
                t.alive = false;
                cavity.push_back({va, vb, vc});
                std::array<std::pair<std::size_t, std::size_t>, 3> es = {
                    std::make_pair(std::min(va, vb), std::max(va, vb)),
                    std::make_pair(std::min(vb, vc), std::max(vb, vc)),
                    std::make_pair(std::min(vc, va), std::max(vc, va))};
                for (const auto& e : es) ++edge_count[e];
            }
        }
        // Boundary edges of the cavity appear exactly once.
        for (const auto& [edge, count] : edge_count) {
            if (count == 1) {
                tris.push_back({edge.first, edge.second, idx, true});
            }
        }
    }

    // Drop triangles that touch the super-triangle. A collinear input leaves
    // nothing behind, which is how degeneracy is detected.
    bool any = false;
    for (Tri& t : tris) {
        if (t.alive && (t.a >= n || t.b >= n || t.c >= n)) t.alive = false;
        any = any || t.alive;
    }
    if (!any) {
        throw Error(ErrorCode::DegenerateInput, "all input points are collinear");
    }
    return tris;
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> delaunay_triangulate(
    const std::vector<Point2>& points) {
    check_input(points);
    std::vector<Point2> all;
    std::vector<Tri> tris = triangulate_impl(points, all);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Tri& t : tris) {
        if (!t.alive) continue;
        edges.emplace_back(std::min(t.a, t.b), std::max(t.a, t.b));
        edges.emplace_back(std::min(t.b, t.c), std::max(t.b, t.c));
        edges.emplace_back(std::min(t.c, t.a), std::max(t.c, t.a));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::vector<std::array<std::size_t, 3>> delaunay_triangles(
    const std::vector<Point2>& points) {
    check_input(points);
    std::vector<Point2> all;
    std::vector<Tri> tris = triangulate_impl(points, all);
    std::vector<std::array<std::size_t, 3>> out;
    for (const Tri& t : tris) {
        if (!t.alive) continue;
        std::array<std::size_t, 3> v = {t.a, t.b, t.c};
        std::sort(v.begin(), v.end());
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace glg
