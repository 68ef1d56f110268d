#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace glg {

struct Point2 {
    double x;
    double y;
};

// Delaunay triangulation via Bowyer-Watson with a super-triangle. Points are
// inserted in lexicographic (x, y) order and an exactly-zero in-circle
// determinant counts as outside, which makes cocircular configurations
// deterministic. Returns the unique edge set as (i, j) pairs with i < j,
// sorted.
std::vector<std::pair<std::size_t, std::size_t>> delaunay_triangulate(
    const std::vector<Point2>& points);

// Triangles of the same triangulation (vertex index triples, each sorted);
// used by the empty-circumcircle test oracle.
std::vector<std::array<std::size_t, 3>> delaunay_triangles(
    const std::vector<Point2>& points);

} // namespace glg
