#pragma once

#include "steenrod/tower.hpp"

namespace steenrod::fixtures {

// Triangle boundary: vertices 0,1,2, edges [01],[02],[12].
inline ChainComplex circle3() { return {0, {3, 3}, {IntMatrix{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}}}; }

inline ChainComplex point() { return {0, {1}, {}}; }

// Z in degree 1 -id-> Z in degree 0
inline ChainComplex disk() { return {0, {1, 1}, {IntMatrix{{1}}}}; }

// Identity on vertices, [01] -> [01] + z with z = [01] - [02] + [12]: degree 2 on H_1, fixes vertex 0.
inline ChainMap circle_double() {
    auto c = circle3();
    return {c, c, {IntMatrix::identity(3), IntMatrix{{2, 0, 0}, {-1, 1, 0}, {1, 0, 1}}}};
}

// Vertex 0 of the triangle.
inline ChainMap base_point() { return {point(), circle3(), {IntMatrix{{1}, {0}, {0}}}}; }

inline Tower doubling_tower(std::size_t n) {
    Tower t;
    t.levels.assign(n, circle3());
    t.bonds.assign(n - 1, circle_double());
    return t;
}

inline MapTower constant_map_tower(const ChainMap& f, std::size_t n) {
    MapTower t;
    t.domain = Tower::constant(f.source(), n);
    t.codomain = Tower::constant(f.target(), n);
    t.maps.assign(n, f);
    return t;
}

}  // namespace steenrod::fixtures
