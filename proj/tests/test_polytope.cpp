#include "hkfs/error.hpp"
#include "hkfs/polytope.hpp"
#include "hkfs/slicing.hpp"
#include "hkfs/volume.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace hkfs;

namespace {

HalfSpace row(std::vector<BigRational> a, BigRational b) { return {std::move(a), std::move(b)}; }

ConvexCell cube(std::size_t d) {
    ConvexCell c{d, {}};
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<BigRational> lo(d, BigRational(0));
        lo[k] = -1;
        std::vector<BigRational> hi(d, BigRational(0));
        hi[k] = 1;
        c.add(row(lo, 0));
        c.add(row(hi, 1));
    }
    return c;
}

ConvexCell simplex3() {
    return {3, {row({-1, 0, 0}, 0), row({0, -1, 0}, 0), row({0, 0, -1}, 0), row({1, 1, 1}, 1)}};
}

}  // namespace

TEST_CASE("is_feasible examples") {
    CHECK(is_feasible({1, {row({-1}, 0), row({1}, 1)}}));
    CHECK_FALSE(is_feasible({1, {row({-1}, -1), row({1}, 0)}}));
}

TEST_CASE("is_bounded examples") {
    CHECK(is_bounded(cube(3)));
    // z >= x, z >= y, x >= 0, y >= 0 recedes along (0, 0, 1)
    const ConvexCell open{3, {row({1, 0, -1}, 0), row({0, 1, -1}, 0), row({-1, 0, 0}, 0), row({0, -1, 0}, 0)}};
    CHECK_FALSE(is_bounded(open));
    CHECK_THROWS_AS(cell_volume(open), Error);
    try {
        cell_volume(open);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnboundedCell);
    }
}

TEST_CASE("cell_volume examples") {
    CHECK(cell_volume(simplex3()) == BigRational(1, 6));
    CHECK(cell_volume(cube(3)) == 1);
    CHECK(cell_volume(cube(5)) == 1);
    CHECK(reference::cell_volume_slicing(simplex3()) == BigRational(1, 6));
    CHECK(reference::cell_volume_slicing(cube(3)) == 1);

    const auto fs = fsig_region({{3}, {2}});
    const auto cells = shannon_cells(fs);
    REQUIRE(cells.size() == 1);
    CHECK(cell_volume(cells.front()) == BigRational(11, 36));
    CHECK(reference::cell_volume_slicing(cells.front()) == BigRational(11, 36));
}

TEST_CASE("empty and flat cells have zero volume") {
    ConvexCell flat = cube(3);
    flat.add(row({0, 0, 1}, 0));  // z <= 0 on top of z >= 0
    CHECK(cell_volume(flat) == 0);
    CHECK(reference::cell_volume_slicing(flat) == 0);
    ConvexCell empty = cube(2);
    empty.add(row({1, 1}, -1));
    CHECK(cell_volume(empty) == 0);
    CHECK(reference::cell_volume_slicing(empty) == 0);
}

TEST_CASE("redundant and duplicate rows are harmless") {
    ConvexCell c = simplex3();
    c.add(row({1, 1, 1}, 1));
    c.add(row({2, 2, 2}, 2));
    c.add(row({1, 0, 0}, 5));
    c.add(row({1, 1, 0}, 1));
    CHECK(cell_volume(c) == BigRational(1, 6));
    CHECK(reference::cell_volume_slicing(c) == BigRational(1, 6));
    CHECK(irredundant(c).rows.size() == 4);
}

TEST_CASE("vertices of the cube") {
    const auto v = vertices(irredundant(cube(3)));
    CHECK(v.size() == 8);
    for (const auto& vert : v) CHECK(vert.tight.size() == 3);
}

TEST_CASE("simplex_volume") {
    const std::vector<std::vector<BigRational>> pts{{0, 0}, {2, 0}, {0, 3}};
    CHECK(simplex_volume(pts) == 3);
}

TEST_CASE("slice profile of the unit square is the constant one") {
    const auto prof = reference::slice_profile(cube(2));
    REQUIRE(prof.pieces.size() == 1);
    CHECK(prof.breakpoints == std::vector<BigRational>{0, 1});
    CHECK(prof.pieces[0](BigRational(1, 3)) == 1);
    CHECK(prof.integral() == 1);
}

TEST_CASE("interpolation reproduces a cubic") {
    const std::vector<BigRational> ts{0, 1, 2, 5};
    std::vector<BigRational> vs;
    for (const auto& t : ts) vs.push_back(t * t * t - 2 * t + BigRational(1, 3));
    const auto p = reference::interpolate(ts, vs);
    CHECK(p(BigRational(7, 2)) == BigRational(343, 8) - 7 + BigRational(1, 3));
    CHECK(p.integrate(0, 1) == BigRational(1, 4) - 1 + BigRational(1, 3));
}

TEST_CASE("volume does not depend on the slicing order or extra breakpoints") {
    std::vector<ConvexCell> cells = shannon_cells(hk_region({{3}, {2}}));
    cells.push_back(simplex3());
    for (const auto& cell : cells) {
        const BigRational tri = cell_volume(cell);
        std::vector<std::size_t> order{0, 1, 2};
        do {
            CHECK(reference::cell_volume_slicing(cell, order) == tri);
        } while (std::next_permutation(order.begin(), order.end()));
        const std::vector<BigRational> extra{BigRational(1, 3), BigRational(5, 7), 2, BigRational(13, 4), 100};
        CHECK(reference::cell_volume_slicing(cell, {}, extra) == tri);
    }
}

TEST_CASE("four-dimensional cells: triangulation matches slicing") {
    const auto cells = shannon_cells(hk_region({{5, 2}, {2, 3}}));
    REQUIRE(cells.size() > 5);
    for (std::size_t k = 0; k < cells.size(); k += 3) {
        const std::vector<std::size_t> order{3, 1, 0, 2};
        CHECK(reference::cell_volume_slicing(cells[k], order) == cell_volume(cells[k]));
    }
}
