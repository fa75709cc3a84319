#include "doctest.h"

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "fveg/grid.hpp"
#include "oracles.hpp"

using namespace fveg;

TEST_SUITE_BEGIN("grid");

TEST_CASE("single-cell torus identifies both sides of each edge") {
    const Grid g = Grid::build(1, 1, {0.0, 1.0, 0.0, 1.0});
    CHECK(g.h() == doctest::Approx(1.0));
    CHECK(g.edge_count() == 2);
    for (long id = 0; id < g.edge_count(); ++id) {
        const Edge e = g.edge(id);
        CHECK(e.in == e.out);
    }
}

TEST_CASE("mesh parameter on the length-2 domain") {
    const Grid g = Grid::build(20, 20, {-1.0, 1.0, -1.0, 1.0});
    CHECK(g.h() == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(g.cell_measure() == doctest::Approx(0.01).epsilon(1e-14));
}

TEST_CASE("edge count matches exhaustive torus enumeration") {
    const Grid g = Grid::build(4, 4, {0.0, 1.0, 0.0, 1.0});
    // Independent enumeration: each cell owns its east and north interfaces.
    std::set<std::pair<int, std::pair<int, int>>> interfaces; // (family, (a,b))
    auto wrap = [](int k) { return ((k % 4) + 4) % 4; };
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            const int cell = i + 4 * j;
            interfaces.insert({0, {cell, wrap(i + 1) + 4 * j}});
            interfaces.insert({1, {cell, i + 4 * wrap(j + 1)}});
        }
    CHECK(static_cast<long>(interfaces.size()) == g.edge_count());
    CHECK(g.edge_count() == 2 * 4 * 4);

    // Every cell borders exactly 4 edges; edge ids are unique.
    std::map<int, int> touches;
    std::set<long> ids;
    for (long id = 0; id < g.edge_count(); ++id) {
        const Edge e = g.edge(id);
        CHECK(ids.insert(e.id).second);
        ++touches[e.in];
        ++touches[e.out];
    }
    for (const auto& [cell, n] : touches) {
        (void)cell;
        CHECK(n == 4);
    }
}

TEST_CASE("invalid grids are rejected") {
    CHECK_THROWS_AS(Grid::build(0, 4, {0.0, 1.0, 0.0, 1.0}), ConfigError);
    CHECK_THROWS_AS(Grid::build(4, 4, {0.0, 2.0, 0.0, 1.0}), ConfigError); // non-square cells
}

TEST_CASE("projection reproduces constants and linears exactly") {
    const Grid g = Grid::build(3, 3, {0.0, 3.0, 0.0, 3.0});
    const CellField cf = project(g, 2, [](double, double, double* out) {
        out[0] = 4.25;
        out[1] = -1.5;
    });
    for (int cell = 0; cell < g.cell_count(); ++cell) {
        CHECK(cf.at(cell, 0) == doctest::Approx(4.25).epsilon(1e-15));
        CHECK(cf.at(cell, 1) == doctest::Approx(-1.5).epsilon(1e-15));
    }

    const Grid unit = Grid::build(1, 1, {0.0, 1.0, 0.0, 1.0});
    const CellField lin = project(unit, 1, [](double x, double, double* out) { out[0] = x; });
    CHECK(lin.at(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("projection of sin(2 pi x) matches a 1D quadrature oracle") {
    const Grid g = Grid::build(1, 1, {0.0, 0.1, 0.0, 0.1});
    const CellField cf = project(g, 1, [](double x, double, double* out) { out[0] = std::sin(2.0 * oracle::pi * x); });
    const double ref = oracle::integrate([](double x) { return std::sin(2.0 * oracle::pi * x); },
                                         0.0, 0.1, 1e-15) / 0.1;
    CHECK(std::abs(cf.at(0, 0) - ref) < 1e-12);
}

TEST_CASE("projection rejects non-finite integrands naming the cell") {
    const Grid g = Grid::build(2, 2, {0.0, 1.0, 0.0, 1.0});
    CHECK_THROWS_WITH_AS(project(g, 1,
                                 [](double x, double y, double* out) {
                                     out[0] = (x > 0.5 && y > 0.5) ? std::nan("") : 1.0;
                                 }),
                         doctest::Contains("cell (1,1)"), StateError);
}

TEST_CASE("jump and average basics") {
    const Grid g = Grid::build(2, 1, {0.0, 1.0, 0.0, 0.5});
    CellField f(1, g);
    f.at(0, 0) = 1.0;
    f.at(1, 0) = 3.0;
    const Edge e = g.vertical_edge(0, 0); // in = cell 0, out = cell 1
    CHECK(edge_jump(f, e)[0] == doctest::Approx(2.0));
    CHECK(edge_avg(f, e)[0] == doctest::Approx(2.0));

    f.at(1, 0) = 1.0;
    CHECK(edge_jump(f, e)[0] == doctest::Approx(0.0));
    CHECK(edge_avg(f, e)[0] == doctest::Approx(1.0));
}

TEST_CASE("jump is linear over random fields") {
    const Grid g = Grid::build(5, 5, {0.0, 1.0, 0.0, 1.0});
    std::mt19937_64 rng(071);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    CellField f(2, g);
    for (int cell = 0; cell < g.cell_count(); ++cell)
        for (int c = 0; c < 2; ++c) f.at(cell, c) = d(rng);
    const double a = 1.7;
    CellField fa(2, g);
    for (int cell = 0; cell < g.cell_count(); ++cell)
        for (int c = 0; c < 2; ++c) fa.at(cell, c) = a * f.at(cell, c);
    for (long id = 0; id < g.edge_count(); ++id) {
        const Edge e = g.edge(id);
        const StateVec j1 = edge_jump(f, e);
        const StateVec j2 = edge_jump(fa, e);
        for (int c = 0; c < 2; ++c) CHECK(std::abs(j2[c] - a * j1[c]) < 1e-15);
    }
}

TEST_CASE("product rule of jumps and averages holds per interface") {
    const Grid g = Grid::build(6, 4, {0.0, 1.5, 0.0, 1.0});
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    CellField a(1, g), b(1, g), ab(1, g);
    for (int cell = 0; cell < g.cell_count(); ++cell) {
        a.at(cell, 0) = d(rng);
        b.at(cell, 0) = d(rng);
        ab.at(cell, 0) = a.at(cell, 0) * b.at(cell, 0);
    }
    for (long id = 0; id < g.edge_count(); ++id) {
        const Edge e = g.edge(id);
        const double lhs = edge_jump(ab, e)[0];
        const double rhs = edge_avg(a, e)[0] * edge_jump(b, e)[0] + edge_jump(a, e)[0] * edge_avg(b, e)[0];
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}

TEST_CASE("signed jumps telescope to zero on the torus") {
    const Grid g = Grid::build(7, 7, {0.0, 1.0, 0.0, 1.0});
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    CellField f(1, g);
    for (int cell = 0; cell < g.cell_count(); ++cell) f.at(cell, 0) = d(rng);
    double acc = 0.0;
    for (long id = 0; id < g.edge_count(); ++id) acc += g.edge_measure() * edge_jump(f, g.edge(id))[0];
    CHECK(std::abs(acc) < 1e-12);
}

TEST_SUITE_END();
