#include "fveg/grid.hpp"

#include <cmath>
#include <string>

namespace fveg {

Grid Grid::build(int nx, int ny, Rect domain) {
    if (nx < 1 || ny < 1)
        throw ConfigError("grid: cell counts must be positive, got nx=" + std::to_string(nx) +
                          " ny=" + std::to_string(ny));
    if (!(domain.width() > 0.0) || !(domain.height() > 0.0))
        throw ConfigError("grid: domain must have positive extent");

    const double hx = domain.width() / nx;
    const double hy = domain.height() / ny;
    if (std::abs(hx - hy) > 1e-12 * std::max(std::abs(hx), std::abs(hy)))
        throw ConfigError("grid: cells must be square, got hx=" + std::to_string(hx) +
                          " hy=" + std::to_string(hy));

    Grid g;
    g.nx_ = nx;
    g.ny_ = ny;
    g.domain_ = domain;
    g.h_ = hx;
    return g;
}

Edge Grid::vertical_edge(int i, int j) const {
    i = wrap_x(i);
    j = wrap_y(j);
    Edge e;
    e.id = i + static_cast<long>(nx_) * j;
    e.orientation = EdgeOrientation::Vertical;
    e.i = i;
    e.j = j;
    e.in = cell_index(i, j);
    e.out = cell_index(i + 1, j);
    return e;
}

Edge Grid::horizontal_edge(int i, int j) const {
    i = wrap_x(i);
    j = wrap_y(j);
    Edge e;
    e.id = static_cast<long>(nx_) * ny_ + i + static_cast<long>(nx_) * j;
    e.orientation = EdgeOrientation::Horizontal;
    e.i = i;
    e.j = j;
    e.in = cell_index(i, j);
    e.out = cell_index(i, j + 1);
    return e;
}

Edge Grid::edge(long id) const {
    const long nv = static_cast<long>(nx_) * ny_;
    if (id < 0 || id >= 2 * nv) throw ConfigError("grid: edge id out of range");
    if (id < nv) return vertical_edge(static_cast<int>(id % nx_), static_cast<int>(id / nx_));
    const long k = id - nv;
    return horizontal_edge(static_cast<int>(k % nx_), static_cast<int>(k / nx_));
}

bool CellField::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

namespace {
// 3-point Gauss-Legendre on [-1/2, 1/2].
constexpr double gauss3_x[3] = {-0.3872983346207417, 0.0, 0.3872983346207417};
constexpr double gauss3_w[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
} // namespace

CellField project(const Grid& grid, int ncomp, const PointFn& f) {
    CellField out(ncomp, grid);
    const double h = grid.h();
    std::array<double, max_comp> val{};
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            const int cell = grid.cell_index(i, j);
            const double cx = grid.cell_center_x(i);
            const double cy = grid.cell_center_y(j);
            std::array<double, max_comp> acc{};
            for (int qy = 0; qy < 3; ++qy) {
                for (int qx = 0; qx < 3; ++qx) {
                    const double x = cx + gauss3_x[qx] * h;
                    const double y = cy + gauss3_x[qy] * h;
                    f(x, y, val.data());
                    const double w = gauss3_w[qx] * gauss3_w[qy];
                    for (int c = 0; c < ncomp; ++c) {
                        if (!std::isfinite(val[c]))
                            throw StateError("project: non-finite integrand in cell (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
                        acc[c] += w * val[c];
                    }
                }
            }
            for (int c = 0; c < ncomp; ++c) out.at(cell, c) = acc[c];
        }
    }
    return out;
}

StateVec edge_jump(const CellField& field, const Edge& edge) {
    StateVec r{};
    for (int c = 0; c < field.ncomp(); ++c) r[c] = field.at(edge.out, c) - field.at(edge.in, c);
    return r;
}

StateVec edge_avg(const CellField& field, const Edge& edge) {
    StateVec r{};
    for (int c = 0; c < field.ncomp(); ++c) r[c] = 0.5 * (field.at(edge.in, c) + field.at(edge.out, c));
    return r;
}

} // namespace fveg
