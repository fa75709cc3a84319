#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "fveg/errors.hpp"

namespace fveg {

// Hard cap on the number of state components (wave system: 3, Euler: 4).
inline constexpr int max_comp = 4;

// Fixed-capacity state vector; entries beyond the active component count are zero.
using StateVec = std::array<double, max_comp>;

struct Rect {
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

enum class EdgeOrientation { Vertical, Horizontal }; // Vertical: normal +x, Horizontal: normal +y

// Lightweight view of one interface of the periodic mesh.
struct Edge {
    long id = 0;
    EdgeOrientation orientation = EdgeOrientation::Vertical;
    int i = 0, j = 0; // owning cell (in-cell) structured coordinates
    int in = 0;       // cell on the -normal side
    int out = 0;      // cell on the +normal side
};

// Uniform periodic Cartesian mesh of square cells. Immutable after construction,
// safe to share across threads.
class Grid {
public:
    static Grid build(int nx, int ny, Rect domain);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int cell_count() const { return nx_ * ny_; }
    long edge_count() const { return 2L * nx_ * ny_; }
    const Rect& domain() const { return domain_; }

    double h() const { return h_; }
    double cell_measure() const { return h_ * h_; }
    double edge_measure() const { return h_; }

    // Periodic structured indexing, i and j may be any integer.
    int wrap_x(int i) const { return mod(i, nx_); }
    int wrap_y(int j) const { return mod(j, ny_); }
    int cell_index(int i, int j) const { return wrap_x(i) + nx_ * wrap_y(j); }

    double cell_center_x(int i) const { return domain_.x0 + (i + 0.5) * h_; }
    double cell_center_y(int j) const { return domain_.y0 + (j + 0.5) * h_; }

    // Edge ids: [0, nx*ny) vertical (right face of cell (i,j)),
    // [nx*ny, 2*nx*ny) horizontal (top face of cell (i,j)).
    Edge edge(long id) const;
    Edge vertical_edge(int i, int j) const;
    Edge horizontal_edge(int i, int j) const;

private:
    Grid() = default;
    static int mod(int a, int n) { int r = a % n; return r < 0 ? r + n : r; }

    int nx_ = 0, ny_ = 0;
    Rect domain_;
    double h_ = 0.0;
};

// Piecewise-constant vector field: ncomp real values per cell, cell-major storage.
// Concurrent reads are fine; writers need exclusive access.
class CellField {
public:
    CellField(int ncomp, const Grid& grid)
        : ncomp_(ncomp), ncells_(grid.cell_count()), data_(static_cast<size_t>(ncomp) * ncells_, 0.0) {}

    int ncomp() const { return ncomp_; }
    int cell_count() const { return ncells_; }

    double& at(int cell, int c) { return data_[static_cast<size_t>(cell) * ncomp_ + c]; }
    double at(int cell, int c) const { return data_[static_cast<size_t>(cell) * ncomp_ + c]; }

    std::span<double> cell(int idx) { return {data_.data() + static_cast<size_t>(idx) * ncomp_, static_cast<size_t>(ncomp_)}; }
    std::span<const double> cell(int idx) const { return {data_.data() + static_cast<size_t>(idx) * ncomp_, static_cast<size_t>(ncomp_)}; }

    StateVec state(int idx) const {
        StateVec s{};
        for (int c = 0; c < ncomp_; ++c) s[c] = at(idx, c);
        return s;
    }
    void set_state(int idx, const StateVec& s) {
        for (int c = 0; c < ncomp_; ++c) at(idx, c) = s[c];
    }

    std::span<double> raw() { return data_; }
    std::span<const double> raw() const { return data_; }

    bool all_finite() const;

private:
    int ncomp_;
    int ncells_;
    std::vector<double> data_;
};

using PointFn = std::function<void(double x, double y, double* out)>;

// Cell-average projection of a pointwise function, tensor 3x3 Gauss per cell
// (exact through degree 5 per direction). Throws StateError if f returns a
// non-finite value, naming the offending cell.
CellField project(const Grid& grid, int ncomp, const PointFn& f);

// Interface operators; orientation fixed by the stored normal (jump = out - in).
StateVec edge_jump(const CellField& field, const Edge& edge);
StateVec edge_avg(const CellField& field, const Edge& edge);

} // namespace fveg
