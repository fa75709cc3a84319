#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "fveg/euler.hpp"
#include "fveg/flux.hpp"
#include "fveg/grid.hpp"
#include "fveg/wave.hpp"

namespace fveg {

enum class SystemKind { Wave, Euler };

// A benchmark problem: metadata, initial condition, optional exact solution.
// State functions return the scheme's evolved variables ((phi,u,v) for the
// wave system, conserved (rho,mx,my,E) for Euler).
struct ProblemSpec {
    std::string name;
    SystemKind system = SystemKind::Euler;
    Rect domain;
    GasParams gas;
    WaveParams wave;
    double t_final_default = 1.0;
    double cfl_default = 0.45;
    FluxMode default_mode = FluxMode::EgWithFallback;

    bool has_exact = false;
    bool exact_integer_times_only = false;

    // Piecewise-constant four-quadrant data (2D Riemann problems); when set,
    // the projection splits straddling cells analytically instead of using
    // Gauss quadrature.
    bool quadrant_data = false;
    std::array<StateVec, 4> quadrant_states{}; // NE, NW, SW, SE
    double split_x = 0.5, split_y = 0.5;

    std::function<void(double x, double y, double t, double* out)> state_fn;

    int ncomp() const { return system == SystemKind::Wave ? 3 : 4; }
};

const std::vector<std::string>& problem_names();

// wave-sine | gresho | traveling-vortex | riemann-4shock | riemann-spiral
ProblemSpec make_problem(const std::string& name); // throws ConfigError

// Cell-average projection of the initial data onto the grid.
CellField initial_field(const ProblemSpec& spec, const Grid& grid);

// Projected exact solution at time t. Throws CapabilityError if the problem
// has no exact solution (or only has one at integer times).
CellField exact_solution(const ProblemSpec& spec, const Grid& grid, double t);

// Radial pressure profile of the traveling vortex, reconstructed from the
// centrifugal balance dp/dr = rho(r) u_theta(r)^2 / r with p(r>=1) = p_c.
double vortex_pressure(double r);

} // namespace fveg
