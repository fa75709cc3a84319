#include "fveg/entropy.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <random>

#include "fveg/flux.hpp"
#include "quadrature.hpp"

namespace fveg {

namespace {

constexpr double quad_tol = 1e-10;

StateVec vec_from_cons(const EulerCons& U) { return {U.rho, U.mx, U.my, U.E}; }
EulerCons cons_from_vec(const StateVec& v) { return {v[0], v[1], v[2], v[3]}; }

} // namespace

double ec_viscosity_euler(const EulerCons& L, const EulerCons& R, int j, GasParams gas) {
    const EigenDecomp ed = euler_roe_eigen_x(L, R, gas);
    if (j < 0 || j >= ed.n) throw ConfigError("ec_viscosity: wave index out of range");
    const StateVec jump = {R.rho - L.rho, R.mx - L.mx, R.my - L.my, R.E - L.E};
    const auto alpha = ed.strengths(jump);

    StateVec left = vec_from_cons(L);
    for (int k = 0; k < j; ++k)
        for (int c = 0; c < 4; ++c) left[c] += alpha[k] * ed.r[k][c];
    StateVec mid = left;
    for (int c = 0; c < 4; ++c) mid[c] += 0.5 * alpha[j] * ed.r[j][c];

    const StateVec& r = ed.r[j];
    auto integrand = [&](double xi) {
        StateVec u{};
        for (int c = 0; c < 4; ++c) u[c] = mid[c] + xi * alpha[j] * r[c];
        const EulerCons U = cons_from_vec(u);
        const double eint = U.E - 0.5 * (U.mx * U.mx + U.my * U.my) / U.rho;
        if (!(U.rho > 0.0) || !(eint > 0.0))
            throw PathError("ec_viscosity: inadmissible path state (rho=" + std::to_string(U.rho) +
                            ", eint=" + std::to_string(eint) + ")");
        double A[4][4];
        euler_jacobian_x(U, gas, A);
        double quad = 0.0;
        for (int a = 0; a < 4; ++a) {
            double row = 0.0;
            for (int b = 0; b < 4; ++b) row += A[a][b] * r[b];
            quad += r[a] * row;
        }
        return 2.0 * xi * quad;
    };
    return detail::integrate_adaptive(integrand, -0.5, 0.5, quad_tol);
}

double ec_viscosity_wave(const StateVec& L, const StateVec& R, int j, WaveParams params) {
    const EigenDecomp ed = wave_eigen_x(params);
    if (j < 0 || j >= ed.n) throw ConfigError("ec_viscosity: wave index out of range");
    (void)L;
    (void)R;
    const StateVec& r = ed.r[j];
    // <A r, r> is constant along any path, so the odd-weighted integral vanishes.
    const double quad = params.c * (2.0 * r[0] * r[1]); // r^T A r, A = c [[0,1,0],[1,0,0],[0,0,0]]
    auto integrand = [&](double xi) { return 2.0 * xi * quad; };
    return detail::integrate_adaptive(integrand, -0.5, 0.5, quad_tol);
}

std::array<ViscosityBound, max_comp> check_viscosity_domination(const EulerCons& L,
                                                                const EulerCons& R,
                                                                GasParams gas) {
    const DissipationInfo info = euler_es_dissipation(L, R, gas);
    std::array<ViscosityBound, max_comp> out{};
    for (int j = 0; j < 4; ++j) {
        ViscosityBound b;
        b.lambda = info.ed.lambda[j];
        b.q_star = ec_viscosity_euler(L, R, j, gas);
        b.q_tilde = info.qtilde[j];
        b.margin = b.q_tilde - b.q_star;
        b.ok = b.q_star <= b.q_tilde + 1e-10;
        out[j] = b;
    }
    return out;
}

double bv_functional(const CellField& field, const Grid& grid) {
    double acc = 0.0;
    for (long id = 0; id < grid.edge_count(); ++id) {
        const StateVec jump = edge_jump(field, grid.edge(id));
        double n2 = 0.0;
        for (int c = 0; c < field.ncomp(); ++c) n2 += jump[c] * jump[c];
        acc += grid.edge_measure() * n2;
    }
    return acc;
}

double total_entropy_wave(const CellField& field, const Grid& grid) {
    double acc = 0.0;
    for (int cell = 0; cell < grid.cell_count(); ++cell) {
        const WaveState s{field.at(cell, 0), field.at(cell, 1), field.at(cell, 2)};
        acc += wave_entropy(s);
    }
    return acc * grid.cell_measure();
}

double total_entropy_euler(const CellField& field, const Grid& grid, GasParams gas) {
    double acc = 0.0;
    for (int cell = 0; cell < grid.cell_count(); ++cell) {
        const EulerCons U{field.at(cell, 0), field.at(cell, 1), field.at(cell, 2), field.at(cell, 3)};
        acc += euler_entropy(cons_to_prim(U, gas), gas);
    }
    return acc * grid.cell_measure();
}

CampaignResult run_viscosity_campaign(long n_samples, std::uint64_t seed, GasParams gas,
                                      const std::string& csv_path) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> rho_d(0.5, 2.0);
    std::uniform_real_distribution<double> vel_d(-1.0, 1.0);
    std::uniform_real_distribution<double> p_d(0.5, 2.0);
    std::uniform_real_distribution<double> rel_d(-0.05, 0.05);

    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw IoError("cannot open " + csv_path);
        csv << "sample,j,lambda,q_star,q_tilde,margin,ok\n";
        csv.precision(17);
    }

    CampaignResult res;
    res.min_margin = std::numeric_limits<double>::infinity();
    for (long s = 0; s < n_samples; ++s) {
        EulerPrim base{rho_d(rng), vel_d(rng), vel_d(rng), p_d(rng)};
        EulerCons UL{}, UR{};
        for (;;) {
            EulerPrim other = base;
            other.rho *= 1.0 + rel_d(rng);
            other.p *= 1.0 + rel_d(rng);
            other.u += rel_d(rng);
            other.v += rel_d(rng);
            UL = prim_to_cons(base, gas);
            UR = prim_to_cons(other, gas);
            const StateVec jump = {UR.rho - UL.rho, UR.mx - UL.mx, UR.my - UL.my, UR.E - UL.E};
            const StateVec mean = {0.5 * (UR.rho + UL.rho), 0.5 * (UR.mx + UL.mx),
                                   0.5 * (UR.my + UL.my), 0.5 * (UR.E + UL.E)};
            double jn = 0.0, mn = 0.0;
            for (int c = 0; c < 4; ++c) {
                jn += jump[c] * jump[c];
                mn += mean[c] * mean[c];
            }
            if (std::sqrt(jn) <= 0.1 * std::sqrt(mn)) break;
        }

        const auto report = check_viscosity_domination(UL, UR, gas);
        ++res.samples;
        for (int j = 0; j < 4; ++j) {
            ++res.checks;
            if (!report[j].ok) ++res.violations;
            res.min_margin = std::min(res.min_margin, report[j].margin);
            if (csv.is_open())
                csv << s << ',' << j << ',' << report[j].lambda << ',' << report[j].q_star << ','
                    << report[j].q_tilde << ',' << report[j].margin << ',' << (report[j].ok ? 1 : 0)
                    << '\n';
        }
    }
    return res;
}

} // namespace fveg
