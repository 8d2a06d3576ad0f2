#pragma once

#include "mhdcrit/fields.hpp"

namespace mhdcrit {

struct PhysicalParams {
    double mu = 0.05;       // kinematic viscosity
    double lambda = 0.05;   // magnetic diffusivity
    double rho_bar = 1.0;   // density upper bound
    double rho_floor = -1.0;  // pressure-solve floor; < 0 selects 1e-3*rho_bar

    void validate() {
        if (!(mu > 0.0)) throw ConfigError("mu must be positive");
        if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
        if (!(rho_bar > 0.0)) throw ConfigError("rho_bar must be positive");
        if (rho_floor < 0.0) rho_floor = 1e-3 * rho_bar;
        if (!(rho_floor < rho_bar)) throw ConfigError("rho_floor must be below rho_bar");
    }
};

/// The solver's unit of evolution: (t, ρ, u, H) plus the latest pressure.
/// States are treated as immutable values; a step produces a new State and
/// canonicalizes its fields (real samples primary) so that checkpointed
/// and in-memory continuations are bit-identical.
struct State {
    explicit State(GridPtr g) : t(0.0), rho(g), u(g), h(g), p(g) {}

    double t;
    ScalarField rho;
    VectorField u;
    VectorField h;
    ScalarField p;

    const Grid& grid() const { return rho.grid(); }
    const GridPtr& grid_ptr() const { return rho.grid_ptr(); }

    void canonicalize() const {
        rho.canonicalize();
        u.canonicalize();
        h.canonicalize();
        p.canonicalize();
    }
};

struct StepReport {
    double dt_used = 0.0;
    int pressure_iters = 0;        // summed over the projection solves
    double pressure_residual = 0.0;  // worst relative residual among them
    double cfl = 0.0;              // advective CFL of the step
};

struct SolverOptions {
    double pressure_tol = 1e-10;
    int pressure_max_iters = 500;
    double viscous_tol = 1e-11;
    int viscous_max_iters = 400;
    double predictor_tol = 1e-8;  // projection tolerance of the provisional pass
    double cfl_hard_cap = 5.0;
    double dt_max = 1.0;
};

struct DtPolicy {
    enum class Kind { fixed, cfl };
    Kind kind = Kind::cfl;
    double fixed_dt = 0.01;
    double safety = 0.5;
};

}  // namespace mhdcrit
