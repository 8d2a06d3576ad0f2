#pragma once

#include "mhdcrit/parallel.hpp"
#include "mhdcrit/state.hpp"

namespace mhdcrit {

namespace detail {

inline int wrap_index(int j, int n) {
    j %= n;
    return j < 0 ? j + n : j;
}

/// 4-point cubic Lagrange weights at nodes {-1,0,1,2} for offset theta in [0,1).
inline void cubic_weights(double theta, double w[4]) {
    const double t = theta;
    w[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
    w[1] = (t * t - 1.0) * (t - 2.0) / 2.0;
    w[2] = -t * (t + 1.0) * (t - 2.0) / 2.0;
    w[3] = t * (t * t - 1.0) / 6.0;
}

struct InterpStencil {
    int idx[3][4];
    double w[3][4];
    int corner[3][2];  // floor cell corners, for the monotone clamp
    int count[3];
};

/// Build the per-axis stencil for a point given in grid units.
inline InterpStencil make_stencil(const Grid& g, const double s[3]) {
    InterpStencil st{};
    for (int d = 0; d < 3; ++d) {
        if (d >= g.dim) {
            st.count[d] = 1;
            st.idx[d][0] = 0;
            st.w[d][0] = 1.0;
            st.corner[d][0] = st.corner[d][1] = 0;
            continue;
        }
        const int n = g.n[d];
        const double fl = std::floor(s[d]);
        const double theta = s[d] - fl;
        const int b = static_cast<int>(fl);
        st.count[d] = 4;
        cubic_weights(theta, st.w[d]);
        for (int o = 0; o < 4; ++o) st.idx[d][o] = wrap_index(b - 1 + o, n);
        st.corner[d][0] = wrap_index(b, n);
        st.corner[d][1] = wrap_index(b + 1, n);
    }
    return st;
}

inline double interp_cubic(const std::vector<double>& a, const Grid& g,
                           const InterpStencil& st) {
    const int n1 = g.n[1], n2 = g.n[2];
    double val = 0.0;
    for (int o0 = 0; o0 < st.count[0]; ++o0) {
        const std::size_t base0 = static_cast<std::size_t>(st.idx[0][o0]) * n1;
        double acc0 = 0.0;
        for (int o1 = 0; o1 < st.count[1]; ++o1) {
            const std::size_t base1 = (base0 + st.idx[1][o1]) * n2;
            double acc1 = 0.0;
            for (int o2 = 0; o2 < st.count[2]; ++o2)
                acc1 += st.w[2][o2] * a[base1 + st.idx[2][o2]];
            acc0 += st.w[1][o1] * acc1;
        }
        val += st.w[0][o0] * acc0;
    }
    return val;
}

/// Cubic value clipped to the min/max of the surrounding cell corners:
/// no new extrema, so pointwise bounds of the field are preserved exactly.
inline double interp_cubic_clamped(const std::vector<double>& a, const Grid& g,
                                   const InterpStencil& st) {
    const double raw = interp_cubic(a, g, st);
    const int n1 = g.n[1], n2 = g.n[2];
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int c0 = 0; c0 < (g.dim >= 1 ? 2 : 1); ++c0) {
        for (int c1 = 0; c1 < (g.dim >= 2 ? 2 : 1); ++c1) {
            for (int c2 = 0; c2 < (g.dim >= 3 ? 2 : 1); ++c2) {
                const std::size_t idx =
                    (static_cast<std::size_t>(st.corner[0][c0]) * n1 + st.corner[1][c1]) *
                        n2 +
                    st.corner[2][c2];
                const double v = a[idx];
                if (first) {
                    lo = hi = v;
                    first = false;
                } else {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
        }
    }
    return std::min(hi, std::max(lo, raw));
}

}  // namespace detail

/// Semi-Lagrangian transport of ρ by a frozen velocity field over dt:
/// the characteristic foot point is traced with a second-order midpoint
/// integrator (velocity sampled by unclamped cubic interpolation), and ρ
/// is interpolated with the clamped cubic, so min/max bounds of the input
/// transfer to the output exactly and vacuum stays nonnegative.
inline ScalarField advect_density(const ScalarField& rho, const VectorField& u,
                                  double dt, double cfl_cap = 5.0) {
    const Grid& g = rho.grid();
    check_same_grid(g, u.grid());
    if (!(dt > 0.0)) throw Error("advect_density requires dt > 0");

    const double umax = u.max_norm();
    const double cfl = dt * umax / g.min_spacing;
    if (cfl > cfl_cap)
        throw StepRejected("advective CFL " + std::to_string(cfl) + " above hard cap", cfl);

    rho.to_real();
    u.to_real();
    const auto& r = rho.real();
    const int dim = g.dim;
    const std::array<const std::vector<double>*, 3> uc = {
        &u[0].real(), &u[1].real(), dim == 3 ? &u[2].real() : nullptr};

    ScalarField out(rho.grid_ptr());
    auto& ro = out.overwrite_real();
    const int n1 = g.n[1], n2 = g.n[2];

    parallel_for(g.total, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const int i2 = static_cast<int>(idx % n2);
            const std::size_t t01 = idx / n2;
            const int i1 = static_cast<int>(t01 % n1);
            const int i0 = static_cast<int>(t01 / n1);
            const double s[3] = {static_cast<double>(i0), static_cast<double>(i1),
                                 static_cast<double>(i2)};

            // half step back with the nodal velocity
            double mid[3] = {s[0], s[1], s[2]};
            for (int d = 0; d < dim; ++d)
                mid[d] -= 0.5 * dt * (*uc[d])[idx] / g.spacing[d];

            // full step back with the midpoint velocity
            const auto stm = detail::make_stencil(g, mid);
            double foot[3] = {s[0], s[1], s[2]};
            for (int d = 0; d < dim; ++d)
                foot[d] -= dt * detail::interp_cubic(*uc[d], g, stm) / g.spacing[d];

            const auto stf = detail::make_stencil(g, foot);
            ro[idx] = detail::interp_cubic_clamped(r, g, stf);
        }
    });
    return out;
}

}  // namespace mhdcrit
