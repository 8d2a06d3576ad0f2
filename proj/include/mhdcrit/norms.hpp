#pragma once

#include "mhdcrit/calculus.hpp"

namespace mhdcrit {

/// L^2 inner product and norms go through Parseval on the coefficients;
/// every other L^p uses rectangle-rule quadrature with the uniform grid
/// weight (spectrally accurate for smooth periodic fields). All reductions
/// are serial so results are bit-deterministic.

inline double parseval_scale(const Grid& g) {
    const double n = static_cast<double>(g.total);
    return g.volume() / (n * n);
}

inline double inner_product(const ScalarField& f, const ScalarField& g) {
    check_same_grid(f.grid(), g.grid());
    const auto& fs = f.spec();
    const auto& gs = g.spec();
    double acc = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i)
        acc += fs[i].real() * gs[i].real() + fs[i].imag() * gs[i].imag();
    return acc * parseval_scale(f.grid());
}

inline double inner_product(const VectorField& u, const VectorField& v) {
    double acc = 0.0;
    for (int c = 0; c < u.dim(); ++c) acc += inner_product(u[c], v[c]);
    return acc;
}

inline double l2_norm_sq(const ScalarField& f) {
    const auto& fs = f.spec();
    double acc = 0.0;
    for (const auto& c : fs) acc += c.real() * c.real() + c.imag() * c.imag();
    return acc * parseval_scale(f.grid());
}

inline double l2_norm_sq(const VectorField& v) {
    double acc = 0.0;
    for (int c = 0; c < v.dim(); ++c) acc += l2_norm_sq(v[c]);
    return acc;
}

inline double l2_norm(const ScalarField& f) { return std::sqrt(l2_norm_sq(f)); }
inline double l2_norm(const VectorField& v) { return std::sqrt(l2_norm_sq(v)); }

/// L^p norm, p in {2,3,4,6}; p = 2 delegates to Parseval.
inline double lp_norm(const ScalarField& f, int p) {
    if (p == 2) return l2_norm(f);
    if (p != 3 && p != 4 && p != 6) throw Error("lp_norm supports p in {2,3,4,6}");
    const auto& r = f.real();
    double acc = 0.0;
    for (double v : r) {
        const double a2 = v * v;
        acc += (p == 3) ? a2 * std::abs(v) : (p == 4 ? a2 * a2 : a2 * a2 * a2);
    }
    return std::pow(acc * f.grid().cell_volume, 1.0 / p);
}

/// L^p norm of the pointwise Euclidean magnitude |v(x)|.
inline double lp_norm(const VectorField& v, int p) {
    if (p != 2 && p != 3 && p != 4 && p != 6) throw Error("lp_norm supports p in {2,3,4,6}");
    if (p == 2) return l2_norm(v);
    v.to_real();
    const std::size_t total = v.grid().total;
    double acc = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
        double m2 = 0.0;
        for (int c = 0; c < v.dim(); ++c) {
            const double x = v[c].real()[i];
            m2 += x * x;
        }
        acc += (p == 4) ? m2 * m2 : (p == 6 ? m2 * m2 * m2 : std::pow(m2, 1.5));
    }
    return std::pow(acc * v.grid().cell_volume, 1.0 / p);
}

/// |∇f|_{L^2}^2 via the |k|^2 multiplier (consistent with `gradient`).
inline double h1_seminorm_sq(const ScalarField& f) {
    const Grid& g = f.grid();
    const auto& fs = f.spec();
    double acc = 0.0;
    detail::for_each_mode(g, [&](std::size_t idx, double k0, double k1, double k2) {
        const double k2sum = k0 * k0 + k1 * k1 + k2 * k2;
        acc += k2sum * (fs[idx].real() * fs[idx].real() + fs[idx].imag() * fs[idx].imag());
    });
    return acc * parseval_scale(g);
}

inline double h1_seminorm_sq(const VectorField& v) {
    double acc = 0.0;
    for (int c = 0; c < v.dim(); ++c) acc += h1_seminorm_sq(v[c]);
    return acc;
}

/// |∇²f|_{L^2}^2 = sum over modes of |k|^4 |f̂|^2.
inline double hess_seminorm_sq(const ScalarField& f) {
    const Grid& g = f.grid();
    const auto& fs = f.spec();
    double acc = 0.0;
    detail::for_each_mode(g, [&](std::size_t idx, double k0, double k1, double k2) {
        const double k2sum = k0 * k0 + k1 * k1 + k2 * k2;
        acc += k2sum * k2sum *
               (fs[idx].real() * fs[idx].real() + fs[idx].imag() * fs[idx].imag());
    });
    return acc * parseval_scale(g);
}

inline double hess_seminorm_sq(const VectorField& v) {
    double acc = 0.0;
    for (int c = 0; c < v.dim(); ++c) acc += hess_seminorm_sq(v[c]);
    return acc;
}

inline double sobolev_h1_seminorm(const VectorField& v) {
    return std::sqrt(h1_seminorm_sq(v));
}

/// Full H² norm: (‖v‖² + ‖∇v‖² + ‖∇²v‖²)^{1/2}.
inline double sobolev_h2_norm(const VectorField& v) {
    return std::sqrt(l2_norm_sq(v) + h1_seminorm_sq(v) + hess_seminorm_sq(v));
}

inline double curl_l2_sq(const VectorField& v) {
    if (v.grid().dim == 2) return l2_norm_sq(curl2d(v));
    return l2_norm_sq(curl3d(v));
}

/// Pointwise Frobenius magnitude squared of the Hessian tensor of every
/// component, |∇²v|²(x) = Σ_{c,i,j} (∂i∂j v_c)².
inline ScalarField hessian_magnitude_sq(const VectorField& v) {
    const Grid& g = v.grid();
    ScalarField out(v.grid_ptr());
    auto& acc = out.overwrite_real();
    for (int c = 0; c < v.dim(); ++c) {
        const auto& vs = v[c].spec();
        for (int di = 0; di < g.dim; ++di) {
            for (int dj = di; dj < g.dim; ++dj) {
                ScalarField dd(v.grid_ptr());
                auto& ds = dd.overwrite_spec();
                detail::for_each_mode(
                    g, [&](std::size_t idx, double k0, double k1, double k2) {
                        const double k[3] = {k0, k1, k2};
                        ds[idx] = -k[di] * k[dj] * vs[idx];
                    });
                const auto& dr = dd.real();
                const double mult = (di == dj) ? 1.0 : 2.0;
                for (std::size_t i = 0; i < g.total; ++i) acc[i] += mult * dr[i] * dr[i];
            }
        }
    }
    return out;
}

/// Pointwise |∇v|²(x) = Σ_{c,j} (∂j v_c)².
inline ScalarField gradient_magnitude_sq(const VectorField& v) {
    const Grid& g = v.grid();
    ScalarField out(v.grid_ptr());
    auto& acc = out.overwrite_real();
    for (int c = 0; c < v.dim(); ++c) {
        VectorField dv = gradient(v[c]);
        for (int j = 0; j < g.dim; ++j) {
            const auto& dr = dv[j].real();
            for (std::size_t i = 0; i < g.total; ++i) acc[i] += dr[i] * dr[i];
        }
    }
    return out;
}

inline ScalarField gradient_magnitude_sq(const ScalarField& f) {
    const Grid& g = f.grid();
    VectorField df = gradient(f);
    ScalarField out(f.grid_ptr());
    auto& acc = out.overwrite_real();
    for (int j = 0; j < g.dim; ++j) {
        const auto& dr = df[j].real();
        for (std::size_t i = 0; i < g.total; ++i) acc[i] += dr[i] * dr[i];
    }
    return out;
}

/// L^6 norm of the pointwise Hessian magnitude |∇²v|(x).
inline double l6_norm_second_derivatives(const VectorField& v) {
    ScalarField m2 = hessian_magnitude_sq(v);
    const auto& r = m2.real();
    double acc = 0.0;
    for (double x : r) acc += x * x * x;  // (|∇²v|²)³ = |∇²v|⁶
    return std::pow(acc * v.grid().cell_volume, 1.0 / 6.0);
}

/// ‖v‖_{W^{2,6}}² = ‖v‖_6² + ‖∇v‖_6² + ‖∇²v‖_6² with pointwise magnitudes.
inline double w26_norm_sq(const VectorField& v) {
    const double l6 = lp_norm(v, 6);
    ScalarField g2 = gradient_magnitude_sq(v);
    const auto& gr = g2.real();
    double acc = 0.0;
    for (double x : gr) acc += x * x * x;
    const double g6 = std::pow(acc * v.grid().cell_volume, 1.0 / 6.0);
    const double h6 = l6_norm_second_derivatives(v);
    return l6 * l6 + g6 * g6 + h6 * h6;
}

/// Relative spectral divergence residual ‖div v‖₂ / ‖v‖₂ (0 for v = 0).
inline double div_rel_residual(const VectorField& v) {
    const double vn = l2_norm(v);
    if (vn == 0.0) return 0.0;
    return l2_norm(divergence(v)) / vn;
}

}  // namespace mhdcrit
