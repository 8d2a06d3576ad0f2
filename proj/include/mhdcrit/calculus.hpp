#pragma once

#include "mhdcrit/fields.hpp"

namespace mhdcrit {

namespace detail {

/// Visit every mode with its derivative wavenumbers (Nyquist already zeroed).
template <class Fn>
void for_each_mode(const Grid& g, Fn&& fn) {
    std::size_t idx = 0;
    for (int i0 = 0; i0 < g.n[0]; ++i0) {
        const double k0 = g.deriv_k[0][i0];
        for (int i1 = 0; i1 < g.n[1]; ++i1) {
            const double k1 = g.deriv_k[1][i1];
            for (int i2 = 0; i2 < g.n[2]; ++i2, ++idx) {
                fn(idx, k0, k1, g.deriv_k[2][i2]);
            }
        }
    }
}

/// Same, also passing the per-axis 2/3-mask bit.
template <class Fn>
void for_each_mode_masked(const Grid& g, Fn&& fn) {
    std::size_t idx = 0;
    for (int i0 = 0; i0 < g.n[0]; ++i0) {
        const bool m0 = g.keep_23[0][i0] != 0;
        for (int i1 = 0; i1 < g.n[1]; ++i1) {
            const bool m01 = m0 && g.keep_23[1][i1] != 0;
            for (int i2 = 0; i2 < g.n[2]; ++i2, ++idx) {
                fn(idx, m01 && g.keep_23[2][i2] != 0);
            }
        }
    }
}

}  // namespace detail

/// Exact spectral differentiation: multiplication by i*k per axis.
inline VectorField gradient(const ScalarField& f) {
    const Grid& g = f.grid();
    const auto& fs = f.spec();
    VectorField out(f.grid_ptr());
    for (int d = 0; d < g.dim; ++d) {
        auto& os = out[d].overwrite_spec();
        detail::for_each_mode(g, [&](std::size_t idx, double k0, double k1, double k2) {
            const double kd = d == 0 ? k0 : (d == 1 ? k1 : k2);
            os[idx] = cplx(-kd * fs[idx].imag(), kd * fs[idx].real());
        });
    }
    return out;
}

inline ScalarField divergence(const VectorField& v) {
    const Grid& g = v.grid();
    v.to_spectral();
    ScalarField out(v.grid_ptr());
    auto& os = out.overwrite_spec();
    for (int d = 0; d < g.dim; ++d) {
        const auto& vs = v[d].spec();
        detail::for_each_mode(g, [&](std::size_t idx, double k0, double k1, double k2) {
            const double kd = d == 0 ? k0 : (d == 1 ? k1 : k2);
            os[idx] += cplx(-kd * vs[idx].imag(), kd * vs[idx].real());
        });
    }
    return out;
}

inline ScalarField laplacian(const ScalarField& f) {
    const Grid& g = f.grid();
    const auto& fs = f.spec();
    ScalarField out(f.grid_ptr());
    auto& os = out.overwrite_spec();
    detail::for_each_mode(g, [&](std::size_t idx, double k0, double k1, double k2) {
        os[idx] = -(k0 * k0 + k1 * k1 + k2 * k2) * fs[idx];
    });
    return out;
}

inline VectorField laplacian(const VectorField& v) {
    VectorField out(v.grid_ptr());
    for (int c = 0; c < v.dim(); ++c) out[c] = laplacian(v[c]);
    return out;
}

/// 2D curl (scalar vorticity): d0 v1 - d1 v0.
inline ScalarField curl2d(const VectorField& v) {
    const Grid& g = v.grid();
    if (g.dim != 2) throw GridMismatch("curl2d requires a 2D field");
    v.to_spectral();
    ScalarField out(v.grid_ptr());
    auto& os = out.overwrite_spec();
    const auto& v0 = v[0].spec();
    const auto& v1 = v[1].spec();
    detail::for_each_mode(g, [&](std::size_t idx, double k0, double k1, double) {
        const cplx a = cplx(-k0 * v1[idx].imag(), k0 * v1[idx].real());
        const cplx b = cplx(-k1 * v0[idx].imag(), k1 * v0[idx].real());
        os[idx] = a - b;
    });
    return out;
}

inline VectorField curl3d(const VectorField& v) {
    const Grid& g = v.grid();
    if (g.dim != 3) throw GridMismatch("curl3d requires a 3D field");
    v.to_spectral();
    VectorField out(v.grid_ptr());
    const auto& v0 = v[0].spec();
    const auto& v1 = v[1].spec();
    const auto& v2 = v[2].spec();
    auto& o0 = out[0].overwrite_spec();
    auto& o1 = out[1].overwrite_spec();
    auto& o2 = out[2].overwrite_spec();
    detail::for_each_mode(g, [&](std::size_t idx, double k0, double k1, double k2) {
        const cplx i0(0.0, k0), i1(0.0, k1), i2(0.0, k2);
        o0[idx] = i1 * v2[idx] - i2 * v1[idx];
        o1[idx] = i2 * v0[idx] - i0 * v2[idx];
        o2[idx] = i0 * v1[idx] - i1 * v0[idx];
    });
    return out;
}

/// Zero every mode outside the 2/3 ball, in place.
inline void apply_dealias(ScalarField& f) {
    auto& fs = f.mutable_spec();
    detail::for_each_mode_masked(f.grid(), [&](std::size_t idx, bool keep) {
        if (!keep) fs[idx] = cplx{};
    });
}

inline void apply_dealias(VectorField& v) {
    for (int c = 0; c < v.dim(); ++c) apply_dealias(v[c]);
}

/// Pointwise product with the 2/3-rule truncation applied to the result.
inline ScalarField dealiased_product(const ScalarField& f, const ScalarField& g) {
    ScalarField out = pointwise_product(f, g);
    apply_dealias(out);
    return out;
}

/// Remove the mean (k = 0) mode.
inline void remove_mean(ScalarField& f) {
    f.mutable_spec()[0] = cplx{};
}

inline void remove_mean(VectorField& v) {
    for (int c = 0; c < v.dim(); ++c) remove_mean(v[c]);
}

inline double mean(const ScalarField& f) {
    const auto& r = f.real();
    double acc = 0.0;
    for (double x : r) acc += x;
    return acc / static_cast<double>(r.size());
}

/// Per-mode projection I - k k^T/|k|^2 onto divergence-free fields, using
/// the same Nyquist-zeroed wavenumbers as the derivative operators so the
/// projected field is annihilated by `divergence` exactly. Modes with
/// |k| = 0 (the mean, and pure-Nyquist lines) pass through unchanged.
inline VectorField leray_project(const VectorField& v) {
    const Grid& g = v.grid();
    v.to_spectral();
    VectorField out(v.grid_ptr());
    const int dim = g.dim;
    std::array<const std::vector<cplx>*, 3> in{};
    std::array<std::vector<cplx>*, 3> os{};
    for (int c = 0; c < dim; ++c) {
        in[c] = &v[c].spec();
        os[c] = &out[c].overwrite_spec();
    }
    detail::for_each_mode(g, [&](std::size_t idx, double k0, double k1, double k2) {
        const double k[3] = {k0, k1, k2};
        const double k2sum = k0 * k0 + k1 * k1 + k2 * k2;
        if (k2sum == 0.0) {
            for (int c = 0; c < dim; ++c) (*os[c])[idx] = (*in[c])[idx];
            return;
        }
        cplx kdotv{};
        for (int c = 0; c < dim; ++c) kdotv += k[c] * (*in[c])[idx];
        kdotv /= k2sum;
        for (int c = 0; c < dim; ++c) (*os[c])[idx] = (*in[c])[idx] - k[c] * kdotv;
    });
    return out;
}

/// (a·∇)F with dealiased products, one truncation on the assembled sum.
inline VectorField advected(const VectorField& a, const VectorField& F) {
    const Grid& g = a.grid();
    check_same_grid(g, F.grid());
    a.to_real();
    VectorField out(a.grid_ptr());
    const std::size_t total = g.total;
    for (int i = 0; i < F.dim(); ++i) {
        VectorField dFi = gradient(F[i]);
        auto& acc = out[i].overwrite_real();
        for (int j = 0; j < a.dim(); ++j) {
            const auto& aj = a[j].real();
            const auto& dj = dFi[j].real();
            for (std::size_t idx = 0; idx < total; ++idx) acc[idx] += aj[idx] * dj[idx];
        }
        apply_dealias(out[i]);
    }
    return out;
}

/// (a·∇)f for a scalar f, dealiased.
inline ScalarField advected_scalar(const VectorField& a, const ScalarField& f) {
    const Grid& g = a.grid();
    check_same_grid(g, f.grid());
    a.to_real();
    VectorField df = gradient(f);
    ScalarField out(a.grid_ptr());
    auto& acc = out.overwrite_real();
    for (int j = 0; j < a.dim(); ++j) {
        const auto& aj = a[j].real();
        const auto& dj = df[j].real();
        for (std::size_t idx = 0; idx < g.total; ++idx) acc[idx] += aj[idx] * dj[idx];
    }
    apply_dealias(out);
    return out;
}

}  // namespace mhdcrit
