#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "mhdcrit/grid.hpp"

namespace mhdcrit {

/// Real periodic grid function held in dual representation: real samples
/// and/or unnormalized spectral coefficients, each with a validity flag.
/// The value is logically const; representations are caches, so the
/// ensure/transform members are const. Fields are safe to move between
/// threads; concurrent const access from several threads requires the
/// needed representation to be materialized first.
class ScalarField {
  public:
    explicit ScalarField(GridPtr g)
        : grid_(std::move(g)), real_(grid_->total, 0.0), real_valid_(true) {}

    static ScalarField zeros(GridPtr g) { return ScalarField(std::move(g)); }

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }

    /// Make the spectral representation valid (forward transform). Idempotent.
    void to_spectral() const {
        if (spec_valid_) return;
        spec_.assign(grid_->total, cplx{});
        for (std::size_t i = 0; i < grid_->total; ++i) spec_[i] = cplx(real_[i], 0.0);
        grid_->forward(spec_.data());
        spec_valid_ = true;
    }

    /// Make the real representation valid (inverse transform with 1/N and
    /// imaginary parts dropped). Idempotent.
    void to_real() const {
        if (real_valid_) return;
        std::vector<cplx> work(spec_);
        grid_->inverse(work.data());
        const double inv_n = 1.0 / static_cast<double>(grid_->total);
        real_.resize(grid_->total);
        for (std::size_t i = 0; i < grid_->total; ++i) real_[i] = work[i].real() * inv_n;
        real_valid_ = true;
    }

    const std::vector<double>& real() const {
        to_real();
        return real_;
    }
    const std::vector<cplx>& spec() const {
        to_spectral();
        return spec_;
    }

    /// Mutable access invalidates the other representation.
    std::vector<double>& mutable_real() {
        to_real();
        spec_valid_ = false;
        return real_;
    }
    std::vector<cplx>& mutable_spec() {
        to_spectral();
        real_valid_ = false;
        return spec_;
    }

    /// Discard the current value and hand out a zeroed representation to
    /// fill in (skips the transform a mutable_* accessor would perform).
    std::vector<double>& overwrite_real() {
        real_.assign(grid_->total, 0.0);
        real_valid_ = true;
        spec_valid_ = false;
        return real_;
    }
    std::vector<cplx>& overwrite_spec() {
        spec_.assign(grid_->total, cplx{});
        spec_valid_ = true;
        real_valid_ = false;
        return spec_;
    }

    void set_real(std::vector<double> values) {
        real_ = std::move(values);
        real_valid_ = true;
        spec_valid_ = false;
    }
    void set_spec(std::vector<cplx> values) {
        spec_ = std::move(values);
        spec_valid_ = true;
        real_valid_ = false;
    }

    bool real_valid() const { return real_valid_; }
    bool spec_valid() const { return spec_valid_; }

    /// Canonical storage for States and snapshots: real samples only, the
    /// spectral cache dropped and re-derived deterministically on demand.
    void canonicalize() const {
        to_real();
        spec_valid_ = false;
        spec_.clear();
        spec_.shrink_to_fit();
    }

    double min() const {
        const auto& r = real();
        double m = r.empty() ? 0.0 : r[0];
        for (double v : r) m = std::min(m, v);
        return m;
    }
    double max() const {
        const auto& r = real();
        double m = r.empty() ? 0.0 : r[0];
        for (double v : r) m = std::max(m, v);
        return m;
    }
    double max_abs() const {
        const auto& r = real();
        double m = 0.0;
        for (double v : r) m = std::max(m, std::abs(v));
        return m;
    }

  private:
    GridPtr grid_;
    mutable std::vector<double> real_;
    mutable std::vector<cplx> spec_;
    mutable bool real_valid_ = false;
    mutable bool spec_valid_ = false;
};

/// dim ScalarField components sharing one grid.
class VectorField {
  public:
    explicit VectorField(GridPtr g) {
        const int d = g->dim;
        comps_.reserve(d);
        for (int c = 0; c < d; ++c) comps_.emplace_back(g);
    }

    static VectorField zeros(GridPtr g) { return VectorField(std::move(g)); }

    int dim() const { return static_cast<int>(comps_.size()); }
    const Grid& grid() const { return comps_[0].grid(); }
    const GridPtr& grid_ptr() const { return comps_[0].grid_ptr(); }

    ScalarField& operator[](int c) { return comps_[c]; }
    const ScalarField& operator[](int c) const { return comps_[c]; }

    void to_spectral() const {
        for (const auto& c : comps_) c.to_spectral();
    }
    void to_real() const {
        for (const auto& c : comps_) c.to_real();
    }
    void canonicalize() const {
        for (const auto& c : comps_) c.canonicalize();
    }

    /// Max over the grid of the pointwise Euclidean magnitude.
    double max_norm() const {
        const std::size_t total = grid().total;
        double m = 0.0;
        for (std::size_t i = 0; i < total; ++i) {
            double s = 0.0;
            for (const auto& c : comps_) {
                const double v = c.real()[i];
                s += v * v;
            }
            m = std::max(m, s);
        }
        return std::sqrt(m);
    }

  private:
    std::vector<ScalarField> comps_;
};

inline void check_same_grid(const Grid& a, const Grid& b) {
    if (!a.same_as(b)) throw GridMismatch("fields live on different grids");
}

// Elementwise arithmetic in real space (value-returning forms are for
// diagnostics and tests; solver internals use the in-place helpers).

inline void add_scaled(ScalarField& a, double alpha, const ScalarField& b) {
    check_same_grid(a.grid(), b.grid());
    auto& ra = a.mutable_real();
    const auto& rb = b.real();
    for (std::size_t i = 0; i < ra.size(); ++i) ra[i] += alpha * rb[i];
}

inline void add_scaled(VectorField& a, double alpha, const VectorField& b) {
    for (int c = 0; c < a.dim(); ++c) add_scaled(a[c], alpha, b[c]);
}

inline void scale(ScalarField& a, double alpha) {
    for (auto& v : a.mutable_real()) v *= alpha;
}

inline void scale(VectorField& a, double alpha) {
    for (int c = 0; c < a.dim(); ++c) scale(a[c], alpha);
}

inline ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    ScalarField out = a;
    add_scaled(out, 1.0, b);
    return out;
}

inline ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    ScalarField out = a;
    add_scaled(out, -1.0, b);
    return out;
}

inline ScalarField operator*(double alpha, const ScalarField& a) {
    ScalarField out = a;
    scale(out, alpha);
    return out;
}

inline VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    add_scaled(out, 1.0, b);
    return out;
}

inline VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    add_scaled(out, -1.0, b);
    return out;
}

inline VectorField operator*(double alpha, const VectorField& a) {
    VectorField out = a;
    scale(out, alpha);
    return out;
}

/// Pointwise product in real space, no dealiasing (see dealiased_product
/// in calculus.hpp for the nonlinear-term form).
inline ScalarField pointwise_product(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a.grid(), b.grid());
    ScalarField out(a.grid_ptr());
    auto& ro = out.mutable_real();
    const auto& ra = a.real();
    const auto& rb = b.real();
    for (std::size_t i = 0; i < ro.size(); ++i) ro[i] = ra[i] * rb[i];
    return out;
}

/// Fill from a function of physical coordinates (x, y[, z]).
template <class Fn>
ScalarField make_field(GridPtr g, Fn&& fn) {
    ScalarField f(g);
    auto& r = f.mutable_real();
    std::size_t idx = 0;
    for (int i0 = 0; i0 < g->n[0]; ++i0) {
        const double x = i0 * g->spacing[0];
        for (int i1 = 0; i1 < g->n[1]; ++i1) {
            const double y = i1 * g->spacing[1];
            for (int i2 = 0; i2 < g->n[2]; ++i2, ++idx) {
                const double z = i2 * g->spacing[2];
                r[idx] = fn(x, y, z);
            }
        }
    }
    return f;
}

}  // namespace mhdcrit
