#pragma once

#include <fftw3.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "mhdcrit/errors.hpp"

namespace mhdcrit {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Uniform periodic grid on [0,L)^dim and the spectral conventions used by
/// everything above it:
///
///  - storage is row-major over axes, index = (i0*n1 + i1)*n2 + i2;
///  - the forward DFT is unnormalized, the inverse carries 1/(n0*n1*n2);
///  - integer frequencies per axis run over [-n/2, n/2]; the derivative
///    tables zero the Nyquist frequency so odd derivatives of real fields
///    stay real;
///  - the 2/3-rule dealias mask keeps |k| <= floor(n/3) on every axis;
///  - L^2 quantities are evaluated by Parseval on the coefficients, other
///    L^p norms by rectangle-rule quadrature with weight prod(L/n).
///
/// A Grid owns its FFTW plans (c2c, FFTW_ESTIMATE | FFTW_UNALIGNED, so
/// planning is deterministic and any buffer of the right size can be
/// transformed in place).
class Grid {
  public:
    Grid(int dim_, std::array<int, 3> n_, std::array<double, 3> box_)
        : dim(dim_), n(n_), box(box_) {
        if (dim != 2 && dim != 3) throw ConfigError("grid dim must be 2 or 3");
        total = 1;
        for (int d = 0; d < 3; ++d) {
            if (d >= dim) {
                n[d] = 1;
                box[d] = 1.0;
            } else {
                if (n[d] < 8 || n[d] % 2 != 0)
                    throw ConfigError("grid n must be even and >= 8 on every axis");
                if (!(box[d] > 0.0)) throw ConfigError("box length must be positive");
            }
            total *= static_cast<std::size_t>(n[d]);
        }
        cell_volume = 1.0;
        min_spacing = 0.0;
        for (int d = 0; d < dim; ++d) {
            spacing[d] = box[d] / n[d];
            cell_volume *= spacing[d];
            min_spacing = (d == 0) ? spacing[d] : std::min(min_spacing, spacing[d]);
        }
        for (int d = dim; d < 3; ++d) spacing[d] = 1.0;

        for (int d = 0; d < 3; ++d) {
            const int nd = n[d];
            k_index[d].resize(nd);
            deriv_k[d].resize(nd);
            keep_23[d].assign(nd, 1);
            const double scale = (d < dim) ? kTwoPi / box[d] : 0.0;
            const int kmax_keep = nd / 3;
            for (int i = 0; i < nd; ++i) {
                const int k = (i <= nd / 2) ? i : i - nd;
                k_index[d][i] = k;
                const bool nyquist = (nd % 2 == 0 && i == nd / 2);
                deriv_k[d][i] = nyquist ? 0.0 : scale * k;
                if (std::abs(k) > kmax_keep) keep_23[d][i] = 0;
            }
        }

        std::lock_guard<std::mutex> lock(planner_mutex());
        std::vector<cplx> tmp(total);
        auto* p = reinterpret_cast<fftw_complex*>(tmp.data());
        int dims[3] = {n[0], n[1], n[2]};
        fwd_ = fftw_plan_dft(dim, dims, p, p, FFTW_FORWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
        bwd_ = fftw_plan_dft(dim, dims, p, p, FFTW_BACKWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!fwd_ || !bwd_) throw Error("fftw plan creation failed");
    }

    ~Grid() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        if (fwd_) fftw_destroy_plan(fwd_);
        if (bwd_) fftw_destroy_plan(bwd_);
    }

    Grid(const Grid&) = delete;
    Grid& operator=(const Grid&) = delete;

    static std::shared_ptr<const Grid> make(int dim, int n, double box_length = kTwoPi) {
        return std::make_shared<const Grid>(dim, std::array<int, 3>{n, n, n},
                                            std::array<double, 3>{box_length, box_length,
                                                                  box_length});
    }

    static std::shared_ptr<const Grid> make(int dim, std::array<int, 3> n,
                                            std::array<double, 3> box) {
        return std::make_shared<const Grid>(dim, n, box);
    }

    /// In-place unnormalized transforms.
    void forward(cplx* data) const {
        auto* p = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(fwd_, p, p);
    }
    void inverse(cplx* data) const {
        auto* p = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(bwd_, p, p);
    }

    bool same_as(const Grid& o) const {
        if (dim != o.dim) return false;
        for (int d = 0; d < dim; ++d)
            if (n[d] != o.n[d] || box[d] != o.box[d]) return false;
        return true;
    }

    double volume() const {
        double v = 1.0;
        for (int d = 0; d < dim; ++d) v *= box[d];
        return v;
    }

    int dim;
    std::array<int, 3> n;
    std::array<double, 3> box;
    std::size_t total = 0;
    double cell_volume = 1.0;
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    double min_spacing = 1.0;

    std::array<std::vector<int>, 3> k_index;
    std::array<std::vector<double>, 3> deriv_k;
    std::array<std::vector<std::uint8_t>, 3> keep_23;

  private:
    static std::mutex& planner_mutex() {
        static std::mutex m;
        return m;
    }
    fftw_plan fwd_ = nullptr;
    fftw_plan bwd_ = nullptr;
};

using GridPtr = std::shared_ptr<const Grid>;

}  // namespace mhdcrit
