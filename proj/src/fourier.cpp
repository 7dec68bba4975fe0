#include "mikado/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "mikado/error.hpp"

namespace mikado {

namespace {

// The FFTW planner is not re-entrant; plan creation and destruction go through this lock.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const FourierGrid& FourierGrid::instance(int dim, std::size_t n) {
    // Construct the planner lock first so it outlives the cached plans at exit.
    [[maybe_unused]] static std::mutex& planner = planner_mutex();
    static std::mutex cache_mutex;
    static std::map<std::pair<int, std::size_t>, std::unique_ptr<FourierGrid>> cache;
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[{dim, n}];
    if (!slot) slot.reset(new FourierGrid(dim, n));
    return *slot;
}

FourierGrid::FourierGrid(int dim, std::size_t n) : dim_(dim), n_(n) {
    if (dim < 1 || n < 2) throw InvalidArgument("fourier grid: need d >= 1 and N >= 2");
    real_size_ = 1;
    for (int j = 0; j < dim; ++j) real_size_ *= n;
    const std::size_t last = n / 2 + 1;
    spectral_size_ = real_size_ / n * last;

    wavenumbers_.assign(static_cast<std::size_t>(dim), std::vector<int>(spectral_size_));
    for (std::size_t idx = 0; idx < spectral_size_; ++idx) {
        std::size_t rest = idx;
        const std::size_t i_last = rest % last;
        rest /= last;
        wavenumbers_[static_cast<std::size_t>(dim - 1)][idx] = static_cast<int>(i_last);
        for (int j = dim - 2; j >= 0; --j) {
            const std::size_t i = rest % n;
            rest /= n;
            const int k = (2 * i <= n) ? static_cast<int>(i) : static_cast<int>(i) - static_cast<int>(n);
            wavenumbers_[static_cast<std::size_t>(j)][idx] = k;
        }
    }

    std::vector<int> dims(static_cast<std::size_t>(dim), static_cast<int>(n));
    std::vector<double> rbuf(real_size_);
    std::vector<Complex> cbuf(spectral_size_);
    std::lock_guard lock(planner_mutex());
    forward_plan_ = fftw_plan_dft_r2c(dim, dims.data(), rbuf.data(),
                                      reinterpret_cast<fftw_complex*>(cbuf.data()),
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    inverse_plan_ = fftw_plan_dft_c2r(dim, dims.data(), reinterpret_cast<fftw_complex*>(cbuf.data()),
                                      rbuf.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!forward_plan_ || !inverse_plan_) throw Error("fourier grid: FFTW planning failed");
}

FourierGrid::~FourierGrid() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
}

void FourierGrid::forward(std::span<const double> in, std::span<Complex> out) const {
    // r2c out-of-place transforms preserve their input.
    fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), const_cast<double*>(in.data()),
                         reinterpret_cast<fftw_complex*>(out.data()));
}

void FourierGrid::inverse(std::span<Complex> in, std::span<double> out) const {
    fftw_execute_dft_c2r(static_cast<fftw_plan>(inverse_plan_), reinterpret_cast<fftw_complex*>(in.data()),
                         out.data());
    const double scale = 1.0 / static_cast<double>(real_size_);
    for (double& v : out) v *= scale;
}

double FourierGrid::norm2(std::size_t index) const {
    double s = 0.0;
    for (int j = 0; j < dim_; ++j) {
        const double k = wavenumber(j, index);
        s += k * k;
    }
    return s;
}

double FourierGrid::derivative_norm2(std::size_t index) const {
    double s = 0.0;
    for (int j = 0; j < dim_; ++j) {
        const double k = derivative_wavenumber(j, index);
        s += k * k;
    }
    return s;
}

}  // namespace mikado
