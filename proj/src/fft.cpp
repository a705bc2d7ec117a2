#include "onsager/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace onsager {

namespace {
// FFTW's planner is not reentrant.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

void* fftw_aligned_alloc(std::size_t bytes) { return fftw_malloc(bytes); }
void fftw_aligned_free(void* p) noexcept { fftw_free(p); }

RealFft3::RealFft3(int m) : m_(m) {
    const std::size_t nreal = static_cast<std::size_t>(m) * m * m;
    const std::size_t ncplx = static_cast<std::size_t>(m) * m * (m / 2 + 1);
    RealArray r(nreal);
    SpectralArray c(ncplx);
    auto* cp = reinterpret_cast<fftw_complex*>(c.data());
    forward_plan_ = fftw_plan_dft_r2c_3d(m, m, m, r.data(), cp, FFTW_ESTIMATE);
    backward_plan_ = fftw_plan_dft_c2r_3d(m, m, m, cp, r.data(), FFTW_ESTIMATE);
}

RealFft3::~RealFft3() {
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

const RealFft3& RealFft3::get(int m) {
    // Never destroyed: plans outlive every static that might still use them.
    static auto* cache = new std::map<int, std::unique_ptr<RealFft3>>();
    std::lock_guard lock(planner_mutex());
    auto it = cache->find(m);
    if (it == cache->end()) {
        it = cache->emplace(m, std::unique_ptr<RealFft3>(new RealFft3(m))).first;
    }
    return *it->second;
}

void RealFft3::backward(SpectralArray& in, RealArray& out) const {
    out.resize(static_cast<std::size_t>(m_) * m_ * m_);
    fftw_execute_dft_c2r(static_cast<fftw_plan>(backward_plan_),
                         reinterpret_cast<fftw_complex*>(in.data()), out.data());
}

void RealFft3::forward(RealArray& in, SpectralArray& out) const {
    out.resize(static_cast<std::size_t>(m_) * m_ * (m_ / 2 + 1));
    fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), in.data(),
                         reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace onsager
