#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <vector>

namespace onsager {

/// Allocator returning SIMD-aligned storage from fftw_malloc, so every
/// buffer can be passed to the new-array execute interface.
template <class T>
struct FftwAllocator {
    using value_type = T;
    FftwAllocator() = default;
    template <class U>
    FftwAllocator(const FftwAllocator<U>&) {}
    T* allocate(std::size_t count);
    void deallocate(T* p, std::size_t) noexcept;
    template <class U>
    bool operator==(const FftwAllocator<U>&) const { return true; }
};

void* fftw_aligned_alloc(std::size_t bytes);
void fftw_aligned_free(void* p) noexcept;

template <class T>
T* FftwAllocator<T>::allocate(std::size_t count) {
    if (count == 0) return nullptr;
    void* p = fftw_aligned_alloc(count * sizeof(T));
    if (!p) throw std::bad_alloc();
    return static_cast<T*>(p);
}

template <class T>
void FftwAllocator<T>::deallocate(T* p, std::size_t) noexcept {
    fftw_aligned_free(p);
}

using Complex = std::complex<double>;
using SpectralArray = std::vector<Complex, FftwAllocator<Complex>>;
using RealArray = std::vector<double, FftwAllocator<double>>;

/// Unnormalized 3D real transforms on an m^3 grid.
///
/// backward: half spectrum (m * m * (m/2+1)) -> m^3 samples, out = sum c_k e^{+ik.x}
/// forward:  m^3 samples -> half spectrum, out_k = sum u(x) e^{-ik.x}
///
/// Plans are created once per size and shared; execution is thread-safe.
class RealFft3 {
public:
    static const RealFft3& get(int m);

    int size() const { return m_; }
    /// `in` is used as scratch and is overwritten.
    void backward(SpectralArray& in, RealArray& out) const;
    void forward(RealArray& in, SpectralArray& out) const;

    RealFft3(const RealFft3&) = delete;
    RealFft3& operator=(const RealFft3&) = delete;
    ~RealFft3();

private:
    explicit RealFft3(int m);
    int m_;
    void* forward_plan_;
    void* backward_plan_;
};

}  // namespace onsager
