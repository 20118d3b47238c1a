// Self-contained complex DFT: iterative radix-2 for powers of two,
// Bluestein's chirp-z for other (even) sizes. Sizes here stay <= 2^15,
// so no planning machinery is needed beyond a twiddle cache.
#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <unordered_map>
#include <vector>

namespace fraclab::detail {

using cd = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

inline const std::vector<cd>& twiddles(std::size_t n) {
    thread_local std::unordered_map<std::size_t, std::vector<cd>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cd> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        double a = -2.0 * M_PI * double(k) / double(n);
        w[k] = cd(std::cos(a), std::sin(a));
    }
    return cache.emplace(n, std::move(w)).first->second;
}

// In-place DFT with kernel e^{-2pi i jk/n}; inverse applies conj and 1/n.
inline void fft_pow2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    assert(is_pow2(n));
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& w = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cd t = inverse ? std::conj(w[k * step]) : w[k * step];
                cd u = a[i + k], v = a[i + k + len / 2] * t;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse)
        for (auto& z : a) z /= double(n);
}

inline void fft(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if (is_pow2(n)) { fft_pow2(a, inverse); return; }
    // Bluestein: x_j w^{j^2/2} convolved with w^{-k^2/2} chirp
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<cd> chirp(n);
    for (std::size_t j = 0; j < n; ++j) {
        // j^2 mod 2n keeps the angle argument bounded
        std::size_t q = (j * j) % (2 * n);
        double ang = (inverse ? 1.0 : -1.0) * M_PI * double(q) / double(n);
        chirp[j] = cd(std::cos(ang), std::sin(ang));
    }
    std::vector<cd> A(m, cd(0, 0)), B(m, cd(0, 0));
    for (std::size_t j = 0; j < n; ++j) A[j] = a[j] * chirp[j];
    B[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < n; ++j) B[j] = B[m - j] = std::conj(chirp[j]);
    fft_pow2(A, false);
    fft_pow2(B, false);
    for (std::size_t j = 0; j < m; ++j) A[j] *= B[j];
    fft_pow2(A, true);
    for (std::size_t j = 0; j < n; ++j) a[j] = A[j] * chirp[j];
    if (inverse)
        for (auto& z : a) z /= double(n);
}

} // namespace fraclab::detail
