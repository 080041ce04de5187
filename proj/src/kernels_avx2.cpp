// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 variants of the batch kernels. This translation unit is compiled with
// -mavx2; it must only be reached through the runtime dispatch in
// kernels_dispatch.cpp, which checks CPU support first.

#include "dipole/kernels.hpp"

#include "kernels_detail.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace dipole::kernels {
namespace {

inline __m256d neg(__m256d v) { return _mm256_xor_pd(v, _mm256_set1_pd(-0.0)); }

void map_points_avx2(const AxisMap& m, const double* t, double* x, double* jac, std::size_t n,
                     bool accumulate) {
    const std::size_t n4 = n & ~std::size_t{3};
    const __m256d p0 = _mm256_set1_pd(m.p0);
    const __m256d p1 = _mm256_set1_pd(m.p1);
    const __m256d one = _mm256_set1_pd(1.0);

    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d tv = _mm256_loadu_pd(t + i);
        __m256d xv, jv;
        switch (m.kind) {
            case MapKind::affine: {
                xv = _mm256_add_pd(p0, _mm256_mul_pd(p1, tv));
                jv = p1;
                break;
            }
            case MapKind::semi_inf_lo: {
                const __m256d om = _mm256_sub_pd(one, tv);
                xv = _mm256_add_pd(p0, _mm256_mul_pd(p1, _mm256_div_pd(tv, om)));
                jv = _mm256_div_pd(_mm256_div_pd(p1, om), om);
                break;
            }
            case MapKind::semi_inf_hi: {
                const __m256d om = _mm256_sub_pd(one, tv);
                xv = _mm256_sub_pd(p0, _mm256_mul_pd(p1, _mm256_div_pd(om, tv)));
                jv = _mm256_div_pd(_mm256_div_pd(p1, tv), tv);
                break;
            }
            case MapKind::bi_inf: {
                const __m256d two = _mm256_set1_pd(2.0);
                const __m256d u = _mm256_sub_pd(_mm256_mul_pd(two, tv), one);
                const __m256d uu = _mm256_mul_pd(u, u);
                const __m256d den = _mm256_sub_pd(one, uu);
                xv = _mm256_add_pd(p0, _mm256_mul_pd(p1, _mm256_div_pd(u, den)));
                const __m256d p12 = _mm256_set1_pd(m.p1 * 2.0);
                jv = _mm256_mul_pd(
                    p12, _mm256_div_pd(_mm256_add_pd(one, uu), _mm256_mul_pd(den, den)));
                break;
            }
            default:
                xv = tv;
                jv = one;
                break;
        }
        _mm256_storeu_pd(x + i, xv);
        if (accumulate) {
            _mm256_storeu_pd(jac + i, _mm256_mul_pd(_mm256_loadu_pd(jac + i), jv));
        } else {
            _mm256_storeu_pd(jac + i, jv);
        }
    }
    for (std::size_t i = n4; i < n; ++i) {
        double xi = 0.0, ji = 0.0;
        detail::map_point(m, t[i], xi, ji);
        x[i] = xi;
        jac[i] = accumulate ? jac[i] * ji : ji;
    }
}

void coulomb_cross_avx2(int comp, const Vec3& R, const double* x, const double* y,
                        const double* z, const double* jac, double* out, std::size_t n) {
    const std::size_t n4 = n & ~std::size_t{3};
    const __m256d rx = _mm256_set1_pd(R.x);
    const __m256d ry = _mm256_set1_pd(R.y);
    const __m256d rz = _mm256_set1_pd(R.z);

    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d ux = _mm256_sub_pd(_mm256_loadu_pd(x + i), rx);
        const __m256d uy = _mm256_sub_pd(_mm256_loadu_pd(y + i), ry);
        const __m256d uz = _mm256_sub_pd(_mm256_loadu_pd(z + i), rz);
        const __m256d d2 = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(ux, ux), _mm256_mul_pd(uy, uy)), _mm256_mul_pd(uz, uz));
        const __m256d r = _mm256_sqrt_pd(d2);
        const __m256d r3 = _mm256_mul_pd(d2, r);
        const __m256d num = (comp == 1) ? uz : neg(uy);
        const __m256d jv = _mm256_loadu_pd(jac + i);
        _mm256_storeu_pd(out + i, _mm256_div_pd(_mm256_mul_pd(jv, num), r3));
    }
    for (std::size_t i = n4; i < n; ++i) {
        out[i] = detail::coulomb_cross_point(comp, R, x[i], y[i], z[i], jac[i]);
    }
}

}  // namespace

const Backend* avx2_backend_impl() {
    static const Backend b{"avx2", &map_points_avx2, &coulomb_cross_avx2};
    return &b;
}

}  // namespace dipole::kernels

#else

namespace dipole::kernels {
const Backend* avx2_backend_impl() { return nullptr; }
}  // namespace dipole::kernels

#endif  // __AVX2__
