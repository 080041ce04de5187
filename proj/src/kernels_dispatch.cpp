// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dipole/kernels.hpp"

namespace dipole::kernels {

// Defined in kernels_avx2.cpp (returns nullptr if the build lacks AVX2).
const Backend* avx2_backend_impl();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Backend& select_backend() {
    const char* env = std::getenv("DIPOLE_PHASE_SIMD");
    const std::string mode = env ? env : "auto";
    if (mode == "scalar") return scalar_backend();
    if (mode == "avx2") {
        const Backend* b = avx2_backend();
        if (!b) throw std::runtime_error("DIPOLE_PHASE_SIMD=avx2 but AVX2 is unavailable");
        return *b;
    }
    if (mode != "auto" && !mode.empty()) {
        throw std::runtime_error("DIPOLE_PHASE_SIMD must be auto, scalar or avx2 (got '" +
                                 mode + "')");
    }
    if (const Backend* b = avx2_backend()) return *b;
    return scalar_backend();
}

}  // namespace

const Backend* avx2_backend() {
    static const Backend* b = cpu_has_avx2() ? avx2_backend_impl() : nullptr;
    return b;
}

const Backend& active_backend() {
    static const Backend& b = select_backend();
    return b;
}

}  // namespace dipole::kernels
