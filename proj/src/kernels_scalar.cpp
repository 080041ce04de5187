// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include "dipole/kernels.hpp"

#include "kernels_detail.hpp"

namespace dipole::kernels {

double AxisMap::apply(double t) const {
    double x = 0.0, jac = 0.0;
    detail::map_point(*this, t, x, jac);
    return x;
}

double AxisMap::jacobian(double t) const {
    double x = 0.0, jac = 0.0;
    detail::map_point(*this, t, x, jac);
    return jac;
}

void AxisMap::eval(double t, double& x, double& jac) const {
    detail::map_point(*this, t, x, jac);
}

namespace {

void map_points_scalar(const AxisMap& m, const double* t, double* x, double* jac, std::size_t n,
                       bool accumulate) {
    if (accumulate) {
        for (std::size_t i = 0; i < n; ++i) {
            double xi = 0.0, ji = 0.0;
            detail::map_point(m, t[i], xi, ji);
            x[i] = xi;
            jac[i] *= ji;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            detail::map_point(m, t[i], x[i], jac[i]);
        }
    }
}

void coulomb_cross_scalar(int comp, const Vec3& R, const double* x, const double* y,
                          const double* z, const double* jac, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = detail::coulomb_cross_point(comp, R, x[i], y[i], z[i], jac[i]);
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend b{"scalar", &map_points_scalar, &coulomb_cross_scalar};
    return b;
}

}  // namespace dipole::kernels
