// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0

// Adaptive multidimensional integration. Per box, an embedded degree-7/5
// fully-symmetric rule (Genz & Malik 1980) gives the estimate and error;
// the box with the largest error is bisected along the axis with the
// largest fourth difference. Infinite axes are folded onto the unit box by
// monotone rational maps with the jacobian in the integrand.
//
// Determinism: boxes carry creation ids; the work heap breaks error ties by
// id, children are merged in a fixed order, and the final value is a
// compensated re-sum over boxes in id order. Results are bit-identical from
// run to run and independent of the worker-thread count.

#include "dipole/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "dipole/errors.hpp"
#include "dipole/threading.hpp"

namespace dipole {

using kernels::AxisMap;

namespace {

// Neumaier compensated summation.
struct Accum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    double get() const { return sum + comp; }
};

AxisMap axis_map_for(const AxisBounds& b, double scale, double center) {
    if (std::isnan(b.lo) || std::isnan(b.hi) || !(b.lo < b.hi)) {
        throw std::invalid_argument("integration bounds must satisfy lo < hi");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("map scale must be positive and finite");
    }
    AxisMap m;
    if (b.lo_infinite() && b.hi_infinite()) {
        m.kind = kernels::MapKind::bi_inf;
        m.p0 = center;
        m.p1 = scale;
    } else if (b.lo_infinite()) {
        m.kind = kernels::MapKind::semi_inf_hi;
        m.p0 = b.hi;
        m.p1 = scale;
    } else if (b.hi_infinite()) {
        m.kind = kernels::MapKind::semi_inf_lo;
        m.p0 = b.lo;
        m.p1 = scale;
    } else {
        m.kind = kernels::MapKind::affine;
        m.p0 = b.lo;
        m.p1 = b.hi - b.lo;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Genz-Malik embedded degree-7/5 rule on [-1,1]^D, weights normalized so the
// box integral is volume * sum(w_i * f_i).

template <int D>
struct GMRule {
    static constexpr int npts = 1 + 4 * D + 2 * D * (D - 1) + (1 << D);

    std::array<std::array<double, D>, npts> off{};
    std::array<double, npts> w7{};
    std::array<double, npts> w5{};
    double lambda2, lambda3, lambda5, fourth_diff_ratio;

    GMRule() {
        lambda2 = std::sqrt(9.0 / 70.0);
        lambda3 = std::sqrt(9.0 / 10.0);
        const double lambda4 = lambda3;
        lambda5 = std::sqrt(9.0 / 19.0);
        fourth_diff_ratio = (lambda2 * lambda2) / (lambda3 * lambda3);

        const double d = D;
        const double w1 = (12824.0 - 9120.0 * d + 400.0 * d * d) / 19683.0;
        const double w2 = 980.0 / 6561.0;
        const double w3 = (1820.0 - 400.0 * d) / 19683.0;
        const double w4 = 200.0 / 19683.0;
        const double w5c = 6859.0 / 19683.0 / double(1 << D);
        const double e1 = (729.0 - 950.0 * d + 50.0 * d * d) / 729.0;
        const double e2 = 245.0 / 486.0;
        const double e3 = (265.0 - 100.0 * d) / 1458.0;
        const double e4 = 25.0 / 729.0;

        int p = 0;
        w7[p] = w1;
        w5[p] = e1;
        ++p;  // center, offsets already zero
        for (int a = 0; a < D; ++a) {
            for (double s : {-lambda2, lambda2}) {
                off[p][a] = s;
                w7[p] = w2;
                w5[p] = e2;
                ++p;
            }
            for (double s : {-lambda3, lambda3}) {
                off[p][a] = s;
                w7[p] = w3;
                w5[p] = e3;
                ++p;
            }
        }
        for (int a = 0; a < D; ++a) {
            for (int b = a + 1; b < D; ++b) {
                for (double sa : {-lambda4, lambda4}) {
                    for (double sb : {-lambda4, lambda4}) {
                        off[p][a] = sa;
                        off[p][b] = sb;
                        w7[p] = w4;
                        w5[p] = e4;
                        ++p;
                    }
                }
            }
        }
        for (int m = 0; m < (1 << D); ++m) {
            for (int a = 0; a < D; ++a) {
                off[p][a] = ((m >> a) & 1) ? lambda5 : -lambda5;
            }
            w7[p] = w5c;
            w5[p] = 0.0;
            ++p;
        }
    }
};

template <int D>
const GMRule<D>& gm_rule() {
    static const GMRule<D> rule;
    return rule;
}

struct BoxEval {
    double value = 0.0;
    double error = 0.0;
    int split_dim = 0;
};

template <int D, class Field>
BoxEval eval_box(const GMRule<D>& rule, const std::array<AxisMap, D>& maps, const Field& f,
                 const std::array<double, D>& lo, const std::array<double, D>& hi) {
    constexpr int npts = GMRule<D>::npts;
    const auto& backend = kernels::active_backend();

    std::array<std::array<double, npts>, D> t;
    std::array<std::array<double, npts>, D> coord;
    std::array<double, npts> jac;
    std::array<double, npts> out;

    double volume = 1.0;
    for (int a = 0; a < D; ++a) {
        const double c = 0.5 * (lo[a] + hi[a]);
        const double h = 0.5 * (hi[a] - lo[a]);
        volume *= hi[a] - lo[a];
        for (int i = 0; i < npts; ++i) t[a][i] = c + h * rule.off[i][a];
        backend.map_points(maps[a], t[a].data(), coord[a].data(), jac.data(), npts, a > 0);
    }

    if constexpr (D == 3) {
        f(coord[0].data(), coord[1].data(), coord[2].data(), jac.data(), out.data(), npts);
    } else {
        f(coord[0].data(), coord[1].data(), jac.data(), out.data(), npts);
    }

    for (int i = 0; i < npts; ++i) {
        if (!std::isfinite(out[i])) {
            std::ostringstream msg;
            msg << "integrand returned non-finite value at (";
            for (int a = 0; a < D; ++a) msg << (a ? ", " : "") << coord[a][i];
            msg << ")";
            throw NonFiniteSample(msg.str());
        }
    }

    Accum s7, s5;
    for (int i = 0; i < npts; ++i) s7.add(rule.w7[i] * out[i]);
    for (int i = 0; i < npts; ++i) s5.add(rule.w5[i] * out[i]);

    BoxEval r;
    r.value = volume * s7.get();
    r.error = std::abs(volume * (s7.get() - s5.get()));

    // Fourth difference along each axis picks the split direction.
    double best = -1.0;
    const double f0 = 2.0 * out[0];
    for (int a = 0; a < D; ++a) {
        const double d2 = out[1 + 4 * a] + out[2 + 4 * a] - f0;
        const double d3 = out[3 + 4 * a] + out[4 + 4 * a] - f0;
        const double diff = std::abs(d2 - rule.fourth_diff_ratio * d3);
        if (diff > best) {
            best = diff;
            r.split_dim = a;
        }
    }
    return r;
}

template <int D>
struct Box {
    std::array<double, D> lo, hi;
    double value = 0.0;
    double error = 0.0;
    int split_dim = 0;
    std::uint64_t id = 0;
};

struct HeapEntry {
    double error;
    std::uint64_t id;
    std::uint32_t slot;
};
struct HeapLess {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.id > b.id;
    }
};

template <int D, class Field>
QuadratureResult integrate_impl(const Field& f, const Region<D>& region,
                                const QuadratureOptions& opts) {
    if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    const GMRule<D>& rule = gm_rule<D>();
    constexpr int npts = GMRule<D>::npts;

    std::array<AxisMap, D> maps;
    for (int a = 0; a < D; ++a) {
        maps[a] = axis_map_for(region.bounds[a], region.map_scale[a], region.map_center[a]);
    }

    std::vector<Box<D>> boxes;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess> heap;
    std::uint64_t next_id = 0;
    long evals = 0;

    Box<D> root;
    root.lo.fill(0.0);
    root.hi.fill(1.0);
    root.id = next_id++;
    {
        const BoxEval ev = eval_box<D>(rule, maps, f, root.lo, root.hi);
        evals += npts;
        root.value = ev.value;
        root.error = ev.error;
        root.split_dim = ev.split_dim;
    }
    boxes.push_back(root);
    heap.push({root.error, root.id, 0});

    Accum total_val, total_err;
    total_val.add(root.value);
    total_err.add(root.error);

    constexpr std::size_t kRoundBoxes = 16;
    struct Job {
        std::uint32_t parent_slot;
        std::array<double, D> lo, hi;
    };
    std::vector<HeapEntry> parents;
    std::vector<Job> jobs;
    std::vector<BoxEval> results;

    auto tolerance = [&](double val) { return std::max(opts.abs_tol, opts.rel_tol * std::abs(val)); };

    while (total_err.get() > tolerance(total_val.get())) {
        const long budget_left = opts.max_evals - evals;
        const std::size_t affordable =
            budget_left > 0 ? static_cast<std::size_t>(budget_left / (2 * npts)) : 0;
        const std::size_t round = std::min(kRoundBoxes, affordable);
        if (round == 0) break;  // budget exhausted: report best estimate, converged=false

        parents.clear();
        jobs.clear();
        while (parents.size() < round && !heap.empty()) {
            HeapEntry top = heap.top();
            heap.pop();
            const Box<D>& box = boxes[top.slot];
            const int sd = box.split_dim;
            const double mid = 0.5 * (box.lo[sd] + box.hi[sd]);
            if (!(mid > box.lo[sd]) || !(mid < box.hi[sd])) {
                continue;  // box is at floating-point resolution; leave it be
            }
            parents.push_back(top);
            Job j0{top.slot, box.lo, box.hi};
            j0.hi[sd] = mid;
            Job j1{top.slot, box.lo, box.hi};
            j1.lo[sd] = mid;
            jobs.push_back(j0);
            jobs.push_back(j1);
        }
        if (parents.empty()) break;  // nothing left that can be refined

        results.assign(jobs.size(), BoxEval{});
        ThreadPool::instance().run_indexed(jobs.size(), [&](std::size_t i) {
            results[i] = eval_box<D>(rule, maps, f, jobs[i].lo, jobs[i].hi);
        });
        evals += static_cast<long>(jobs.size()) * npts;

        for (std::size_t p = 0; p < parents.size(); ++p) {
            const std::uint32_t slot = parents[p].slot;
            const Job& j0 = jobs[2 * p];
            const Job& j1 = jobs[2 * p + 1];
            const BoxEval& r0 = results[2 * p];
            const BoxEval& r1 = results[2 * p + 1];

            total_val.add(r0.value + r1.value - boxes[slot].value);
            total_err.add(r0.error + r1.error - boxes[slot].error);

            Box<D> child0{j0.lo, j0.hi, r0.value, r0.error, r0.split_dim, next_id++};
            Box<D> child1{j1.lo, j1.hi, r1.value, r1.error, r1.split_dim, next_id++};
            boxes[slot] = child0;
            heap.push({child0.error, child0.id, slot});
            boxes.push_back(child1);
            heap.push({child1.error, child1.id, static_cast<std::uint32_t>(boxes.size() - 1)});
        }
    }

    // Deterministic final answer: compensated re-sum over boxes in id order.
    std::vector<std::uint32_t> order(boxes.size());
    for (std::uint32_t i = 0; i < boxes.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return boxes[a].id < boxes[b].id; });
    Accum val, err;
    for (std::uint32_t i : order) {
        val.add(boxes[i].value);
        err.add(boxes[i].error);
    }

    QuadratureResult res;
    res.value = val.get();
    res.error_estimate = err.get();
    res.evaluations = evals;
    res.converged = res.error_estimate <= tolerance(res.value);
    return res;
}

}  // namespace

BatchField3 make_batch_field(std::function<double(const Vec3&)> f) {
    return [f = std::move(f)](const double* x, const double* y, const double* z,
                              const double* jac, double* out, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(Vec3{x[i], y[i], z[i]}) * jac[i];
    };
}

BatchField2 make_batch_field_2d(std::function<double(double, double)> f) {
    return [f = std::move(f)](const double* x, const double* y, const double* jac, double* out,
                              std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(x[i], y[i]) * jac[i];
    };
}

QuadratureResult integrate_3d(const BatchField3& f, const Region3& region,
                              const QuadratureOptions& opts) {
    return integrate_impl<3>(f, region, opts);
}

QuadratureResult integrate_3d(const std::function<double(const Vec3&)>& f, const Region3& region,
                              const QuadratureOptions& opts) {
    return integrate_impl<3>(make_batch_field(f), region, opts);
}

QuadratureResult integrate_2d(const BatchField2& f, const Region2& region,
                              const QuadratureOptions& opts) {
    return integrate_impl<2>(f, region, opts);
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const Region2& region, const QuadratureOptions& opts) {
    return integrate_impl<2>(make_batch_field_2d(f), region, opts);
}

// ---------------------------------------------------------------------------
// 1-D adaptive Gauss-Kronrod 7/15.

namespace {

constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
                           0.4179591836734694};

struct Interval {
    double lo, hi;
    double value, error;
    std::uint64_t id;
};

template <class F>
void gk15(const F& f, double lo, double hi, double& value, double& error) {
    const double center = 0.5 * (lo + hi);
    const double hlgth = 0.5 * (hi - lo);

    double fv[15];
    const double fc = f(center);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = std::abs(resk);
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kXgk[j];
        const double f1 = f(center - absc);
        const double f2 = f(center + absc);
        fv[j] = f1;
        fv[14 - j] = f2;
        const double fsum = f1 + f2;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    }
    for (int i = 0; i < 15; ++i) {
        if (!std::isfinite(fv[i])) {
            throw NonFiniteSample("1-D integrand returned non-finite value");
        }
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
    }
    value = resk * hlgth;
    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    error = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && error != 0.0) {
        error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
    }
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50) {
        error = std::max(error, eps50 * resabs);
    }
}

}  // namespace

QuadratureResult integrate_1d(const std::function<double(double)>& f, const AxisBounds& bounds,
                              const QuadratureOptions& opts, double map_scale,
                              double map_center) {
    const AxisMap map = axis_map_for(bounds, map_scale, map_center);
    auto ft = [&](double t) {
        double x, jac;
        map.eval(t, x, jac);
        return f(x) * jac;
    };

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess> heap;
    std::vector<Interval> intervals;
    std::uint64_t next_id = 0;
    long evals = 0;

    Interval root{0.0, 1.0, 0.0, 0.0, next_id++};
    gk15(ft, root.lo, root.hi, root.value, root.error);
    evals += 15;
    intervals.push_back(root);
    heap.push({root.error, root.id, 0});

    Accum total_val, total_err;
    total_val.add(root.value);
    total_err.add(root.error);

    auto tolerance = [&](double val) { return std::max(opts.abs_tol, opts.rel_tol * std::abs(val)); };

    while (total_err.get() > tolerance(total_val.get()) && evals + 30 <= opts.max_evals &&
           !heap.empty()) {
        const HeapEntry top = heap.top();
        heap.pop();
        Interval parent = intervals[top.slot];
        const double mid = 0.5 * (parent.lo + parent.hi);
        if (!(mid > parent.lo) || !(mid < parent.hi)) continue;

        Interval c0{parent.lo, mid, 0.0, 0.0, next_id++};
        Interval c1{mid, parent.hi, 0.0, 0.0, next_id++};
        gk15(ft, c0.lo, c0.hi, c0.value, c0.error);
        gk15(ft, c1.lo, c1.hi, c1.value, c1.error);
        evals += 30;

        total_val.add(c0.value + c1.value - parent.value);
        total_err.add(c0.error + c1.error - parent.error);

        intervals[top.slot] = c0;
        heap.push({c0.error, c0.id, top.slot});
        intervals.push_back(c1);
        heap.push({c1.error, c1.id, static_cast<std::uint32_t>(intervals.size() - 1)});
    }

    std::vector<std::uint32_t> order(intervals.size());
    for (std::uint32_t i = 0; i < intervals.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return intervals[a].id < intervals[b].id; });
    Accum val, err;
    for (std::uint32_t i : order) {
        val.add(intervals[i].value);
        err.add(intervals[i].error);
    }

    QuadratureResult res;
    res.value = val.get();
    res.error_estimate = err.get();
    res.evaluations = evals;
    res.converged = res.error_estimate <= tolerance(res.value);
    return res;
}

namespace {

QuadratureResult line_refine(const Trajectory& traj, const LineIntegralOptions& opts,
                             const std::function<double(const PathSample&)>& term) {
    if (opts.n0 < 1 || opts.max_levels < 2) {
        throw std::invalid_argument("line integral needs n0 >= 1 and max_levels >= 2");
    }

    long evals = 0;
    auto composite = [&](int n_per_segment) {
        Accum acc;
        const auto samples = segment_sample(traj, n_per_segment);
        for (const PathSample& s : samples) {
            const double v = term(s);
            if (!std::isfinite(v)) {
                throw NonFiniteSample("line integrand returned non-finite value");
            }
            acc.add(v);
        }
        evals += static_cast<long>(samples.size());
        return acc.get();
    };

    std::vector<double> row, prev_row;
    double prev_diag = 0.0;
    double diag = 0.0;
    double change = std::numeric_limits<double>::infinity();

    for (int level = 0; level < opts.max_levels; ++level) {
        const double s = composite(opts.n0 << level);
        if (opts.richardson) {
            row.assign(1, s);
            double factor = 1.0;
            for (int j = 1; j <= level; ++j) {
                factor *= 4.0;
                row.push_back(row[j - 1] + (row[j - 1] - prev_row[j - 1]) / (factor - 1.0));
            }
            diag = row.back();
            prev_row = row;
        } else {
            diag = s;
        }
        if (level > 0) {
            change = std::abs(diag - prev_diag);
            if (change <= std::max(opts.abs_tol, opts.rel_tol * std::abs(diag))) {
                return {diag, change, evals, true};
            }
        }
        prev_diag = diag;
    }
    return {diag, change, evals, false};
}

}  // namespace

QuadratureResult integrate_line(const std::function<Vec3(const Vec3&)>& field,
                                const Trajectory& traj, const LineIntegralOptions& opts) {
    return line_refine(traj, opts,
                       [&](const PathSample& s) { return dot(field(s.point), s.dl); });
}

QuadratureResult integrate_line_tangential(
    const std::function<double(const Vec3&, const Vec3&)>& f, const Trajectory& traj,
    const LineIntegralOptions& opts) {
    return line_refine(traj, opts, [&](const PathSample& s) {
        const double len = s.dl.norm();
        return f(s.point, s.dl / len) * len;
    });
}

}  // namespace dipole
