// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace dipole {

/// Process-wide worker pool for cubature box evaluation. Size is taken from
/// DIPOLE_PHASE_THREADS at first use (0 or unset = hardware concurrency).
/// Results must be written to per-index slots by the callers; the pool makes
/// no ordering guarantees beyond running every index exactly once.
class ThreadPool {
public:
    static ThreadPool& instance();

    unsigned size() const { return size_; }

    /// Runs fn(0..count-1), blocking until all complete. Rethrows the first
    /// exception (by index order) raised by fn. With a single worker (or
    /// count == 1) the work runs inline on the calling thread.
    void run_indexed(std::size_t count, const std::function<void(std::size_t)>& fn);

    ~ThreadPool();

private:
    explicit ThreadPool(unsigned size);
    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    struct Impl;
    Impl* impl_ = nullptr;
    unsigned size_ = 1;
};

}  // namespace dipole
