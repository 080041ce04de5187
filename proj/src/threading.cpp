// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include "dipole/threading.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dipole {

struct ThreadPool::Impl {
    std::mutex mutex;
    std::condition_variable wake;
    std::condition_variable done;

    const std::function<void(std::size_t)>* job = nullptr;
    std::size_t job_count = 0;
    std::atomic<std::size_t> next{0};
    std::size_t remaining = 0;
    std::uint64_t generation = 0;
    bool stopping = false;

    std::mutex error_mutex;
    std::size_t error_index = 0;
    std::exception_ptr error;

    std::vector<std::thread> workers;

    void worker_loop() {
        std::uint64_t seen = 0;
        for (;;) {
            std::unique_lock lock(mutex);
            wake.wait(lock, [&] { return stopping || generation != seen; });
            if (stopping) return;
            seen = generation;
            const auto* fn = job;
            const std::size_t count = job_count;
            lock.unlock();

            for (;;) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) break;
                try {
                    (*fn)(i);
                } catch (...) {
                    std::lock_guard guard(error_mutex);
                    if (!error || i < error_index) {
                        error = std::current_exception();
                        error_index = i;
                    }
                }
            }

            lock.lock();
            if (--remaining == 0) done.notify_all();
        }
    }
};

ThreadPool::ThreadPool(unsigned size) : size_(size) {
    if (size_ < 2) return;  // inline execution, no workers needed
    impl_ = new Impl;
    impl_->workers.reserve(size_);
    for (unsigned i = 0; i < size_; ++i) {
        impl_->workers.emplace_back([this] { impl_->worker_loop(); });
    }
}

ThreadPool::~ThreadPool() {
    if (!impl_) return;
    {
        std::lock_guard lock(impl_->mutex);
        impl_->stopping = true;
    }
    impl_->wake.notify_all();
    for (auto& w : impl_->workers) w.join();
    delete impl_;
}

ThreadPool& ThreadPool::instance() {
    static ThreadPool pool([] {
        unsigned n = 0;
        if (const char* env = std::getenv("DIPOLE_PHASE_THREADS")) {
            n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        }
        if (n == 0) n = std::thread::hardware_concurrency();
        return n == 0 ? 1u : n;
    }());
    return pool;
}

void ThreadPool::run_indexed(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (!impl_ || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    {
        std::lock_guard lock(impl_->mutex);
        impl_->job = &fn;
        impl_->job_count = count;
        impl_->next.store(0, std::memory_order_relaxed);
        impl_->remaining = impl_->workers.size();
        impl_->error = nullptr;
        ++impl_->generation;
    }
    impl_->wake.notify_all();

    std::unique_lock lock(impl_->mutex);
    impl_->done.wait(lock, [&] { return impl_->remaining == 0; });
    impl_->job = nullptr;
    if (impl_->error) std::rethrow_exception(impl_->error);
}

}  // namespace dipole
