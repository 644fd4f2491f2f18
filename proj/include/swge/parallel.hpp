// Copyright 2026 The swge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWGE_PARALLEL_HPP
#define SWGE_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swge {

/// Threads used when a caller passes threads == 0: $SWGE_THREADS if set,
/// otherwise the OpenMP default.
int default_threads();

inline int resolve_threads(int threads) {
    return threads > 0 ? threads : default_threads();
}

/// Runs body(i) for i in [0, count). With threads == 1 this is a plain loop,
/// the serial reference every parallel result is checked against. Each
/// iteration must write only to its own slot. The first exception thrown by
/// any iteration is rethrown after the loop.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace swge

#endif // SWGE_PARALLEL_HPP
