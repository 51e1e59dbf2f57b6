#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace walkwise {

/// Worker count: explicit request, else WALKWISE_THREADS, else hardware.
inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("WALKWISE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(begin, end) over contiguous chunks of [0, count). Serial when a
/// single worker suffices. The first raised exception is rethrown.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::min<std::size_t>(resolve_threads(threads), count);
    if (threads <= 1) {
        if (count > 0) fn(std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, w, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

} // namespace walkwise
