#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arcforge {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using bigint = boost::multiprecision::cpp_int;

// Shared enumeration bound for field streams and plane scans.
// Default 2*10^7; the ARCFORGE_MAX_PLANE environment variable overrides it,
// set_max_enumeration() overrides both (tests use it).
u64 max_enumeration();
void set_max_enumeration(u64 n);

unsigned effective_threads(unsigned requested);

// Runs fn(worker_id, begin, end) over contiguous blocks of [0, n).
// Workers own disjoint ranges; merging is the caller's job.
template <class Fn>
void parallel_for(u64 n, unsigned threads, Fn&& fn) {
    if (n == 0) return;
    threads = effective_threads(threads);
    if (threads > n) threads = static_cast<unsigned>(n);
    if (threads <= 1) {
        fn(0u, u64(0), n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const u64 chunk = n / threads, extra = n % threads;
    u64 begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
        const u64 len = chunk + (t < extra ? 1 : 0);
        pool.emplace_back([t, begin, len, &fn] { fn(t, begin, begin + len); });
        begin += len;
    }
    for (auto& th : pool) th.join();
}

}  // namespace arcforge
