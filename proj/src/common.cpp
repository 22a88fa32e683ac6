#include "arcforge/common.hpp"

#include <atomic>
#include <cstdlib>

namespace arcforge {

namespace {

std::atomic<u64> g_max_enum{0};  // 0 = not initialized

u64 default_bound() {
    if (const char* env = std::getenv("ARCFORGE_MAX_PLANE")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<u64>(v);
    }
    return 20'000'000ull;
}

}  // namespace

u64 max_enumeration() {
    u64 v = g_max_enum.load(std::memory_order_relaxed);
    if (v == 0) {
        v = default_bound();
        g_max_enum.store(v, std::memory_order_relaxed);
    }
    return v;
}

void set_max_enumeration(u64 n) {
    g_max_enum.store(n == 0 ? default_bound() : n, std::memory_order_relaxed);
}

unsigned effective_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : (hw > 8u ? 8u : hw);
}

}  // namespace arcforge
