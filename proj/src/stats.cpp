#include "hermring/stats.hpp"

#include <atomic>

namespace hermring::stats {
namespace {
std::atomic<std::uint64_t> g_convolutions{0};
}

std::uint64_t convolutions() { return g_convolutions.load(); }
void reset() { g_convolutions.store(0); }
void count_convolution() { g_convolutions.fetch_add(1, std::memory_order_relaxed); }

}  // namespace hermring::stats
