#pragma once

#include <cstdint>

namespace hermring::stats {

// Process-wide count of series convolutions, for the CLI --stats flag and
// the warm-cache tests (a warm `verify identities` must report 0).
std::uint64_t convolutions();
void reset();
void count_convolution();

}  // namespace hermring::stats
