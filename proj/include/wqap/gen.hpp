#ifndef WQAP_GEN_HPP
#define WQAP_GEN_HPP

#include <cstdint>
#include <vector>

#include "wqap/instance.hpp"

namespace wqap {

// Seeded generation uses std::mt19937_64 with modulo reduction, so outputs
// are bit-identical across platforms for a given seed.

/// Random instance with n weights in [0, alpha_max] and n points in
/// [0, beta_max], canonicalized. Throws BadParams on bad ranges.
WienerQapInstance generate_qap(int n, std::int64_t alpha_max,
                               std::int64_t beta_max, std::uint64_t seed);

/// Random tree degree sequence on r >= 2 vertices: start from all ones and
/// distribute r-2 unit increments uniformly over the entries.
std::vector<std::int64_t> generate_degree_sequence(int r, std::uint64_t seed);

}  // namespace wqap

#endif
