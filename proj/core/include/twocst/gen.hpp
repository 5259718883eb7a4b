#pragma once

#include "twocst/instance.hpp"

#include <cstdint>

namespace twocst {

//! Seeded random instance: draws 2n+1 integer weights uniformly from 1..100
//! (rejection sampling, so the draw sequence is reproducible and unbiased)
//! and normalizes them into exact probabilities. Same (n, seed) in, same
//! instance out.
Instance random_instance(int n, std::uint64_t seed);

} // namespace twocst
