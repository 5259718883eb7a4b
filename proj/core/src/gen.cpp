#include "twocst/gen.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace twocst {

namespace {

int uniform_1_to_100(std::mt19937_64& rng) {
    // Rejection below the largest multiple of 100 keeps the draw exactly
    // uniform independent of library distribution internals.
    constexpr std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % 100;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<int>(x % 100) + 1;
}

} // namespace

Instance random_instance(int n, std::uint64_t seed) {
    if (n < 0)
        throw std::invalid_argument("random_instance: n must be >= 0");
    std::mt19937_64 rng(seed);
    std::vector<int> weights(atom_count(n));
    long long total = 0;
    for (int& w : weights) {
        w = uniform_1_to_100(rng);
        total += w;
    }
    std::vector<Rat> beta(n), alpha(n + 1);
    for (int idx = 0; idx < atom_count(n); ++idx) {
        const Rat p = Rat(weights[idx]) / Rat(total);
        if (idx % 2 == 1)
            beta[(idx - 1) / 2] = p;
        else
            alpha[idx / 2] = p;
    }
    return Instance::create(n, std::move(beta), std::move(alpha));
}

} // namespace twocst
