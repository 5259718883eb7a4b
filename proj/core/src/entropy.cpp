#include "twocst/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace twocst {

Distribution Distribution::create(std::vector<Rat> probs) {
    Rat sum = 0;
    for (const Rat& p : probs) {
        if (p < 0)
            throw std::invalid_argument("Distribution: negative probability");
        sum += p;
    }
    if (sum != 1)
        throw std::invalid_argument("Distribution: probabilities must sum to 1");
    return Distribution(std::move(probs));
}

double shannon_entropy(const Distribution& d) {
    double h = 0;
    for (const Rat& p : d.probs()) {
        if (p == 0)
            continue;
        const double x = to_double(p);
        h -= x * std::log2(x);
    }
    return h;
}

double nil_direct_bound(const Instance& instance) {
    std::vector<Rat> probs;
    probs.reserve(instance.n() + 1);
    probs.push_back(instance.interval_mass());
    for (const Rat& b : instance.beta())
        probs.push_back(b);
    return shannon_entropy(Distribution::create(std::move(probs)));
}

double loc_bound_minus_one(const Instance& instance) {
    return shannon_entropy(Distribution::create(instance.atom_weights())) - 1.0;
}

Instance extreme_instance(int n) {
    if (n < 2)
        throw std::invalid_argument("extreme_instance: n must be >= 2");
    const Rat beta_k = Rat(1) / Rat(Int(n) * n);
    const Rat alpha_i = (Rat(1) / (n + 1)) * (1 - Rat(1) / n);
    return Instance::create(n, std::vector<Rat>(n, beta_k),
                            std::vector<Rat>(n + 1, alpha_i));
}

} // namespace twocst
