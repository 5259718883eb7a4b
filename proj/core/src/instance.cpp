#include "twocst/instance.hpp"

#include <stdexcept>
#include <string>

namespace twocst {

Instance Instance::create(int n, std::vector<Rat> beta, std::vector<Rat> alpha) {
    if (n < 0)
        throw std::invalid_argument("Instance: n must be >= 0");
    if (beta.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("Instance: beta must have n entries");
    if (alpha.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("Instance: alpha must have n+1 entries");
    Rat sum = 0;
    for (const Rat& b : beta) {
        if (b < 0)
            throw std::invalid_argument("Instance: negative beta entry");
        sum += b;
    }
    for (const Rat& a : alpha) {
        if (a < 0)
            throw std::invalid_argument("Instance: negative alpha entry");
        sum += a;
    }
    if (sum != 1)
        throw std::invalid_argument("Instance: probabilities must sum to exactly 1");
    return Instance(n, std::move(beta), std::move(alpha));
}

const Rat& Instance::weight(Atom a) const {
    if (a.index() >= atom_count(n_))
        throw std::invalid_argument("Instance::weight: atom " + atom_label(a) +
                                    " outside instance with n=" + std::to_string(n_));
    return a.is_key() ? beta_[a.key_value() - 1] : alpha_[a.interval_index()];
}

std::vector<Rat> Instance::atom_weights() const {
    std::vector<Rat> w(atom_count(n_));
    for (int idx = 0; idx < atom_count(n_); ++idx)
        w[idx] = weight(Atom::from_index(idx));
    return w;
}

Rat Instance::interval_mass() const {
    Rat sum = 0;
    for (const Rat& a : alpha_)
        sum += a;
    return sum;
}

} // namespace twocst
