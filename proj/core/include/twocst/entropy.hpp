#pragma once

#include "twocst/instance.hpp"
#include "twocst/rational.hpp"

#include <vector>

namespace twocst {

//! Non-negative rationals summing to exactly 1.
class Distribution {
public:
    //! Throws std::invalid_argument on a negative entry or a sum != 1.
    static Distribution create(std::vector<Rat> probs);

    const std::vector<Rat>& probs() const { return probs_; }

private:
    explicit Distribution(std::vector<Rat> probs) : probs_(std::move(probs)) {}

    std::vector<Rat> probs_;
};

//! Sum of p * log2(1/p); zero entries contribute zero.
double shannon_entropy(const Distribution& d);

//! Entropy of the n+1 answers a bottom-leaf tree can give: each key, plus
//! the lumped failure mass A. Lower-bounds the cost of every such tree.
double nil_direct_bound(const Instance& instance);

//! Entropy of all 2n+1 atom answers minus one. Lower-bounds the cost of
//! every bottom-leaf tree as well (may be negative; returned as-is).
double loc_bound_minus_one(const Instance& instance);

//! The family beta_k = 1/n^2, alpha_i = (1/(n+1))(1 - 1/n): nearly all mass
//! sits on failures, so the lumped bound collapses to o(1) while the atom
//! bound grows like log2 n. Requires n >= 2.
Instance extreme_instance(int n);

} // namespace twocst
