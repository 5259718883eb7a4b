#pragma once

#include "twocst/atom.hpp"
#include "twocst/rational.hpp"

#include <vector>

namespace twocst {

//! A search-tree instance: n keys with success probabilities beta[k-1] and
//! n+1 inter-key intervals with failure probabilities alpha[i].
//! All probabilities are exact rationals and sum to exactly 1.
class Instance {
public:
    //! Validates sizes, non-negativity, and the exact unit sum; throws
    //! std::invalid_argument on violation.
    static Instance create(int n, std::vector<Rat> beta, std::vector<Rat> alpha);

    int n() const { return n_; }
    const std::vector<Rat>& beta() const { return beta_; }
    const std::vector<Rat>& alpha() const { return alpha_; }

    const Rat& weight(Atom a) const;

    //! Weights indexed by atom order index (size 2n+1).
    std::vector<Rat> atom_weights() const;

    //! Total failure mass A = sum alpha.
    Rat interval_mass() const;

    bool operator==(const Instance&) const = default;

private:
    Instance(int n, std::vector<Rat> beta, std::vector<Rat> alpha)
        : n_(n), beta_(std::move(beta)), alpha_(std::move(alpha)) {}

    int n_;
    std::vector<Rat> beta_;
    std::vector<Rat> alpha_;
};

} // namespace twocst
