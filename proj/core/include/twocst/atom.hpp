#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace twocst {

//! One query equivalence class over keys 1..n: either a key {k} or an open
//! inter-key interval (i, i+1) with i in 0..n ((0,1) sits below key 1).
//!
//! Atoms are totally ordered by query value; the order index makes the
//! interleaving explicit: Interval(i) -> 2i, Key(k) -> 2k-1, so indices run
//! 0..2n and keys occupy the odd positions.
class Atom {
public:
    static Atom key(int k) {
        if (k < 1)
            throw std::invalid_argument("Atom::key: k must be >= 1");
        return Atom(2 * k - 1);
    }
    static Atom interval(int i) {
        if (i < 0)
            throw std::invalid_argument("Atom::interval: i must be >= 0");
        return Atom(2 * i);
    }
    static Atom from_index(int idx) {
        if (idx < 0)
            throw std::invalid_argument("Atom::from_index: negative index");
        return Atom(idx);
    }

    int index() const { return idx_; }
    bool is_key() const { return idx_ % 2 == 1; }
    bool is_interval() const { return idx_ % 2 == 0; }
    int key_value() const {
        if (!is_key())
            throw std::logic_error("Atom::key_value on an interval atom");
        return (idx_ + 1) / 2;
    }
    int interval_index() const {
        if (!is_interval())
            throw std::logic_error("Atom::interval_index on a key atom");
        return idx_ / 2;
    }

    auto operator<=>(const Atom&) const = default;

private:
    explicit Atom(int idx) : idx_(idx) {}
    int idx_;
};

//! Number of atoms for an instance with n keys: n keys + n+1 intervals.
inline int atom_count(int n) { return 2 * n + 1; }

//! "{2}" or "(1,2)", for diagnostics.
inline std::string atom_label(Atom a) {
    if (a.is_key())
        return "{" + std::to_string(a.key_value()) + "}";
    const int i = a.interval_index();
    return "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")";
}

} // namespace twocst
