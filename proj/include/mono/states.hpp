#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mono/algebra.hpp"

namespace mono {

// The invariant states on the algebra: the vacuum expectation ω, the state at
// infinity ω_∞ (coefficient of the identity), and their convex mixtures
// (1−x)·ω_∞ + x·ω.
struct StateSpec {
    enum Kind { Vacuum, Infinity, Mixed } kind = Vacuum;
    Scalar x = 0;  // mixing weight of the vacuum, in [0,1]; Mixed only

    static StateSpec vacuum() { return {Vacuum, 1}; }
    static StateSpec infinity() { return {Infinity, 0}; }
    static StateSpec mixed(Scalar weight);
};

// Closed-form evaluation: ω picks up the identity coefficient plus every
// trivial-pi coefficient; ω_∞ the identity coefficient alone.
Scalar evaluate(const StateSpec& s, const Element& x);

// evaluate(s, z* z); non-negative for every z and every state here.
Scalar positivity_probe(const StateSpec& s, const Element& z);

struct InvarianceViolation {
    BasisIndex basis;
    Scalar before, after;
};

struct InvarianceReport {
    std::size_t checked = 0;
    std::vector<InvarianceViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Sweeps every basis word with indices in [lo,hi] and length ≤ max_len and
// compares s∘transform with s.
InvarianceReport check_invariance(const StateSpec& s,
                                  const std::function<Element(const Element&)>& transform,
                                  Index lo, Index hi, std::size_t max_len);

// All BasisIndex with component indices in [lo,hi] and word length ≤ max_len.
std::vector<BasisIndex> basis_index_window(Index lo, Index hi, std::size_t max_len);

}  // namespace mono
