#pragma once

#include <string>
#include <vector>

#include "mono/algebra.hpp"

namespace mono {

// One rewrite step applied during normalization. `after` lists the replacement
// words with their coefficients relative to the word being rewritten; a
// terminal emission has `emitted` set instead.
struct RewriteStep {
    std::string rule;     // "zero-pair", "iden-expand", "sigen-b", "emit"
    std::size_t position; // letter offset the rule fired at
    LetterWord before;
    std::vector<std::pair<Scalar, LetterWord>> after;
    bool terminal = false;
    BasisIndex emitted;       // valid when terminal
    Scalar emitted_coeff = 0; // coefficient contributed to the result
};

struct RewriteTrace {
    std::vector<RewriteStep> steps;
};

// 1 iff h < j (the paper's half-open order indicator).
inline int delta_below(Index j, Index h) { return h < j ? 1 : 0; }

// Rewrites a raw generator word into the Hamel basis. The zero operator comes
// back as the empty Element. Pass a trace to record every rule application.
Element normalize_word(const LetterWord& w, RewriteTrace* trace = nullptr);

// Bilinear product: concatenate letter expansions term by term and normalize.
Element multiply(const Element& x, const Element& y);

Element adjoint(const Element& x);

// Direct evaluation of the closed-form product rules for two basis words.
// An independent code path from multiply(); the two must always agree.
Element product_closed_form(const BasisIndex& b1, const BasisIndex& b2);

// Replays a trace from its input word; used to audit traces.
Element replay_trace(const LetterWord& w, const RewriteTrace& trace);

std::string to_string(const LetterWord& w);

}  // namespace mono
