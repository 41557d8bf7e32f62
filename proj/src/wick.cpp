#include "mono/wick.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace mono {

namespace {

// Detects an adjacent pair that annihilates the whole word:
//   a_i† a_j†  with i ≥ j,   a_j a_i  with i ≥ j,   a_i a_j†  with i ≠ j.
// Returns the position of the left letter, or npos.
std::size_t find_zero_pair(const LetterWord& w) {
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
        const Letter& p = w[t];
        const Letter& q = w[t + 1];
        if (p.kind == LetterKind::Creator && q.kind == LetterKind::Creator &&
            p.index >= q.index)
            return t;
        if (p.kind == LetterKind::Annihilator &&
            q.kind == LetterKind::Annihilator && q.index >= p.index)
            return t;
        if (p.kind == LetterKind::Annihilator && q.kind == LetterKind::Creator &&
            p.index != q.index)
            return t;
    }
    return static_cast<std::size_t>(-1);
}

// Leftmost adjacent a_k a_k†, or npos.
std::size_t find_projection_pair(const LetterWord& w) {
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
        if (w[t].kind == LetterKind::Annihilator &&
            w[t + 1].kind == LetterKind::Creator && w[t].index == w[t + 1].index)
            return t;
    }
    return static_cast<std::size_t>(-1);
}

BasisIndex trivial_pi(Index i) {
    return BasisIndex({i}, {i});
}

// A word with no zero pair and no a_k a_k† pair is a block of strictly
// ascending creators followed by strictly descending annihilators.
BasisIndex lambda_index_of(const LetterWord& w) {
    IndexSet l1, l2;
    for (const Letter& x : w) {
        if (x.kind == LetterKind::Creator)
            l1.push_back(x.index);
        else
            l2.push_back(x.index);
    }
    return BasisIndex(std::move(l1), std::move(l2));
}

bool is_diagonal_pair(const LetterWord& w) {
    return w.size() == 2 && w[0].kind == LetterKind::Creator &&
           w[1].kind == LetterKind::Annihilator && w[0].index == w[1].index;
}

}  // namespace

Element normalize_word(const LetterWord& input, RewriteTrace* trace) {
    Element result;
    std::deque<std::pair<Scalar, LetterWord>> work;
    work.emplace_back(Scalar(1), input);

    auto record = [&](RewriteStep&& step) {
        if (trace) trace->steps.push_back(std::move(step));
    };

    while (!work.empty()) {
        auto [coeff, w] = std::move(work.front());
        work.pop_front();

        if (auto z = find_zero_pair(w); z != static_cast<std::size_t>(-1)) {
            record({"zero-pair", z, w, {}, false, {}, 0});
            continue;
        }

        if (auto t = find_projection_pair(w); t != static_cast<std::size_t>(-1)) {
            const Index k = w[t].index;
            if (w.size() == 2) {
                record({"emit", 0, w, {}, true, trivial_pi(k), coeff});
                result.add_term(trivial_pi(k), coeff);
                continue;
            }
            // Replace a_k a_k† in context via the commutation identity
            // a_k a_k† = I − Σ a_l† a_l, truncated by the neighbours: terms
            // with l at or below an adjacent creator (left) or annihilator
            // (right) index vanish, and a non-matching neighbour kind kills
            // the whole tail.
            Index lo = k + 1;  // empty sum unless a neighbour allows more
            bool left_open = (t == 0);
            bool right_open = (t + 2 == w.size());
            Index left_cap = 0, right_cap = 0;
            if (!left_open) {
                if (w[t - 1].kind != LetterKind::Creator) left_cap = k + 1;
                else left_cap = w[t - 1].index + 1;
            }
            if (!right_open) {
                if (w[t + 2].kind != LetterKind::Annihilator) right_cap = k + 1;
                else right_cap = w[t + 2].index + 1;
            }
            if (!left_open && !right_open)
                lo = std::max(left_cap, right_cap);
            else if (!left_open)
                lo = left_cap;
            else if (!right_open)
                lo = right_cap;

            RewriteStep step{"iden-expand", t, w, {}, false, {}, 0};
            LetterWord dropped(w.begin(), w.begin() + t);
            dropped.insert(dropped.end(), w.begin() + t + 2, w.end());
            step.after.emplace_back(Scalar(1), dropped);
            for (Index l = lo; l <= k; ++l) {
                LetterWord repl(w.begin(), w.begin() + t);
                repl.push_back(creator(l));
                repl.push_back(annihilator(l));
                repl.insert(repl.end(), w.begin() + t + 2, w.end());
                step.after.emplace_back(Scalar(-1), repl);
            }
            for (const auto& [c, nw] : step.after)
                work.emplace_back(coeff * c, nw);
            record(std::move(step));
            continue;
        }

        if (is_diagonal_pair(w)) {
            // a_i† a_i = a_{i−1} a_{i−1}† − a_i a_i†
            const Index i = w[0].index;
            RewriteStep step{"sigen-b", 0, w, {}, false, {}, 0};
            step.after.emplace_back(Scalar(1),
                                    LetterWord{annihilator(i - 1), creator(i - 1)});
            step.after.emplace_back(Scalar(-1),
                                    LetterWord{annihilator(i), creator(i)});
            for (const auto& [c, nw] : step.after)
                work.emplace_back(coeff * c, nw);
            record(std::move(step));
            continue;
        }

        BasisIndex b = lambda_index_of(w);
        record({"emit", 0, w, {}, true, b, coeff});
        result.add_term(b, coeff);
    }
    return result;
}

Element replay_trace(const LetterWord& input, const RewriteTrace& trace) {
    Element result;
    std::deque<std::pair<Scalar, LetterWord>> work;
    work.emplace_back(Scalar(1), input);
    for (const RewriteStep& step : trace.steps) {
        if (work.empty()) throw std::runtime_error("trace underrun");
        auto [coeff, w] = std::move(work.front());
        work.pop_front();
        if (w != step.before) throw std::runtime_error("trace word mismatch");
        if (step.terminal) {
            result.add_term(step.emitted, coeff);
            continue;
        }
        for (const auto& [c, nw] : step.after) work.emplace_back(coeff * c, nw);
    }
    if (!work.empty()) throw std::runtime_error("trace incomplete");
    return result;
}

Element multiply(const Element& x, const Element& y) {
    Element result;
    for (const auto& [b1, c1] : x.terms()) {
        LetterWord w1 = b1.letters();
        for (const auto& [b2, c2] : y.terms()) {
            LetterWord w = w1;
            LetterWord w2 = b2.letters();
            w.insert(w.end(), w2.begin(), w2.end());
            Element prod = normalize_word(w);
            prod *= c1 * c2;
            result += prod;
        }
    }
    return result;
}

Element adjoint(const Element& x) {
    return x.adjoint();
}

namespace {

// Builds the Element for a Wick-ordered word given by ascending creator
// indices and descending annihilator indices, rewriting the one non-basis
// shape a_q† a_q through the sigen(b) identity.
Element wick_element(const IndexSet& creators_asc,
                     const std::vector<Index>& anni_desc) {
    if (creators_asc.size() == 1 && anni_desc.size() == 1 &&
        creators_asc[0] == anni_desc[0]) {
        const Index q = creators_asc[0];
        Element e(trivial_pi(q - 1));
        e -= Element(trivial_pi(q));
        return e;
    }
    IndexSet l2(anni_desc.rbegin(), anni_desc.rend());
    return Element(BasisIndex(creators_asc, std::move(l2)));
}

std::vector<Index> descending_annihilators(const BasisIndex& b) {
    return {b.lambda2().rbegin(), b.lambda2().rend()};
}

// λ-form times trivial pi-form a_i a_i†.
Element lambda_times_pi(const BasisIndex& x1, Index i) {
    const IndexSet& creators = x1.lambda1();
    const auto anni = descending_annihilators(x1);
    if (!anni.empty()) {
        // trailing annihilator a_{j_s} meets the projection
        return delta_below(anni.back(), i) ? Element(x1) : Element::zero();
    }
    const Index im = creators.back();  // s = 0 and x1 ≠ I, so m > 0
    if (i <= im) return Element(x1);
    Element r(x1);
    for (Index l = im + 1; l <= i; ++l) {
        IndexSet c = creators;
        c.push_back(l);
        r -= wick_element(c, {l});
    }
    return r;
}

// trivial pi-form a_i a_i† times λ-form.
Element pi_times_lambda(Index i, const BasisIndex& x1) {
    const IndexSet& creators = x1.lambda1();
    const auto anni = descending_annihilators(x1);
    if (!creators.empty())
        return delta_below(creators.front(), i) ? Element(x1) : Element::zero();
    const Index j1 = anni.front();  // m = 0 and x1 ≠ I, so n > 0
    if (i <= j1) return Element(x1);
    Element r(x1);
    for (Index l = j1 + 1; l <= i; ++l) {
        std::vector<Index> a{l};
        a.insert(a.end(), anni.begin(), anni.end());
        r -= wick_element({l}, a);
    }
    return r;
}

Element lambda_times_lambda(const BasisIndex& b1, const BasisIndex& b2) {
    const IndexSet& i_set = b1.lambda1();
    const auto j = descending_annihilators(b1);  // j_1 > … > j_s
    const IndexSet& k_set = b2.lambda1();        // k_1 < … < k_r
    const auto l = descending_annihilators(b2);  // l_1 > … > l_p
    const std::size_t s = j.size(), r = k_set.size();

    if (s < r) {
        // contract all of X1's annihilators against the leading creators
        for (std::size_t h = 1; h <= s; ++h)
            if (j[h - 1] != k_set[s - h]) return Element::zero();
        if (!i_set.empty() && !delta_below(k_set[s], i_set.back()))
            return Element::zero();
        IndexSet creators = i_set;
        creators.insert(creators.end(), k_set.begin() + s, k_set.end());
        return wick_element(creators, l);
    }
    // r ≤ s: contract all of X2's creators against the trailing annihilators
    for (std::size_t h = 1; h <= r; ++h)
        if (j[s - h] != k_set[h - 1]) return Element::zero();
    if (s - r > 0 && !l.empty() && !delta_below(j[s - r - 1], l.front()))
        return Element::zero();
    std::vector<Index> anni(j.begin(), j.begin() + (s - r));
    anni.insert(anni.end(), l.begin(), l.end());
    return wick_element(i_set, anni);
}

}  // namespace

Element product_closed_form(const BasisIndex& b1, const BasisIndex& b2) {
    if (b1.is_identity()) return Element(b2);
    if (b2.is_identity()) return Element(b1);
    const bool p1 = b1.is_trivial_pi(), p2 = b2.is_trivial_pi();
    if (p1 && p2)
        return Element(trivial_pi(std::max(b1.lambda1()[0], b2.lambda1()[0])));
    if (p2) return lambda_times_pi(b1, b2.lambda1()[0]);
    if (p1) return pi_times_lambda(b1.lambda1()[0], b2);
    return lambda_times_lambda(b1, b2);
}

std::string to_string(const LetterWord& w) {
    std::string s;
    for (const Letter& x : w) {
        if (!s.empty()) s += ' ';
        s += (x.kind == LetterKind::Creator ? "c(" : "a(");
        s += std::to_string(x.index);
        s += ')';
    }
    return s.empty() ? "I" : s;
}

}  // namespace mono
