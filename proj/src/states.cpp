#include "mono/states.hpp"

#include <stdexcept>

#include "mono/wick.hpp"

namespace mono {

StateSpec StateSpec::mixed(Scalar weight) {
    if (weight < 0 || weight > 1)
        throw std::invalid_argument("mixing weight must lie in [0,1]");
    return {Mixed, std::move(weight)};
}

namespace {

Scalar vacuum_value(const Element& x) {
    // ⟨XΩ,Ω⟩: only the identity and the trivial pi-forms a_i a_i† (which fix
    // Ω) contribute.
    Scalar v = 0;
    for (const auto& [b, c] : x.terms())
        if (b.is_identity() || b.is_trivial_pi()) v += c;
    return v;
}

Scalar infinity_value(const Element& x) {
    return x.coefficient(BasisIndex{});
}

}  // namespace

Scalar evaluate(const StateSpec& s, const Element& x) {
    switch (s.kind) {
        case StateSpec::Vacuum: return vacuum_value(x);
        case StateSpec::Infinity: return infinity_value(x);
        case StateSpec::Mixed:
            return (Scalar(1) - s.x) * infinity_value(x) + s.x * vacuum_value(x);
    }
    throw std::logic_error("unreachable");
}

Scalar positivity_probe(const StateSpec& s, const Element& z) {
    return evaluate(s, multiply(z.adjoint(), z));
}

std::vector<BasisIndex> basis_index_window(Index lo, Index hi, std::size_t max_len) {
    std::vector<IndexSet> subsets;
    subsets.emplace_back();
    std::vector<Index> cur;
    auto rec = [&](auto&& self, Index next) -> void {
        if (cur.size() >= max_len) return;
        for (Index i = next; i <= hi; ++i) {
            cur.push_back(i);
            subsets.push_back(cur);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, lo);

    std::vector<BasisIndex> out;
    for (const IndexSet& a : subsets)
        for (const IndexSet& b : subsets) {
            if (a.size() + b.size() > max_len) continue;
            BasisIndex idx(a, b);
            // the diagonal singleton pair is the trivial pi-form, valid;
            // every ascending pair names exactly one basis word
            out.push_back(std::move(idx));
        }
    return out;
}

InvarianceReport check_invariance(const StateSpec& s,
                                  const std::function<Element(const Element&)>& transform,
                                  Index lo, Index hi, std::size_t max_len) {
    InvarianceReport report;
    for (const BasisIndex& b : basis_index_window(lo, hi, max_len)) {
        Element x(b);
        Scalar before = evaluate(s, x);
        Scalar after = evaluate(s, transform(x));
        ++report.checked;
        if (before != after) report.violations.push_back({b, before, after});
    }
    return report;
}

}  // namespace mono
