#include "mono/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace mono {

FockBasisVector::FockBasisVector(std::vector<Index> indices)
    : idx_(std::move(indices)) {
    for (std::size_t i = 1; i < idx_.size(); ++i)
        if (idx_[i - 1] >= idx_[i])
            throw std::invalid_argument("Fock basis tuple must be strictly increasing");
}

FockVector::FockVector(const FockBasisVector& e, Scalar c) {
    if (c != 0) terms_.emplace(e, std::move(c));
}

void FockVector::add_term(const FockBasisVector& e, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

FockVector& FockVector::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

FockVector apply_letter(const Letter& x, const FockBasisVector& e) {
    const auto& t = e.indices();
    if (x.kind == LetterKind::Creator) {
        if (t.empty() || x.index < t.front()) {
            std::vector<Index> r;
            r.reserve(t.size() + 1);
            r.push_back(x.index);
            r.insert(r.end(), t.begin(), t.end());
            return FockVector(FockBasisVector(std::move(r)));
        }
        return {};
    }
    if (!t.empty() && x.index == t.front())
        return FockVector(FockBasisVector({t.begin() + 1, t.end()}));
    return {};
}

FockVector apply_word(const LetterWord& w, const FockVector& v) {
    FockVector cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        FockVector next;
        for (const auto& [e, c] : cur.terms()) {
            FockVector img = apply_letter(*it, e);
            img *= c;
            next += img;
        }
        cur = std::move(next);
    }
    return cur;
}

FockVector apply_element(const Element& x, const FockVector& v) {
    FockVector r;
    for (const auto& [b, c] : x.terms()) {
        FockVector img = apply_word(b.letters(), v);
        img *= c;
        r += img;
    }
    return r;
}

Scalar inner(const FockVector& u, const FockVector& v) {
    // orthonormal basis, rational coefficients
    Scalar r = 0;
    const auto& a = u.terms();
    const auto& b = v.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            r += ia->second * ib->second;
            ++ia, ++ib;
        }
    }
    return r;
}

Scalar matrix_element(const Element& x, const FockVector& xi, const FockVector& eta) {
    return inner(apply_element(x, xi), eta);
}

FockBasisVector shift_basis(Index k, const FockBasisVector& e) {
    std::vector<Index> r = e.indices();
    for (Index& i : r) i += k;
    return FockBasisVector(std::move(r));
}

std::vector<WitnessPair> independence_witnesses(const std::vector<BasisIndex>& S) {
    // Witnesses follow the linear-independence proof: Ω-like probe for the
    // identity below every other index, e_{k+1} for the trivial pi-form at k,
    // and the (ξ_λ, η_λ) pair built from the index sets of a λ-form. Taken in
    // canonical order the evaluation matrix is upper triangular with 1s.
    std::vector<BasisIndex> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<WitnessPair> out;
    out.reserve(sorted.size());
    for (const BasisIndex& b : sorted) {
        if (b.is_identity()) {
            // p below the least annihilator of any λ-form and the least
            // trivial-pi index, so everything else vanishes on e_p.
            Index p = 0;
            bool seen = false;
            for (const BasisIndex& o : sorted) {
                if (o.is_identity()) continue;
                Index h;
                if (o.is_trivial_pi())
                    h = o.lambda1()[0];
                else if (!o.lambda2().empty())
                    h = o.lambda2().front();
                else
                    h = o.lambda1().back();
                p = seen ? std::min(p, h) : h;
                seen = true;
            }
            p = seen ? p - 1 : 0;
            FockVector v{FockBasisVector({p})};
            out.push_back({v, v});
        } else if (b.is_trivial_pi()) {
            FockVector v{FockBasisVector({b.lambda1()[0] + 1})};
            out.push_back({v, v});
        } else {
            FockVector xi{FockBasisVector(b.lambda2())};
            FockVector eta{FockBasisVector(b.lambda1())};
            out.push_back({xi, eta});
        }
    }
    return out;
}

std::vector<FockBasisVector> basis_window(Index lo, Index hi, std::size_t max_len) {
    std::vector<FockBasisVector> out;
    out.emplace_back();
    std::vector<Index> cur;
    auto rec = [&](auto&& self, Index next) -> void {
        if (cur.size() >= max_len) return;
        for (Index i = next; i <= hi; ++i) {
            cur.push_back(i);
            out.emplace_back(cur);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, lo);
    return out;
}

}  // namespace mono
