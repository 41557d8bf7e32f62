#include "mono/algebra.hpp"

#include <algorithm>
#include <charconv>

namespace mono {

std::optional<Scalar> parse_scalar(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(text);
            return Scalar(n);
        }
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Scalar(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

BasisIndex::BasisIndex(IndexSet lambda1, IndexSet lambda2)
    : l1_(std::move(lambda1)), l2_(std::move(lambda2)) {
    auto canon = [](IndexSet& s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    };
    canon(l1_);
    canon(l2_);
}

std::size_t BasisIndex::word_length() const {
    return l1_.size() + l2_.size();
}

LetterWord BasisIndex::letters() const {
    LetterWord w;
    if (is_trivial_pi()) {
        w.push_back(annihilator(l1_[0]));
        w.push_back(creator(l1_[0]));
        return w;
    }
    for (Index i : l1_) w.push_back(creator(i));
    for (auto it = l2_.rbegin(); it != l2_.rend(); ++it)
        w.push_back(annihilator(*it));
    return w;
}

std::strong_ordering BasisIndex::operator<=>(const BasisIndex& o) const {
    if (auto c = word_length() <=> o.word_length(); c != 0) return c;
    if (auto c = l1_ <=> o.l1_; c != 0) return c;
    return l2_ <=> o.l2_;
}

Element::Element(const BasisIndex& b, Scalar c) {
    if (c != 0) terms_.emplace(b, std::move(c));
}

Scalar Element::coefficient(const BasisIndex& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const BasisIndex& b, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, v] : terms_) v *= c;
    return *this;
}

Element Element::adjoint() const {
    Element r;
    for (const auto& [b, c] : terms_) r.add_term(b.adjoint(), c);
    return r;
}

Index Element::max_abs_index() const {
    Index m = 0;
    for (const auto& [b, c] : terms_) {
        for (Index i : b.lambda1()) m = std::max(m, i < 0 ? -i : i);
        for (Index i : b.lambda2()) m = std::max(m, i < 0 ? -i : i);
    }
    return m;
}

std::size_t Element::max_word_length() const {
    std::size_t m = 0;
    for (const auto& [b, c] : terms_) m = std::max(m, b.word_length());
    return m;
}

}  // namespace mono
