#include "mono/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mono {

Index eval_theta(Index h, Index k) { return k < h ? k : k + 1; }
Index eval_psi(Index h, Index k) { return k > h ? k : k - 1; }

MonoidElement::MonoidElement(std::vector<MapGenerator> word)
    : word_(std::move(word)) {
    for (const MapGenerator& g : word_)
        if (g.kind != MapGenerator::Tau && g.exponent < 0)
            throw std::invalid_argument("partial-shift exponent must be non-negative");
}

MonoidElement MonoidElement::theta(Index h, Index e) {
    return MonoidElement({{MapGenerator::Theta, h, e}});
}

MonoidElement MonoidElement::psi(Index h, Index e) {
    return MonoidElement({{MapGenerator::Psi, h, e}});
}

MonoidElement MonoidElement::tau(Index k) {
    return MonoidElement({{MapGenerator::Tau, 0, k}});
}

Index MonoidElement::operator()(Index k) const {
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
        switch (it->kind) {
            case MapGenerator::Theta:
                for (Index e = 0; e < it->exponent; ++e) k = eval_theta(it->base, k);
                break;
            case MapGenerator::Psi:
                for (Index e = 0; e < it->exponent; ++e) k = eval_psi(it->base, k);
                break;
            case MapGenerator::Tau:
                k += it->exponent;
                break;
        }
    }
    return k;
}

MonoidElement MonoidElement::compose(const MonoidElement& other) const {
    std::vector<MapGenerator> w = word_;
    w.insert(w.end(), other.word_.begin(), other.word_.end());
    return MonoidElement(std::move(w));
}

std::string MonoidElement::to_string() const {
    if (word_.empty()) return "id";
    std::ostringstream os;
    bool first = true;
    for (const MapGenerator& g : word_) {
        if (!first) os << ' ';
        first = false;
        switch (g.kind) {
            case MapGenerator::Theta: os << "theta:" << g.base; break;
            case MapGenerator::Psi: os << "psi:" << g.base; break;
            case MapGenerator::Tau: os << "tau:" << g.exponent; continue;
        }
        if (g.exponent != 1) os << '^' << g.exponent;
    }
    return os.str();
}

Permutation::Permutation(const std::map<Index, Index>& mapping) {
    std::map<Index, Index> inv;
    for (const auto& [from, to] : mapping) {
        if (from == to) continue;
        if (!inv.emplace(to, from).second)
            throw std::invalid_argument("permutation mapping is not injective");
        map_.emplace(from, to);
    }
    for (const auto& [to, from] : inv)
        if (!map_.count(to))
            throw std::invalid_argument("permutation mapping is not a bijection of its support");
}

Permutation Permutation::transposition(Index a, Index b) {
    if (a == b) return {};
    return Permutation({{a, b}, {b, a}});
}

Permutation Permutation::cycle(const std::vector<Index>& elems) {
    if (elems.size() < 2) return {};
    std::map<Index, Index> m;
    for (std::size_t i = 0; i < elems.size(); ++i)
        m[elems[i]] = elems[(i + 1) % elems.size()];
    return Permutation(m);
}

Permutation Permutation::parse_cycles(const std::string& text) {
    std::map<Index, Index> m;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("expected '(' in cycle notation");
        ++pos;
        std::vector<Index> elems;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') { ++pos; break; }
            std::size_t start = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start)
                throw std::invalid_argument("expected integer in cycle notation");
            elems.push_back(std::stoll(text.substr(start, pos - start)));
        }
        for (std::size_t i = 0; i < elems.size() && elems.size() >= 2; ++i) {
            Index from = elems[i], to = elems[(i + 1) % elems.size()];
            if (from != to && !m.emplace(from, to).second)
                throw std::invalid_argument("cycles are not disjoint");
        }
        skip_ws();
    }
    return Permutation(m);
}

Index Permutation::operator()(Index k) const {
    auto it = map_.find(k);
    return it == map_.end() ? k : it->second;
}

Permutation Permutation::inverse() const {
    std::map<Index, Index> m;
    for (const auto& [from, to] : map_) m[to] = from;
    return Permutation(m);
}

std::string Permutation::to_cycles() const {
    if (map_.empty()) return "()";
    std::ostringstream os;
    std::map<Index, bool> seen;
    for (const auto& [start, _] : map_) {
        if (seen[start]) continue;
        os << '(' << start;
        seen[start] = true;
        for (Index k = (*this)(start); k != start; k = (*this)(k)) {
            os << ' ' << k;
            seen[k] = true;
        }
        os << ')';
    }
    return os.str();
}

BasisIndex act_on_index(const std::function<Index(Index)>& g, const BasisIndex& b) {
    auto map_set = [&](const IndexSet& s) {
        IndexSet r;
        r.reserve(s.size());
        for (Index i : s) r.push_back(g(i));
        for (std::size_t i = 1; i < r.size(); ++i)
            if (r[i - 1] >= r[i])
                throw std::invalid_argument("index map is not order preserving on the word");
        return r;
    };
    return BasisIndex(map_set(b.lambda1()), map_set(b.lambda2()));
}

namespace {

Element map_element(const Element& x, const std::function<Index(Index)>& g) {
    Element r;
    for (const auto& [b, c] : x.terms()) r.add_term(act_on_index(g, b), c);
    return r;
}

}  // namespace

Element beta(Index k, const Element& x) {
    return map_element(x, [k](Index i) { return eval_theta(k, i); });
}

Element gamma(Index k, const Element& x) {
    return map_element(x, [k](Index i) { return eval_psi(k, i); });
}

Element alpha(Index k, const Element& x) {
    return map_element(x, [k](Index i) { return i + k; });
}

namespace {

// Ascending case l(m) ≥ m of the witness construction:
//   θ_{l(n−1)+1}^{l(n)−l(n−1)−1} ⋯ θ_{l(m)+1}^{l(m+1)−l(m)−1} θ_m^{l(m)−m}
MonoidElement ascending_witness(Index m, const std::vector<Index>& l) {
    std::vector<MapGenerator> w;
    const Index n = m + static_cast<Index>(l.size()) - 1;
    for (Index j = n; j > m; --j) {
        const Index prev = l[j - 1 - m];
        w.push_back({MapGenerator::Theta, prev + 1, l[j - m] - prev - 1});
    }
    w.push_back({MapGenerator::Theta, m, l[0] - m});
    std::erase_if(w, [](const MapGenerator& g) { return g.exponent == 0; });
    return MonoidElement(std::move(w));
}

}  // namespace

MonoidElement spread_witness(Index m, Index n, const std::vector<Index>& targets) {
    if (m > n) throw std::invalid_argument("interval is empty");
    if (targets.size() != static_cast<std::size_t>(n - m + 1))
        throw std::invalid_argument("target count must match interval length");
    for (std::size_t i = 1; i < targets.size(); ++i)
        if (targets[i - 1] >= targets[i])
            throw std::invalid_argument("targets must be strictly increasing");

    if (targets[0] >= m) return ascending_witness(m, targets);

    // l(m) < m: shift the interval down onto [l(m), l(m)+n−m] first, then
    // spread from there.
    const Index drop = m - targets[0];
    MonoidElement down = MonoidElement::psi(n, drop);
    MonoidElement up = ascending_witness(targets[0], targets);
    return up.compose(down);
}

bool is_order_preserving(const Permutation& sigma, const IndexSet& S) {
    for (std::size_t i = 1; i < S.size(); ++i)
        if (sigma(S[i - 1]) >= sigma(S[i])) return false;
    return true;
}

Element t_sigma(const Permutation& sigma, const Element& x) {
    Element r;
    for (const auto& [b, c] : x.terms()) {
        if (!is_order_preserving(sigma, b.lambda1()) ||
            !is_order_preserving(sigma, b.lambda2()))
            continue;
        auto img = [&](const IndexSet& s) {
            IndexSet v;
            v.reserve(s.size());
            for (Index i : s) v.push_back(sigma(i));
            return v;
        };
        r.add_term(BasisIndex(img(b.lambda1()), img(b.lambda2())), c);
    }
    return r;
}

Permutation cycle_for_shift(const BasisIndex& b) {
    IndexSet s = b.lambda1();
    s.insert(s.end(), b.lambda2().begin(), b.lambda2().end());
    if (s.empty()) return {};
    auto [lo_it, hi_it] = std::minmax_element(s.begin(), s.end());
    std::vector<Index> cyc;
    for (Index k = *lo_it; k <= *hi_it + 1; ++k) cyc.push_back(k);
    // (lo lo+1 … hi+1): every element of S moves up by one, hi+1 wraps to lo
    return Permutation::cycle(cyc);
}

}  // namespace mono
