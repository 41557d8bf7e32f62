#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mono/algebra.hpp"

namespace mono {

// Generators of the monoid of index maps: the partial shifts θ_h, ψ_h and
// integer powers of the one-step shift τ.
//   θ_h(k) = k   for k < h,   k+1 for k ≥ h   (image omits h)
//   ψ_h(k) = k   for k > h,   k−1 for k ≤ h   (image omits h)
struct MapGenerator {
    enum Kind { Theta, Psi, Tau } kind;
    Index base;      // h for θ/ψ; ignored for τ
    Index exponent;  // ≥ 0 for θ/ψ, any sign for τ

    bool operator==(const MapGenerator&) const = default;
};

Index eval_theta(Index h, Index k);
Index eval_psi(Index h, Index k);

// Word in the generators, composed right to left (functional order).
class MonoidElement {
public:
    MonoidElement() = default;
    explicit MonoidElement(std::vector<MapGenerator> word);

    static MonoidElement theta(Index h, Index e = 1);
    static MonoidElement psi(Index h, Index e = 1);
    static MonoidElement tau(Index k);

    const std::vector<MapGenerator>& word() const { return word_; }

    Index operator()(Index k) const;

    // this ∘ other
    MonoidElement compose(const MonoidElement& other) const;

    std::string to_string() const;

private:
    std::vector<MapGenerator> word_;
};

// Finitely supported bijection of the integers.
class Permutation {
public:
    Permutation() = default;
    // Mapping pairs must form a bijection of their (finite) support.
    explicit Permutation(const std::map<Index, Index>& mapping);

    static Permutation transposition(Index a, Index b);
    // (c_0 c_1 … c_{k-1}): c_0 → c_1 → … → c_{k-1} → c_0
    static Permutation cycle(const std::vector<Index>& elems);
    // e.g. "(0 1)(3 5 4)"
    static Permutation parse_cycles(const std::string& text);

    Index operator()(Index k) const;
    Permutation inverse() const;
    const std::map<Index, Index>& support_map() const { return map_; }

    std::string to_cycles() const;

private:
    std::map<Index, Index> map_;  // support only
};

// Componentwise action of an order-preserving index map on a basis word.
// Throws std::invalid_argument if the map fails to be strictly increasing on
// either component set.
BasisIndex act_on_index(const std::function<Index(Index)>& g, const BasisIndex& b);

// β_k, γ_k, α^k: linear extensions of θ_k, ψ_k, τ^k acting componentwise on
// the Hamel basis; each is a unital *-endomorphism.
Element beta(Index k, const Element& x);
Element gamma(Index k, const Element& x);
Element alpha(Index k, const Element& x);

// The canonical witness of spreadability: a product of partial-shift powers
// agreeing with the strictly increasing targets l on [m,n]. Throws on a
// non-increasing target list or m > n.
MonoidElement spread_witness(Index m, Index n, const std::vector<Index>& targets);

bool is_order_preserving(const Permutation& sigma, const IndexSet& S);

// T_σ: sends X_(λ₁,λ₂) to X_(σλ₁,σλ₂) when σ is order preserving on both
// components, and to 0 otherwise; extended linearly. Not multiplicative and
// not positive.
Element t_sigma(const Permutation& sigma, const Element& x);

// A finite cycle acting as the one-step shift on λ₁ ∪ λ₂ and order preserving
// there, so t_sigma(σ, X_b) = alpha(1, X_b).
Permutation cycle_for_shift(const BasisIndex& b);

}  // namespace mono
