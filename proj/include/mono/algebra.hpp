#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mono/scalar.hpp"

namespace mono {

using Index = std::int64_t;
using IndexSet = std::vector<Index>;  // strictly ascending

enum class LetterKind { Creator, Annihilator };

struct Letter {
    LetterKind kind;
    Index index;

    bool operator==(const Letter&) const = default;
};

inline Letter creator(Index i) { return {LetterKind::Creator, i}; }
inline Letter annihilator(Index i) { return {LetterKind::Annihilator, i}; }

// Raw finite product of generators; empty word is the identity.
using LetterWord = std::vector<Letter>;

// Names one Hamel-basis word by a pair of finite ascending integer sets.
//   (∅,∅)              identity
//   ({i},{i})          trivial pi-form  a_i a_i†
//   anything else      lambda-form with creators over lambda1 ascending and
//                      annihilators over lambda2 in descending word order
class BasisIndex {
public:
    BasisIndex() = default;
    // Accepts sets in any order; sorts ascending. Duplicate entries within a
    // set are collapsed (set semantics).
    BasisIndex(IndexSet lambda1, IndexSet lambda2);

    const IndexSet& lambda1() const { return l1_; }
    const IndexSet& lambda2() const { return l2_; }

    bool is_identity() const { return l1_.empty() && l2_.empty(); }
    bool is_trivial_pi() const {
        return l1_.size() == 1 && l2_.size() == 1 && l1_[0] == l2_[0];
    }
    bool is_lambda_form() const { return !is_trivial_pi(); }

    // m+n for lambda-forms, 2 for trivial pi-forms, 0 for the identity.
    std::size_t word_length() const;

    // (λ₁,λ₂) ↦ (λ₂,λ₁); an involution mapping basis words to basis words.
    BasisIndex adjoint() const { return BasisIndex(l2_, l1_); }

    // Expansion into generator letters (creators ascending, then the
    // annihilators in descending index order; a_i a_i† for trivial pi).
    LetterWord letters() const;

    // Canonical order: (word_length, λ₁, λ₂) lexicographically.
    std::strong_ordering operator<=>(const BasisIndex& o) const;
    bool operator==(const BasisIndex& o) const = default;

private:
    IndexSet l1_, l2_;
};

// Finite formal rational-linear combination of basis words. Keys are kept in
// canonical order and no stored coefficient is zero, so map equality is
// operator equality (Hamel-basis uniqueness).
class Element {
public:
    Element() = default;
    explicit Element(const BasisIndex& b, Scalar c = 1);

    static Element identity() { return Element(BasisIndex{}); }
    static Element zero() { return {}; }

    const std::map<BasisIndex, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(const BasisIndex& b) const;

    void add_term(const BasisIndex& b, const Scalar& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& c);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& c, Element x) { return x *= c; }

    // Conjugates coefficients (identity on rationals) and takes each basis
    // word to its adjoint.
    Element adjoint() const;

    bool operator==(const Element&) const = default;

    // Largest index magnitude over all stored basis words; 0 for zero/I.
    Index max_abs_index() const;
    std::size_t max_word_length() const;

private:
    std::map<BasisIndex, Scalar> terms_;
};

}  // namespace mono
