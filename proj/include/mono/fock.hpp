#pragma once

#include <map>
#include <vector>

#include "mono/algebra.hpp"

namespace mono {

// Strictly increasing finite integer tuple; the empty tuple is the vacuum Ω.
class FockBasisVector {
public:
    FockBasisVector() = default;
    explicit FockBasisVector(std::vector<Index> indices);

    const std::vector<Index>& indices() const { return idx_; }
    bool is_vacuum() const { return idx_.empty(); }

    auto operator<=>(const FockBasisVector&) const = default;

private:
    std::vector<Index> idx_;
};

// Finite rational combination of basis vectors; zero coefficients pruned.
class FockVector {
public:
    FockVector() = default;
    explicit FockVector(const FockBasisVector& e, Scalar c = 1);

    static FockVector vacuum() { return FockVector(FockBasisVector{}); }

    const std::map<FockBasisVector, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FockBasisVector& e, const Scalar& c);
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Scalar& c);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

    bool operator==(const FockVector&) const = default;

private:
    std::map<FockBasisVector, Scalar> terms_;
};

// The defining actions: a_i† prepends i when i lies below the tuple minimum,
// a_i strips a leading i; both give 0 otherwise.
FockVector apply_letter(const Letter& x, const FockBasisVector& e);

FockVector apply_word(const LetterWord& w, const FockVector& v);
FockVector apply_element(const Element& x, const FockVector& v);

Scalar inner(const FockVector& u, const FockVector& v);
Scalar matrix_element(const Element& x, const FockVector& xi, const FockVector& eta);

// U^k: adds k to every index.
FockBasisVector shift_basis(Index k, const FockBasisVector& e);

struct WitnessPair {
    FockVector xi, eta;
};

// Evaluation-matrix witnesses for a finite family of basis words: the matrix
// M[s][w] = matrix_element(X_s, ξ_w, η_w) is triangular with unit diagonal
// when S is kept in canonical order, so a combination over S vanishes iff all
// witness matrix elements do.
std::vector<WitnessPair> independence_witnesses(const std::vector<BasisIndex>& S);

// All strictly increasing tuples with entries in [lo, hi] and length ≤ max_len
// (vacuum included).
std::vector<FockBasisVector> basis_window(Index lo, Index hi, std::size_t max_len);

}  // namespace mono
