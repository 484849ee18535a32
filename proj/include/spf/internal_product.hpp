#pragma once

// Internal tensor products of strict polynomial functors at the level of
// characters: exponential functors, Weyl functors against Γ^ν and ∧^ν, and
// Kronecker decompositions Δ(λ) ⊗ Δ(µ) in characteristic 0.

#include <string>
#include <string_view>
#include <vector>

#include "spf/expansion.hpp"
#include "spf/partition.hpp"

namespace spf {

enum class Family { Gamma, Sym, Wedge };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

/// Γ^λ, Sym^λ or ∧^λ for a weight λ: the tensor product of the degree-λ_i pieces.
struct ExpFunctor {
    Family family;
    Composition weight;
};

/// How 2 behaves in the ground ring.
enum class CharTwoMode { TwoInvertible, TwoZero, TwoNonzeroNonunit };

/// ⊕_ν F^ν over a multiset of weights ν, all of one degree.
struct ExpDecomposition {
    Family family;
    std::vector<Composition> summands;
};

/// Γ^µ ⊗ Γ^λ: one Γ^ν per contingency matrix with row sums µ and column sums
/// λ, ν read row-major.
ExpDecomposition gamma_tensor_gamma(const Composition& mu, const Composition& lambda);

/// Internal product of two exponential functors. The summands are always the
/// contingency weights of (left.weight, right.weight); only the family
/// depends on the pair. Sym ⊗ ∧ with `TwoNonzeroNonunit` throws
/// NotExponentialError.
ExpDecomposition exponential_tensor(const ExpFunctor& left, const ExpFunctor& right,
                                    CharTwoMode mode = CharTwoMode::TwoInvertible);

/// Weyl-filtration multiplicities of Δ(λ) ⊗ Γ^ν. Summed over chains
/// ∅ = α^0 ⊆ α^1 ⊆ ... ⊆ α^n = λ with |α^i/α^{i-1}| = ν_i of the product of
/// the skew expansions s_{α^i/α^{i-1}}. Valid over any ground ring.
SchurExpansion weyl_tensor_gamma(const Partition& lambda, const Composition& nu);

/// Dual-Weyl-filtration multiplicities of Δ(λ) ⊗ ∧^ν ≅ ∇(λ') ⊗ Γ^ν; key β
/// stands for ∇(β).
SchurExpansion weyl_tensor_wedge(const Partition& lambda, const Composition& nu);

struct SignedComposition {
    int sign;
    Composition weight;
    friend bool operator==(const SignedComposition&, const SignedComposition&) = default;
};

inline constexpr int kDefaultJacobiTrudiBound = 12;

/// Terms of det(h_{µ_i - i + j}): one (sign σ, (µ_i - i + σ(i))_i) per
/// permutation σ with all indices non-negative, permutations in
/// lexicographic order.
std::vector<SignedComposition> jacobi_trudi(const Partition& mu, int max_parts = kDefaultJacobiTrudiBound);

/// Δ(λ) ⊗ Δ(µ) as the alternating sum of Δ(λ) ⊗ Γ^ν over the
/// Jacobi-Trudi terms of µ.
SchurExpansion kronecker_general(const Partition& lambda, const Partition& mu);

/// Δ(λ) ⊗ Δ((a,b)) from Γ^(a,b) ≅ Γ^(a+1,b-1) ⊕ Δ((a,b)).
SchurExpansion kronecker_two_row(const Partition& lambda, int a, int b);

/// Δ(λ) ⊗ Δ((a,1)) = (c - 1) Δ(λ) ⊕ ⊕_α Δ(α), c the number of outer corners
/// of λ and α running over single-box moves of λ.
SchurExpansion kronecker_one_box(const Partition& lambda, int a);

/// Δ(λ) ⊗ (Γ^p ⊗ ∧^q): coefficient of s_α is Σ c^{λ'}_{µ',ν} c^α_{µ,ν}
/// over |µ| = p, |ν| = q.
SchurExpansion hook_mixed(const Partition& lambda, int p, int q);

/// Δ(λ) ⊗ Δ((p,1^q)) = Σ_{i=0..q} (-1)^i Δ(λ) ⊗ (Γ^{p+i} ⊗ ∧^{q-i}).
SchurExpansion kronecker_hook(const Partition& lambda, int p, int q);

enum class KroneckerMethod { Auto, General, TwoRow, OneBox, Hook };

std::string_view to_string(KroneckerMethod m);
KroneckerMethod parse_method(std::string_view text);

struct KroneckerResult {
    KroneckerMethod method;  // never Auto
    SchurExpansion expansion;
};

/// Picks the procedure for µ: one-box for (a,1), two-row for (a,b) with
/// b ≥ 2, hook for (p,1^q) with q ≥ 1, general otherwise. An explicit method
/// that does not fit µ throws InputError.
KroneckerResult kronecker(const Partition& lambda, const Partition& mu, KroneckerMethod method = KroneckerMethod::Auto);

}  // namespace spf
