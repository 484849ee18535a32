#pragma once

// Symmetric-group character theory, kept free of any tableau code so it can
// serve as an independent check on the LR engine and the internal-product
// formulas.

#include <map>
#include <string>
#include <vector>

#include "spf/expansion.hpp"
#include "spf/partition.hpp"

namespace spf {

/// A partition of d read as a conjugacy class of S_d.
using CycleType = Partition;

/// An integer-valued class function on S_d.
class ClassFunction {
public:
    explicit ClassFunction(int degree);

    int degree() const noexcept { return degree_; }
    /// Value on the class rho; every partition of degree() is present.
    Count at(const CycleType& rho) const;
    void set(const CycleType& rho, Count value);
    const std::map<CycleType, Count, std::greater<>>& values() const noexcept { return values_; }

    /// Pointwise product.
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    int degree_;
    std::map<CycleType, Count, std::greater<>> values_;
};

/// z_ρ = Π i^{m_i} m_i!; the class of ρ has d!/z_ρ elements.
Count centralizer_order(const CycleType& rho);
Count class_size(const CycleType& rho);

/// χ^λ(ρ) by the Murnaghan-Nakayama rule.
Count mn_character(const Partition& lambda, const CycleType& rho);

/// χ^λ as a class function.
ClassFunction irreducible_character(const Partition& lambda);

/// f^λ by the hook-length formula.
Count dimension(const Partition& lambda);

/// ⟨χ, ψ⟩ for integer class functions; throws ConsistencyError when the
/// result is not an integer.
Count inner_product(const ClassFunction& a, const ClassFunction& b);

/// g(λ, µ, α) = Σ_ρ χ^λ χ^µ χ^α (ρ) / z_ρ.
Count kronecker_oracle(const Partition& lambda, const Partition& mu, const Partition& alpha);

/// Σ_α g(λ, µ, α) s_α.
SchurExpansion kronecker_oracle_expansion(const Partition& lambda, const Partition& mu);

/// Character of the permutation module M^ν: the value at ρ is the number of
/// ways to distribute the cycles of ρ into blocks of sizes ν_1, ν_2, ...
ClassFunction perm_character(const Composition& nu);

/// c^λ_{µν} through the induction product of characters.
Count lr_oracle(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Σ_β ⟨χ^λ · perm_character(ν), χ^β⟩ s_β.
SchurExpansion internal_h_oracle(const Partition& lambda, const Composition& nu);

/// Decomposes an integer class function into irreducibles.
SchurExpansion decompose(const ClassFunction& chi);

/// Character memo table keyed "lambda|rho" by canonical encodings.
std::map<std::string, Count> character_cache_snapshot();
void character_cache_load(const std::map<std::string, Count>& entries);
void character_cache_clear();

}  // namespace spf
