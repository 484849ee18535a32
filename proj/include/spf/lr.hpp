#pragma once

// Littlewood-Richardson coefficients, Kostka numbers and arithmetic on
// expansions in the Schur (equivalently Weyl) basis.

#include <map>
#include <string>

#include "spf/expansion.hpp"
#include "spf/partition.hpp"

namespace spf {

struct LRQuery {
    Partition outer;
    Partition left;
    Partition right;
};

/// Number of semistandard tableaux of shape lambda and content mu. A degree
/// mismatch yields 0, or throws InputError when strict.
Count kostka(const Partition& lambda, const Composition& mu, bool strict = false);

/// c^{outer}_{left,right}, counted as Littlewood-Richardson skew tableaux of
/// shape outer/left and content right. Impossible queries give 0.
Count lr_coeff(const LRQuery& q);
inline Count lr_coeff(const Partition& outer, const Partition& left, const Partition& right) {
    return lr_coeff(LRQuery{outer, left, right});
}

/// Σ_β c^{outer}_{inner,β} s_β.
SchurExpansion skew_schur_expansion(const SkewShape& s);

/// Bilinear extension of s_µ s_ν = Σ c^λ_{µν} s_λ.
SchurExpansion schur_outer_product(const SchurExpansion& a, const SchurExpansion& b);

/// Relabels every s_λ as s_λ'.
SchurExpansion conjugate_expansion(const SchurExpansion& a);

/// h_ν = Σ_λ K_{λν} s_λ.
SchurExpansion complete_homogeneous_expansion(const Composition& nu);

/// The LR memo table, keyed "outer|left|right" by canonical encodings.
std::map<std::string, Count> lr_cache_snapshot();
/// Seeds the LR memo table. Entries are trusted as exact.
void lr_cache_load(const std::map<std::string, Count>& entries);
void lr_cache_clear();

}  // namespace spf
