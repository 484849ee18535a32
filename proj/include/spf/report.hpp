#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spf/expansion.hpp"
#include "spf/internal_product.hpp"
#include "spf/partition.hpp"

namespace spf {

enum class Basis { Weyl, DualWeyl, Gamma, Sym, Wedge };

std::string_view to_string(Basis b);
Basis parse_basis(std::string_view text);
Basis basis_of(Family f);

/// A decomposition ready for output. `expansion` is ordered descending
/// lexicographically with nonzero multiplicities. `weights` optionally lists
/// the raw composition-level terms (contingency weights, Jacobi-Trudi terms)
/// before collapsing ν to its sorted partition.
struct ExpansionReport {
    int degree = 0;
    std::string method;
    Basis basis = Basis::Weyl;
    std::vector<std::pair<Partition, Count>> expansion;
    std::vector<std::pair<Composition, Count>> weights;

    friend bool operator==(const ExpansionReport&, const ExpansionReport&) = default;
};

ExpansionReport make_report(const SchurExpansion& e, std::string method, Basis basis);

/// Collapses each weight to its sorted partition; Γ^ν, Sym^ν and ∧^ν only
/// depend on ν up to reordering.
ExpansionReport make_report(int degree, const std::vector<std::pair<Composition, Count>>& weights, std::string method,
                            Basis basis);

/// {"d":..,"method":..,"basis":..,"expansion":[{"partition":[..],"mult":..}],
///  "weights":[{"weight":[..],"mult":..}]}; "weights" only when present.
std::string to_json(const ExpansionReport& r);
/// Throws InputError on malformed documents.
ExpansionReport report_from_json(std::string_view text);

std::string to_table(const ExpansionReport& r);

}  // namespace spf
