#pragma once

#include <functional>
#include <map>
#include <string>

#include "spf/partition.hpp"

namespace spf {

/// An element of the Grothendieck group written in the Schur basis. All keys
/// are partitions of degree(); zero coefficients are never stored, negative
/// ones are allowed for virtual expansions.
class SchurExpansion {
public:
    using Terms = std::map<Partition, Count, std::greater<>>;

    explicit SchurExpansion(int degree = 0);

    /// coeff * s_p
    static SchurExpansion basis(const Partition& p, Count coeff = 1);

    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Count coefficient(const Partition& p) const;
    bool all_nonnegative() const noexcept;

    /// Adds coeff * s_p; p must have size degree().
    void add(const Partition& p, Count coeff);

    SchurExpansion& operator+=(const SchurExpansion& other);
    SchurExpansion& operator-=(const SchurExpansion& other);
    SchurExpansion scaled(Count factor) const;

    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    int degree_;
    Terms terms_;
};

/// "s(3) + 2 s(2,1)"; "0" for the zero expansion.
std::string to_string(const SchurExpansion& e);

}  // namespace spf
