#pragma once

// Partitions, compositions, skew shapes and contingency matrices, plus the
// enumeration primitives the rest of the library is built on.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace spf {

/// Multiplicities, character values and dimensions.
using Count = std::int64_t;

Count checked_add(Count a, Count b);
Count checked_sub(Count a, Count b);
Count checked_mul(Count a, Count b);
Count factorial(int n);

/// A weakly decreasing sequence of positive integers. Trailing zeros given to
/// the constructor are dropped; the empty partition is the partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); zero past the last row.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// True when the Young diagram of `inner` fits inside this one.
    bool contains(const Partition& inner) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A polynomial weight: non-negative entries of explicit length. (1,0,1) and
/// (1,1) are different compositions.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries);
    Composition(std::initializer_list<int> entries) : Composition(std::vector<int>(entries)) {}
    explicit Composition(const Partition& p) : Composition(p.parts()) {}

    const std::vector<int>& entries() const noexcept { return entries_; }
    int degree() const noexcept { return degree_; }
    int length() const noexcept { return static_cast<int>(entries_.size()); }
    int operator[](std::size_t i) const noexcept { return entries_[i]; }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<int> entries_;
    int degree_ = 0;
};

class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.size() - inner_.size(); }

private:
    Partition outer_;
    Partition inner_;
};

/// Non-negative integer matrix with prescribed row and column sums, stored
/// row-major.
class ContingencyMatrix {
public:
    ContingencyMatrix(int rows, int cols, std::vector<int> entries);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
    Composition row_sums() const;
    Composition col_sums() const;

    /// The matrix read row-major as a weight of length rows*cols.
    Composition flatten() const { return Composition(entries_); }
    ContingencyMatrix transpose() const;

    friend bool operator==(const ContingencyMatrix&, const ContingencyMatrix&) = default;
    friend auto operator<=>(const ContingencyMatrix&, const ContingencyMatrix&) = default;

private:
    int rows_;
    int cols_;
    std::vector<int> entries_;
};

/// 1-based cell of a Young diagram.
struct Cell {
    int row;
    int col;
    friend bool operator==(const Cell&, const Cell&) = default;
};

Partition conjugate(const Partition& p);

/// Cells (i, p_i) with p_i > p_{i+1}. Throws InputError for the empty partition.
std::vector<Cell> outer_corners(const Partition& p);

/// Partitions obtained from p by moving a single box, p itself excluded,
/// in descending lexicographic order.
std::vector<Partition> one_box_moves(const Partition& p);

inline constexpr int kDefaultPartitionBound = 30;

/// All partitions of d in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int d, int max_degree = kDefaultPartitionBound);

/// Partitions alpha with inner ⊆ alpha ⊆ outer and |alpha| = size, descending.
std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer, int size);

/// Every matrix with row sums mu and column sums lambda, in descending
/// row-major lexicographic order.
std::vector<ContingencyMatrix> enumerate_contingency(const Composition& mu, const Composition& lambda);

/// (p, 1^q).
Partition hook_partition(int p, int q);

/// "3,2,1"; the empty partition encodes as "0".
std::string encode(const Partition& p);
/// "2,0,1"; the empty composition encodes as "".
std::string encode(const Composition& c);

/// Accepts "3,2,1"; "" and "0" parse to the empty partition.
Partition parse_partition(std::string_view text);
/// Accepts "2,0,1"; "" parses to the empty composition.
Composition parse_composition(std::string_view text);

}  // namespace spf
