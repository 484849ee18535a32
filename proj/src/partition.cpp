#include "spf/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "spf/errors.hpp"

namespace spf {

Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Count checked_sub(Count a, Count b) {
    Count r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Count factorial(int n) {
    if (n < 0) throw InputError("factorial of a negative number");
    Count r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InputError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw InputError("composition entries must be non-negative");
        degree_ += e;
    }
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw InputError("skew shape: inner partition not contained in outer");
}

ContingencyMatrix::ContingencyMatrix(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0 || entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw InputError("contingency matrix: entry count does not match shape");
    if (std::any_of(entries_.begin(), entries_.end(), [](int e) { return e < 0; }))
        throw InputError("contingency matrix entries must be non-negative");
}

Composition ContingencyMatrix::row_sums() const {
    std::vector<int> sums(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) sums[i] += at(i, j);
    return Composition(std::move(sums));
}

Composition ContingencyMatrix::col_sums() const {
    std::vector<int> sums(static_cast<std::size_t>(cols_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) sums[j] += at(i, j);
    return Composition(std::move(sums));
}

ContingencyMatrix ContingencyMatrix::transpose() const {
    std::vector<int> t(entries_.size());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t[static_cast<std::size_t>(j * rows_ + i)] = at(i, j);
    return ContingencyMatrix(cols_, rows_, std::move(t));
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c) ++out[c];
    return Partition(std::move(out));
}

std::vector<Cell> outer_corners(const Partition& p) {
    if (p.empty()) throw InputError("the empty partition has no outer corners");
    std::vector<Cell> cells;
    for (int i = 0; i < p.length(); ++i)
        if (p[i] > p[i + 1]) cells.push_back({i + 1, p[i]});
    return cells;
}

std::vector<Partition> one_box_moves(const Partition& p) {
    std::vector<Partition> moves;
    const auto& parts = p.parts();
    for (int i = 0; i < p.length(); ++i) {
        if (p[i] <= p[i + 1]) continue;
        std::vector<int> removed = parts;
        --removed[i];
        // Row j can take a box when it is the top row or shorter than the row above;
        // the row just past the end is always addable.
        for (std::size_t j = 0; j <= removed.size(); ++j) {
            int cur = j < removed.size() ? removed[j] : 0;
            if (j > 0 && removed[j - 1] <= cur) continue;
            std::vector<int> added = removed;
            if (j == added.size()) added.push_back(1);
            else ++added[j];
            Partition alpha(std::move(added));
            if (alpha != p) moves.push_back(std::move(alpha));
        }
    }
    std::sort(moves.begin(), moves.end(), std::greater<>());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    return moves;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

void between_rec(const Partition& inner, const Partition& outer, std::size_t row, int remaining,
                 std::vector<int>& prefix, std::vector<Partition>& out) {
    if (row == static_cast<std::size_t>(outer.length())) {
        if (remaining == 0) out.emplace_back(prefix);
        return;
    }
    int lo = inner[row];
    int hi = outer[row];
    if (row > 0) hi = std::min(hi, prefix[row - 1]);
    // Cells still available below this row bound how small this row can be.
    int capacity_below = 0;
    for (int r = static_cast<int>(row) + 1; r < outer.length(); ++r) capacity_below += outer[r] - inner[r];
    for (int v = hi; v >= lo; --v) {
        int used = v - inner[row];
        if (used > remaining) continue;
        if (remaining - used > capacity_below) break;
        prefix.push_back(v);
        between_rec(inner, outer, row + 1, remaining - used, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int max_degree) {
    if (d < 0) throw InputError("cannot enumerate partitions of a negative number");
    if (d > max_degree)
        throw InputError("partition degree " + std::to_string(d) + " exceeds bound " + std::to_string(max_degree));
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(d, d, prefix, out);
    return out;
}

std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer, int size) {
    std::vector<Partition> out;
    if (!outer.contains(inner) || size < inner.size() || size > outer.size()) return out;
    std::vector<int> prefix;
    between_rec(inner, outer, 0, size - inner.size(), prefix, out);
    return out;
}

std::vector<ContingencyMatrix> enumerate_contingency(const Composition& mu, const Composition& lambda) {
    if (mu.degree() != lambda.degree())
        throw InputError("contingency margins have different degrees (" + std::to_string(mu.degree()) + " vs " +
                         std::to_string(lambda.degree()) + ")");
    const int rows = mu.length();
    const int cols = lambda.length();
    std::vector<int> row_left = mu.entries();
    std::vector<int> col_left = lambda.entries();
    std::vector<int> cells(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
    std::vector<ContingencyMatrix> out;

    if (rows == 0 || cols == 0) {
        // Degree is necessarily 0 here only if every margin entry is 0.
        bool all_zero = std::all_of(row_left.begin(), row_left.end(), [](int v) { return v == 0; }) &&
                        std::all_of(col_left.begin(), col_left.end(), [](int v) { return v == 0; });
        if (all_zero) out.emplace_back(rows, cols, cells);
        return out;
    }

    std::function<void(int)> fill = [&](int idx) {
        if (idx == rows * cols) {
            out.emplace_back(rows, cols, cells);
            return;
        }
        const int i = idx / cols;
        const int j = idx % cols;
        int hi = std::min(row_left[i], col_left[j]);
        int lo = 0;
        if (j == cols - 1) lo = row_left[i];  // last column absorbs the rest of the row
        if (i == rows - 1) lo = std::max(lo, col_left[j]);
        if (lo > hi) return;
        for (int v = hi; v >= lo; --v) {
            cells[idx] = v;
            row_left[i] -= v;
            col_left[j] -= v;
            fill(idx + 1);
            row_left[i] += v;
            col_left[j] += v;
        }
        cells[idx] = 0;
    };
    fill(0);
    return out;
}

Partition hook_partition(int p, int q) {
    if (p < 1 || q < 0) throw InputError("hook (p,1^q) needs p >= 1 and q >= 0");
    std::vector<int> parts{p};
    parts.insert(parts.end(), static_cast<std::size_t>(q), 1);
    return Partition(std::move(parts));
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<int> split_ints(std::string_view text, std::string_view what) {
    std::vector<int> values;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InputError("malformed " + std::string(what) + " '" + std::string(text) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return values;
}

}  // namespace

std::string encode(const Partition& p) { return p.empty() ? "0" : join(p.parts()); }

std::string encode(const Composition& c) { return join(c.entries()); }

Partition parse_partition(std::string_view text) {
    auto values = split_ints(text, "partition");
    if (values.size() == 1 && values[0] == 0) return Partition{};
    for (int v : values)
        if (v <= 0) throw InputError("malformed partition '" + std::string(text) + "': parts must be positive");
    return Partition(std::move(values));
}

Composition parse_composition(std::string_view text) { return Composition(split_ints(text, "composition")); }

}  // namespace spf
