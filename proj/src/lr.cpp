#include "spf/lr.hpp"

#include <algorithm>

#include "memo_cache.hpp"
#include "spf/errors.hpp"

namespace spf {

namespace {

// Counts fillings of outer/inner with content `content`: rows weakly
// increasing, columns strictly increasing. With `lattice`, the reverse reading
// word (rows top to bottom, each right to left) must also be a lattice word.
// Used for both Kostka numbers and LR coefficients.
class TableauCounter {
public:
    TableauCounter(const Partition& outer, const Partition& inner, std::vector<int> content, bool lattice)
        : outer_(outer), inner_(inner), content_(std::move(content)), lattice_(lattice),
          used_(content_.size() + 1, 0) {
        grid_.resize(static_cast<std::size_t>(outer.length()));
        for (int r = 0; r < outer.length(); ++r) {
            grid_[r].assign(static_cast<std::size_t>(outer[r]), 0);
            for (int c = outer[r] - 1; c >= inner[r]; --c) order_.push_back({r, c});
        }
    }

    Count count() {
        total_ = 0;
        place(0);
        return total_;
    }

private:
    void place(std::size_t idx) {
        if (idx == order_.size()) {
            total_ = checked_add(total_, 1);
            return;
        }
        const auto [r, c] = order_[idx];
        int lo = 1;
        int hi = static_cast<int>(content_.size());
        if (c + 1 < outer_[r]) hi = std::min(hi, grid_[r][c + 1]);
        if (r > 0 && c >= inner_[r - 1]) lo = std::max(lo, grid_[r - 1][c] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (used_[v] >= content_[v - 1]) continue;
            if (lattice_ && v > 1 && used_[v] + 1 > used_[v - 1]) continue;
            ++used_[v];
            grid_[r][c] = v;
            place(idx + 1);
            --used_[v];
        }
        grid_[r][c] = 0;
    }

    const Partition& outer_;
    const Partition& inner_;
    std::vector<int> content_;
    bool lattice_;
    std::vector<int> used_;
    std::vector<std::vector<int>> grid_;
    std::vector<Cell> order_;
    Count total_ = 0;
};

detail::MemoCache<Count>& lr_cache() {
    static detail::MemoCache<Count> cache;
    return cache;
}

detail::MemoCache<Count>& kostka_cache() {
    static detail::MemoCache<Count> cache;
    return cache;
}

detail::MemoCache<SchurExpansion>& product_cache() {
    static detail::MemoCache<SchurExpansion> cache;
    return cache;
}

std::string lr_key(const LRQuery& q) { return encode(q.outer) + "|" + encode(q.left) + "|" + encode(q.right); }

SchurExpansion basis_product(const Partition& mu, const Partition& nu) {
    const std::string key = encode(mu) + "|" + encode(nu);
    if (auto hit = product_cache().find(key)) return *hit;
    const int d = mu.size() + nu.size();
    SchurExpansion out(d);
    for (const auto& lambda : enumerate_partitions(d)) {
        if (!lambda.contains(mu) || !lambda.contains(nu)) continue;
        out.add(lambda, lr_coeff(lambda, mu, nu));
    }
    product_cache().insert(key, out);
    return out;
}

}  // namespace

Count kostka(const Partition& lambda, const Composition& mu, bool strict) {
    if (lambda.size() != mu.degree()) {
        if (strict)
            throw InputError("kostka: shape " + encode(lambda) + " and content " + encode(mu) +
                             " have different degrees");
        return 0;
    }
    const std::string key = encode(lambda) + "|" + encode(mu);
    if (auto hit = kostka_cache().find(key)) return *hit;
    Count k = TableauCounter(lambda, Partition{}, mu.entries(), false).count();
    kostka_cache().insert(key, k);
    return k;
}

Count lr_coeff(const LRQuery& q) {
    if (q.outer.size() != q.left.size() + q.right.size()) return 0;
    if (!q.outer.contains(q.left) || !q.outer.contains(q.right)) return 0;
    const std::string key = lr_key(q);
    if (auto hit = lr_cache().find(key)) return *hit;
    Count c = TableauCounter(q.outer, q.left, q.right.parts(), true).count();
    lr_cache().insert(key, c);
    return c;
}

SchurExpansion skew_schur_expansion(const SkewShape& s) {
    SchurExpansion out(s.size());
    for (const auto& beta : enumerate_partitions(s.size())) out.add(beta, lr_coeff(s.outer(), s.inner(), beta));
    return out;
}

SchurExpansion schur_outer_product(const SchurExpansion& a, const SchurExpansion& b) {
    SchurExpansion out(a.degree() + b.degree());
    for (const auto& [mu, x] : a.terms()) {
        for (const auto& [nu, y] : b.terms()) {
            const Count xy = checked_mul(x, y);
            const SchurExpansion product = basis_product(mu, nu);
            for (const auto& [lambda, c] : product.terms()) out.add(lambda, checked_mul(xy, c));
        }
    }
    return out;
}

SchurExpansion conjugate_expansion(const SchurExpansion& a) {
    SchurExpansion out(a.degree());
    for (const auto& [p, c] : a.terms()) out.add(conjugate(p), c);
    return out;
}

SchurExpansion complete_homogeneous_expansion(const Composition& nu) {
    SchurExpansion out(nu.degree());
    for (const auto& lambda : enumerate_partitions(nu.degree())) out.add(lambda, kostka(lambda, nu));
    return out;
}

std::map<std::string, Count> lr_cache_snapshot() { return lr_cache().snapshot(); }

void lr_cache_load(const std::map<std::string, Count>& entries) {
    for (const auto& [key, value] : entries) lr_cache().insert(key, value);
}

void lr_cache_clear() {
    lr_cache().clear();
    kostka_cache().clear();
    product_cache().clear();
}

}  // namespace spf
