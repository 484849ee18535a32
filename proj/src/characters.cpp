#include "spf/characters.hpp"

#include <algorithm>

#include "memo_cache.hpp"
#include "spf/errors.hpp"

namespace spf {

ClassFunction::ClassFunction(int degree) : degree_(degree) {
    for (const auto& rho : enumerate_partitions(degree)) values_.emplace(rho, 0);
}

Count ClassFunction::at(const CycleType& rho) const {
    auto it = values_.find(rho);
    if (it == values_.end()) throw InputError("cycle type " + encode(rho) + " is not a class of S_" + std::to_string(degree_));
    return it->second;
}

void ClassFunction::set(const CycleType& rho, Count value) {
    auto it = values_.find(rho);
    if (it == values_.end()) throw InputError("cycle type " + encode(rho) + " is not a class of S_" + std::to_string(degree_));
    it->second = value;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (a.degree_ != b.degree_) throw InputError("class functions of different degrees");
    ClassFunction out(a.degree_);
    for (auto& [rho, v] : out.values_) v = checked_mul(a.at(rho), b.at(rho));
    return out;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    if (a.degree_ != b.degree_) throw InputError("class functions of different degrees");
    ClassFunction out(a.degree_);
    for (auto& [rho, v] : out.values_) v = checked_add(a.at(rho), b.at(rho));
    return out;
}

Count centralizer_order(const CycleType& rho) {
    Count z = 1;
    const auto& parts = rho.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const int m = static_cast<int>(j - i);
        for (int k = 0; k < m; ++k) z = checked_mul(z, parts[i]);
        z = checked_mul(z, factorial(m));
        i = j;
    }
    return z;
}

Count class_size(const CycleType& rho) { return factorial(rho.size()) / centralizer_order(rho); }

namespace {

detail::MemoCache<Count>& character_cache() {
    static detail::MemoCache<Count> cache;
    return cache;
}

Count exact_quotient(Count numerator, Count denominator, const char* what) {
    if (denominator == 0 || numerator % denominator != 0)
        throw ConsistencyError(std::string(what) + ": class sum " + std::to_string(numerator) +
                               " is not divisible by " + std::to_string(denominator));
    return numerator / denominator;
}

// Partitions are handled through their beta-sets (first-column hook lengths);
// removing a border strip of length r moves one bead r positions down.
Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts(beta.size());
    for (int i = 0; i < len; ++i) parts[i] = beta[i] - (len - 1 - i);
    return Partition(std::move(parts));
}

Count mn_recursive(const Partition& lambda, const CycleType& rho) {
    if (rho.empty()) return 1;
    const std::string key = encode(lambda) + "|" + encode(rho);
    if (auto hit = character_cache().find(key)) return *hit;

    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

    const int strip = rho[0];
    const CycleType rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));

    Count value = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - strip;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++height;
        std::vector<int> moved = beta;
        moved[i] = target;
        const Count sub = mn_recursive(from_beta(std::move(moved)), rest);
        value = height % 2 == 0 ? checked_add(value, sub) : checked_sub(value, sub);
    }
    character_cache().insert(key, value);
    return value;
}

// Number of ways to place distinguishable cycles into blocks with the given
// remaining capacities.
Count count_distributions(const std::vector<int>& cycles, std::size_t next, std::vector<int>& capacity,
                          std::map<std::pair<std::size_t, std::vector<int>>, Count>& memo) {
    if (next == cycles.size())
        return std::all_of(capacity.begin(), capacity.end(), [](int c) { return c == 0; }) ? 1 : 0;
    auto key = std::make_pair(next, capacity);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Count total = 0;
    for (auto& cap : capacity) {
        if (cap < cycles[next]) continue;
        cap -= cycles[next];
        total = checked_add(total, count_distributions(cycles, next + 1, capacity, memo));
        cap += cycles[next];
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Count mn_character(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.size())
        throw InputError("character: shape " + encode(lambda) + " and cycle type " + encode(rho) +
                         " have different sizes");
    return mn_recursive(lambda, rho);
}

ClassFunction irreducible_character(const Partition& lambda) {
    ClassFunction chi(lambda.size());
    for (const auto& [rho, v] : chi.values()) chi.set(rho, mn_character(lambda, rho));
    return chi;
}

Count dimension(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    Count hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) hooks = checked_mul(hooks, (lambda[i] - j) + (conj[j] - i) - 1);
    return exact_quotient(factorial(lambda.size()), hooks, "hook-length formula");
}

Count inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.degree() != b.degree()) throw InputError("inner product of class functions of different degrees");
    Count sum = 0;
    for (const auto& [rho, v] : a.values())
        sum = checked_add(sum, checked_mul(checked_mul(v, b.at(rho)), class_size(rho)));
    return exact_quotient(sum, factorial(a.degree()), "character inner product");
}

Count kronecker_oracle(const Partition& lambda, const Partition& mu, const Partition& alpha) {
    if (lambda.size() != mu.size() || lambda.size() != alpha.size())
        throw InputError("kronecker oracle: partitions " + encode(lambda) + ", " + encode(mu) + ", " +
                         encode(alpha) + " have different sizes");
    Count sum = 0;
    for (const auto& rho : enumerate_partitions(lambda.size())) {
        Count term = checked_mul(mn_character(lambda, rho), mn_character(mu, rho));
        term = checked_mul(term, mn_character(alpha, rho));
        sum = checked_add(sum, checked_mul(term, class_size(rho)));
    }
    const Count g = exact_quotient(sum, factorial(lambda.size()), "kronecker oracle");
    if (g < 0) throw ConsistencyError("kronecker oracle produced a negative multiplicity");
    return g;
}

SchurExpansion kronecker_oracle_expansion(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw InputError("kronecker oracle: partitions have different sizes");
    SchurExpansion out(lambda.size());
    for (const auto& alpha : enumerate_partitions(lambda.size())) out.add(alpha, kronecker_oracle(lambda, mu, alpha));
    return out;
}

ClassFunction perm_character(const Composition& nu) {
    ClassFunction chi(nu.degree());
    for (const auto& [rho, v] : chi.values()) {
        std::vector<int> capacity = nu.entries();
        std::map<std::pair<std::size_t, std::vector<int>>, Count> memo;
        chi.set(rho, count_distributions(rho.parts(), 0, capacity, memo));
    }
    return chi;
}

Count lr_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size())
        throw InputError("lr oracle: |" + encode(mu) + "| + |" + encode(nu) + "| != |" + encode(lambda) + "|");
    const int a = mu.size();
    const int b = nu.size();
    Count sum = 0;
    for (const auto& rho1 : enumerate_partitions(a)) {
        const Count left = checked_mul(mn_character(mu, rho1), class_size(rho1));
        if (left == 0) continue;
        for (const auto& rho2 : enumerate_partitions(b)) {
            std::vector<int> merged = rho1.parts();
            merged.insert(merged.end(), rho2.parts().begin(), rho2.parts().end());
            std::sort(merged.begin(), merged.end(), std::greater<>());
            Count term = checked_mul(left, checked_mul(mn_character(nu, rho2), class_size(rho2)));
            term = checked_mul(term, mn_character(lambda, CycleType(std::move(merged))));
            sum = checked_add(sum, term);
        }
    }
    const Count c = exact_quotient(sum, checked_mul(factorial(a), factorial(b)), "lr oracle");
    if (c < 0) throw ConsistencyError("lr oracle produced a negative coefficient");
    return c;
}

SchurExpansion decompose(const ClassFunction& chi) {
    SchurExpansion out(chi.degree());
    for (const auto& beta : enumerate_partitions(chi.degree())) out.add(beta, inner_product(chi, irreducible_character(beta)));
    return out;
}

SchurExpansion internal_h_oracle(const Partition& lambda, const Composition& nu) {
    if (lambda.size() != nu.degree())
        throw InputError("internal product oracle: |" + encode(lambda) + "| != degree of " + encode(nu));
    return decompose(irreducible_character(lambda) * perm_character(nu));
}

std::map<std::string, Count> character_cache_snapshot() { return character_cache().snapshot(); }

void character_cache_load(const std::map<std::string, Count>& entries) {
    for (const auto& [key, value] : entries) character_cache().insert(key, value);
}

void character_cache_clear() { character_cache().clear(); }

}  // namespace spf
