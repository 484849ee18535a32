#include "spf/expansion.hpp"

#include <algorithm>

#include "spf/errors.hpp"

namespace spf {

SchurExpansion::SchurExpansion(int degree) : degree_(degree) {
    if (degree < 0) throw InputError("expansion degree must be non-negative");
}

SchurExpansion SchurExpansion::basis(const Partition& p, Count coeff) {
    SchurExpansion e(p.size());
    e.add(p, coeff);
    return e;
}

Count SchurExpansion::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

bool SchurExpansion::all_nonnegative() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

void SchurExpansion::add(const Partition& p, Count coeff) {
    if (p.size() != degree_)
        throw InputError("partition " + encode(p) + " does not have expansion degree " + std::to_string(degree_));
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
    if (other.degree_ != degree_ && !other.is_zero())
        throw InputError("cannot add expansions of degrees " + std::to_string(degree_) + " and " +
                         std::to_string(other.degree_));
    for (const auto& [p, c] : other.terms_) add(p, c);
    return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& other) {
    if (other.degree_ != degree_ && !other.is_zero())
        throw InputError("cannot subtract expansions of degrees " + std::to_string(degree_) + " and " +
                         std::to_string(other.degree_));
    for (const auto& [p, c] : other.terms_) add(p, checked_sub(0, c));
    return *this;
}

SchurExpansion SchurExpansion::scaled(Count factor) const {
    SchurExpansion out(degree_);
    for (const auto& [p, c] : terms_) out.add(p, checked_mul(c, factor));
    return out;
}

std::string to_string(const SchurExpansion& e) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : e.terms()) {
        Count mag = c < 0 ? -c : c;
        if (first) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        if (mag != 1) s += std::to_string(mag) + " ";
        s += "s(" + (p.empty() ? std::string() : encode(p)) + ")";
        first = false;
    }
    return s;
}

}  // namespace spf
