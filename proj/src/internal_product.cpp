#include "spf/internal_product.hpp"

#include <algorithm>
#include <map>

#include "spf/errors.hpp"
#include "spf/lr.hpp"

namespace spf {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Gamma: return "Gamma";
        case Family::Sym: return "Sym";
        case Family::Wedge: return "Wedge";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text == "gamma" || text == "Gamma") return Family::Gamma;
    if (text == "sym" || text == "Sym") return Family::Sym;
    if (text == "wedge" || text == "Wedge") return Family::Wedge;
    throw InputError("unknown functor family '" + std::string(text) + "' (expected gamma, sym or wedge)");
}

std::string_view to_string(KroneckerMethod m) {
    switch (m) {
        case KroneckerMethod::Auto: return "auto";
        case KroneckerMethod::General: return "general";
        case KroneckerMethod::TwoRow: return "two-row";
        case KroneckerMethod::OneBox: return "one-box";
        case KroneckerMethod::Hook: return "hook";
    }
    return "?";
}

KroneckerMethod parse_method(std::string_view text) {
    for (auto m : {KroneckerMethod::Auto, KroneckerMethod::General, KroneckerMethod::TwoRow, KroneckerMethod::OneBox,
                   KroneckerMethod::Hook})
        if (to_string(m) == text) return m;
    throw InputError("unknown method '" + std::string(text) + "' (expected auto, general, two-row, one-box or hook)");
}

namespace {

void require_nonnegative(const SchurExpansion& e, std::string_view what) {
    if (!e.all_nonnegative())
        throw ConsistencyError(std::string(what) + " produced a negative multiplicity: " + to_string(e));
}

void require_degree(const Partition& lambda, const Composition& nu, std::string_view what) {
    if (lambda.size() != nu.degree())
        throw InputError(std::string(what) + ": |" + encode(lambda) + "| = " + std::to_string(lambda.size()) +
                         " but weight " + encode(nu) + " has degree " + std::to_string(nu.degree()));
}

std::vector<Composition> contingency_weights(const Composition& mu, const Composition& lambda) {
    std::vector<Composition> out;
    for (const auto& m : enumerate_contingency(mu, lambda)) out.push_back(m.flatten());
    return out;
}

// Σ_{µ ⊢ a, ν ⊢ b} c^{shape}_{µ^t, ν} s_µ s_ν, where µ^t is µ or µ' as
// requested. Shared by the two-row and hook procedures.
SchurExpansion lr_square_sum(const Partition& shape, int a, int b, bool conjugate_left) {
    SchurExpansion out(a + b);
    for (const auto& mu : enumerate_partitions(a)) {
        const Partition left = conjugate_left ? conjugate(mu) : mu;
        if (!shape.contains(left)) continue;
        for (const auto& nu : enumerate_partitions(b)) {
            const Count c = lr_coeff(shape, left, nu);
            if (c == 0) continue;
            out += schur_outer_product(SchurExpansion::basis(mu), SchurExpansion::basis(nu)).scaled(c);
        }
    }
    return out;
}

class ChainSum {
public:
    ChainSum(const Partition& lambda, const Composition& nu) : lambda_(lambda), nu_(nu), tail_(nu.length() + 1, 0) {
        for (int i = nu.length() - 1; i >= 0; --i) tail_[i] = tail_[i + 1] + nu[i];
    }

    SchurExpansion from(const Partition& alpha, int step) {
        if (step == nu_.length()) return alpha == lambda_ ? SchurExpansion::basis(Partition{}) : SchurExpansion(0);
        const std::string key = encode(alpha) + "#" + std::to_string(step);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        SchurExpansion out(tail_[step]);
        for (const auto& next : partitions_between(alpha, lambda_, alpha.size() + nu_[step])) {
            SchurExpansion rest = from(next, step + 1);
            if (rest.is_zero()) continue;
            out += schur_outer_product(skew_schur_expansion(SkewShape(next, alpha)), rest);
        }
        memo_.emplace(key, out);
        return out;
    }

private:
    const Partition& lambda_;
    const Composition& nu_;
    std::vector<int> tail_;
    std::map<std::string, SchurExpansion> memo_;
};

}  // namespace

ExpDecomposition gamma_tensor_gamma(const Composition& mu, const Composition& lambda) {
    return {Family::Gamma, contingency_weights(mu, lambda)};
}

ExpDecomposition exponential_tensor(const ExpFunctor& left, const ExpFunctor& right, CharTwoMode mode) {
    if (left.weight.degree() != right.weight.degree())
        throw InputError("exponential functors of different degrees (" + std::to_string(left.weight.degree()) +
                         " vs " + std::to_string(right.weight.degree()) + ")");
    Family a = left.family;
    Family b = right.family;
    if (a > b) std::swap(a, b);
    Family out;
    if (a == Family::Gamma) {
        out = b;  // Γ^d is the unit
    } else if (a == b) {
        out = Family::Sym;  // ∧⊗∧ and Sym⊗Sym
    } else {
        switch (mode) {
            case CharTwoMode::TwoInvertible: out = Family::Wedge; break;
            case CharTwoMode::TwoZero: out = Family::Sym; break;
            default:
                throw NotExponentialError(
                    "Sym ⊗ Wedge is not an exponential direct sum when 2 is a nonzero nonunit in the ground ring");
        }
    }
    return {out, contingency_weights(left.weight, right.weight)};
}

SchurExpansion weyl_tensor_gamma(const Partition& lambda, const Composition& nu) {
    require_degree(lambda, nu, "weyl_tensor_gamma");
    SchurExpansion out = ChainSum(lambda, nu).from(Partition{}, 0);
    require_nonnegative(out, "weyl_tensor_gamma");
    return out;
}

SchurExpansion weyl_tensor_wedge(const Partition& lambda, const Composition& nu) {
    require_degree(lambda, nu, "weyl_tensor_wedge");
    return weyl_tensor_gamma(conjugate(lambda), nu);
}

std::vector<SignedComposition> jacobi_trudi(const Partition& mu, int max_parts) {
    const int n = mu.length();
    if (n > max_parts)
        throw InputError("Jacobi-Trudi: " + encode(mu) + " has " + std::to_string(n) + " parts, bound is " +
                         std::to_string(max_parts));
    std::vector<SignedComposition> terms;
    std::vector<int> sigma;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> weight;

    auto recurse = [&](auto&& self, int row) -> void {
        if (row == n) {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (sigma[i] > sigma[j]) ++inversions;
            terms.push_back({inversions % 2 == 0 ? 1 : -1, Composition(weight)});
            return;
        }
        for (int col = 0; col < n; ++col) {
            if (used[col]) continue;
            const int index = mu[row] - row + col;
            if (index < 0) continue;
            used[col] = true;
            sigma.push_back(col);
            weight.push_back(index);
            self(self, row + 1);
            weight.pop_back();
            sigma.pop_back();
            used[col] = false;
        }
    };
    recurse(recurse, 0);
    return terms;
}

SchurExpansion kronecker_general(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw InputError("kronecker: |" + encode(lambda) + "| != |" + encode(mu) + "|");
    SchurExpansion out(lambda.size());
    for (const auto& [sign, nu] : jacobi_trudi(mu)) {
        SchurExpansion term = weyl_tensor_gamma(lambda, nu);
        if (sign > 0) out += term;
        else out -= term;
    }
    require_nonnegative(out, "kronecker_general");
    return out;
}

SchurExpansion kronecker_two_row(const Partition& lambda, int a, int b) {
    if (b < 1 || a < b || a + b != lambda.size())
        throw InputError("two-row procedure needs a >= b >= 1 with a + b = |lambda| (got a=" + std::to_string(a) +
                         ", b=" + std::to_string(b) + ", |lambda|=" + std::to_string(lambda.size()) + ")");
    SchurExpansion out = lr_square_sum(lambda, a, b, false) - lr_square_sum(lambda, a + 1, b - 1, false);
    require_nonnegative(out, "kronecker_two_row");
    return out;
}

SchurExpansion kronecker_one_box(const Partition& lambda, int a) {
    if (a < 1 || a + 1 != lambda.size())
        throw InputError("one-box procedure needs a >= 1 with a + 1 = |lambda| (got a=" + std::to_string(a) +
                         ", |lambda|=" + std::to_string(lambda.size()) + ")");
    const auto corners = static_cast<Count>(outer_corners(lambda).size());
    SchurExpansion out = SchurExpansion::basis(lambda, corners - 1);
    for (const auto& alpha : one_box_moves(lambda)) out.add(alpha, 1);
    return out;
}

SchurExpansion hook_mixed(const Partition& lambda, int p, int q) {
    if (p < 1 || q < 0 || p + q != lambda.size())
        throw InputError("hook_mixed needs p >= 1, q >= 0 with p + q = |lambda| (got p=" + std::to_string(p) +
                         ", q=" + std::to_string(q) + ", |lambda|=" + std::to_string(lambda.size()) + ")");
    SchurExpansion out = lr_square_sum(conjugate(lambda), p, q, true);
    require_nonnegative(out, "hook_mixed");
    return out;
}

SchurExpansion kronecker_hook(const Partition& lambda, int p, int q) {
    if (p < 1 || q < 1 || p + q != lambda.size())
        throw InputError("hook procedure needs p >= 1, q >= 1 with p + q = |lambda| (got p=" + std::to_string(p) +
                         ", q=" + std::to_string(q) + ", |lambda|=" + std::to_string(lambda.size()) + ")");
    SchurExpansion out(lambda.size());
    for (int i = 0; i <= q; ++i) {
        SchurExpansion term = hook_mixed(lambda, p + i, q - i);
        if (i % 2 == 0) out += term;
        else out -= term;
    }
    require_nonnegative(out, "kronecker_hook");
    return out;
}

KroneckerResult kronecker(const Partition& lambda, const Partition& mu, KroneckerMethod method) {
    if (lambda.size() != mu.size())
        throw InputError("kronecker: |" + encode(lambda) + "| != |" + encode(mu) + "|");
    const bool two_row = mu.length() == 2;
    const bool one_box = two_row && mu[1] == 1;
    const bool hook = mu.length() >= 2 && std::all_of(mu.parts().begin() + 1, mu.parts().end(), [](int v) { return v == 1; });

    if (method == KroneckerMethod::Auto) {
        if (one_box) method = KroneckerMethod::OneBox;
        else if (two_row) method = KroneckerMethod::TwoRow;
        else if (hook) method = KroneckerMethod::Hook;
        else method = KroneckerMethod::General;
    }
    switch (method) {
        case KroneckerMethod::OneBox:
            if (!one_box) throw InputError("method one-box needs mu of shape (a,1), got " + encode(mu));
            return {method, kronecker_one_box(lambda, mu[0])};
        case KroneckerMethod::TwoRow:
            if (!two_row) throw InputError("method two-row needs mu with exactly two rows, got " + encode(mu));
            return {method, kronecker_two_row(lambda, mu[0], mu[1])};
        case KroneckerMethod::Hook:
            if (!hook) throw InputError("method hook needs mu of shape (p,1^q) with q >= 1, got " + encode(mu));
            return {method, kronecker_hook(lambda, mu[0], mu.length() - 1)};
        default:
            return {KroneckerMethod::General, kronecker_general(lambda, mu)};
    }
}

}  // namespace spf
