// Acceptance sweeps. One line per criterion; exit status is the number of
// failed criteria. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "spf/characters.hpp"
#include "spf/errors.hpp"
#include "spf/internal_product.hpp"
#include "spf/lr.hpp"

using namespace spf;

namespace {

struct Outcome {
    bool passed = true;
    long checked = 0;
    std::string detail;

    void fail(std::string why) {
        if (passed) detail = std::move(why);
        passed = false;
    }
};

std::string show(const Partition& p) { return "(" + (p.empty() ? std::string() : encode(p)) + ")"; }
std::string show(const Composition& c) { return "(" + encode(c) + ")"; }

std::vector<Composition> compositions(int d, int max_parts) {
    std::vector<Composition> out;
    for (int len = 1; len <= max_parts; ++len) {
        std::vector<int> cur(static_cast<std::size_t>(len), 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == len - 1) {
                cur[static_cast<std::size_t>(i)] = left;
                out.emplace_back(cur);
                return;
            }
            for (int v = left; v >= 0; --v) {
                cur[static_cast<std::size_t>(i)] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, d);
    }
    return out;
}

// Brute force: each row ranges over all compositions of its margin; keep the
// choices whose column sums match.
std::vector<Composition> brute_contingency(const Composition& rows, const Composition& cols) {
    const int r = rows.length(), c = cols.length();
    std::vector<Composition> out;
    std::vector<int> cells;
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            for (int j = 0; j < c; ++j) {
                int s = 0;
                for (int k = 0; k < r; ++k) s += cells[static_cast<std::size_t>(k * c + j)];
                if (s != cols[static_cast<std::size_t>(j)]) return;
            }
            out.emplace_back(cells);
            return;
        }
        for (const auto& row : compositions(rows[static_cast<std::size_t>(i)], c)) {
            if (row.length() != c) continue;
            cells.insert(cells.end(), row.entries().begin(), row.entries().end());
            rec(i + 1);
            cells.resize(cells.size() - static_cast<std::size_t>(c));
        }
    };
    rec(0);
    return out;
}

std::vector<Composition> sorted(std::vector<Composition> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool is_two_row(const Partition& p) { return p.length() == 2; }

Outcome oracle_equivalence() {
    Outcome o;
    for (int d = 0; d <= 6; ++d)
        for (const auto& la : enumerate_partitions(d))
            for (const auto& mu : enumerate_partitions(d)) {
                ++o.checked;
                const auto got = kronecker_general(la, mu);
                for (const auto& alpha : enumerate_partitions(d)) {
                    const Count want = kronecker_oracle(la, mu, alpha);
                    if (got.coefficient(alpha) != want)
                        o.fail("g" + show(la) + show(mu) + show(alpha) + " = " + std::to_string(got.coefficient(alpha)) +
                               ", oracle " + std::to_string(want));
                }
                if (!got.all_nonnegative()) o.fail("negative coefficient for " + show(la) + show(mu));
            }
    return o;
}

Outcome fast_paths() {
    Outcome o;
    for (int d = 1; d <= 8; ++d)
        for (const auto& la : enumerate_partitions(d)) {
            for (int b = 1; 2 * b <= d; ++b) {
                ++o.checked;
                const int a = d - b;
                const auto general = kronecker_general(la, Partition{a, b});
                const auto fast = kronecker_two_row(la, a, b);
                if (fast != general || !fast.all_nonnegative())
                    o.fail("two-row " + show(la) + " (" + std::to_string(a) + "," + std::to_string(b) + ")");
                if (b == 1 && kronecker_one_box(la, a) != fast) o.fail("one-box " + show(la) + " a=" + std::to_string(a));
            }
            for (int q = 1; q < d; ++q) {
                ++o.checked;
                const auto general = kronecker_general(la, hook_partition(d - q, q));
                const auto fast = kronecker_hook(la, d - q, q);
                if (fast != general || !fast.all_nonnegative())
                    o.fail("hook " + show(la) + " p=" + std::to_string(d - q) + " q=" + std::to_string(q));
                if (!hook_mixed(la, d - q, q).all_nonnegative()) o.fail("hook_mixed negative at " + show(la));
            }
        }
    return o;
}

Outcome one_box_fixture() {
    Outcome o;
    const Partition la{2, 1};
    SchurExpansion want(3);
    want.add(Partition{3}, 1);
    want.add(Partition{2, 1}, 1);
    want.add(Partition{1, 1, 1}, 1);
    const std::vector<std::pair<std::string, SchurExpansion>> paths{
        {"general", kronecker_general(la, la)},
        {"two-row", kronecker_two_row(la, 2, 1)},
        {"one-box", kronecker_one_box(la, 2)},
        {"hook", kronecker_hook(la, 2, 1)},
    };
    for (const auto& [name, got] : paths) {
        ++o.checked;
        if (got != want) o.fail(name + " gives " + to_string(got));
    }
    return o;
}

Outcome contingency_identity() {
    Outcome o;
    for (int d = 0; d <= 8; ++d) {
        const auto weights = compositions(d, 4);
        for (const auto& mu : weights)
            for (const auto& la : weights) {
                ++o.checked;
                Count rsk = 0;
                for (const auto& nu : enumerate_partitions(d))
                    rsk = checked_add(rsk, checked_mul(kostka(nu, mu), kostka(nu, la)));
                const auto mats = enumerate_contingency(mu, la);
                if (static_cast<Count>(mats.size()) != rsk)
                    o.fail(show(mu) + " x " + show(la) + ": " + std::to_string(mats.size()) + " matrices, RSK " +
                           std::to_string(rsk));
                if (d > 6) continue;
                ClassFunction sum(d);
                for (const auto& nu : gamma_tensor_gamma(mu, la).summands) sum = sum + perm_character(nu);
                if (sum != perm_character(mu) * perm_character(la))
                    o.fail("permutation characters differ for " + show(mu) + " x " + show(la));
            }
    }
    return o;
}

Outcome weyl_filtrations() {
    Outcome o;
    for (int d = 0; d <= 7; ++d) {
        const auto weights = compositions(d, 4);
        for (const auto& la : enumerate_partitions(d)) {
            const auto sign_twist = irreducible_character(la) * irreducible_character(conjugate(Partition{d}));
            for (const auto& nu : weights) {
                ++o.checked;
                const auto got = weyl_tensor_gamma(la, nu);
                if (!got.all_nonnegative()) o.fail("negative " + show(la) + " " + show(nu));
                if (got != internal_h_oracle(la, nu))
                    o.fail(show(la) + " " + show(nu) + ": " + to_string(got) + " vs " +
                           to_string(internal_h_oracle(la, nu)));
                const auto wedge = weyl_tensor_wedge(la, nu);
                if (!wedge.all_nonnegative() || wedge != conjugate_expansion(got))
                    o.fail("wedge " + show(la) + " " + show(nu) + " is not the conjugate");
                if (d <= 6 && wedge != decompose(sign_twist * perm_character(nu)))
                    o.fail("wedge " + show(la) + " " + show(nu) + " vs sign-twisted character");
            }
        }
    }
    return o;
}

Family expected_family(Family a, Family b, CharTwoMode mode) {
    if (a == Family::Gamma) return b;
    if (b == Family::Gamma) return a;
    if (a == b) return Family::Sym;
    return mode == CharTwoMode::TwoZero ? Family::Sym : Family::Wedge;
}

Outcome exponential_table() {
    Outcome o;
    const Family families[] = {Family::Gamma, Family::Sym, Family::Wedge};
    const CharTwoMode modes[] = {CharTwoMode::TwoInvertible, CharTwoMode::TwoZero, CharTwoMode::TwoNonzeroNonunit};
    for (int d = 0; d <= 6; ++d) {
        const auto weights = compositions(d, 3);
        for (const auto& la : weights)
            for (const auto& mu : weights) {
                const auto want = sorted(brute_contingency(la, mu));
                for (Family a : families)
                    for (Family b : families)
                        for (CharTwoMode mode : modes) {
                            ++o.checked;
                            const bool mixed = (a == Family::Sym && b == Family::Wedge) ||
                                               (a == Family::Wedge && b == Family::Sym);
                            const std::string tag = std::string(to_string(a)) + show(la) + " x " +
                                                    std::string(to_string(b)) + show(mu);
                            if (mixed && mode == CharTwoMode::TwoNonzeroNonunit) {
                                try {
                                    exponential_tensor({a, la}, {b, mu}, mode);
                                    o.fail(tag + " did not raise in the nonzero nonunit mode");
                                } catch (const NotExponentialError&) {
                                }
                                continue;
                            }
                            const auto got = exponential_tensor({a, la}, {b, mu}, mode);
                            if (got.family != expected_family(a, b, mode)) o.fail(tag + " has the wrong family");
                            if (sorted(got.summands) != want) o.fail(tag + " has the wrong summands");
                        }
            }
    }
    return o;
}

Outcome jacobi_trudi_roundtrip() {
    Outcome o;
    for (int d = 0; d <= 8; ++d)
        for (const auto& mu : enumerate_partitions(d)) {
            ++o.checked;
            SchurExpansion sum(d);
            for (const auto& [sign, nu] : jacobi_trudi(mu)) sum += complete_homogeneous_expansion(nu).scaled(sign);
            if (sum != SchurExpansion::basis(mu)) o.fail(show(mu) + " re-expands to " + to_string(sum));
        }
    return o;
}

Outcome character_consistency() {
    Outcome o;
    for (int d = 0; d <= 8; ++d) {
        const auto parts = enumerate_partitions(d);
        for (const auto& la : parts)
            for (const auto& mu : parts) {
                ++o.checked;
                const Count ip = inner_product(irreducible_character(la), irreducible_character(mu));
                if (ip != (la == mu ? 1 : 0)) o.fail("<chi" + show(la) + ", chi" + show(mu) + "> = " + std::to_string(ip));

                const Count target = checked_mul(dimension(la), dimension(mu));
                std::vector<std::pair<std::string, SchurExpansion>> outputs{{"general", kronecker_general(la, mu)}};
                if (is_two_row(mu)) outputs.emplace_back("two-row", kronecker_two_row(la, mu[0], mu[1]));
                if (mu.length() == 2 && mu[1] == 1) outputs.emplace_back("one-box", kronecker_one_box(la, mu[0]));
                if (d >= 2 && mu == hook_partition(mu[0], d - mu[0]) && mu[0] < d)
                    outputs.emplace_back("hook", kronecker_hook(la, mu[0], d - mu[0]));
                for (const auto& [name, g] : outputs) {
                    Count total = 0;
                    for (const auto& [alpha, c] : g.terms()) total = checked_add(total, checked_mul(c, dimension(alpha)));
                    if (total != target)
                        o.fail(name + " " + show(la) + show(mu) + ": " + std::to_string(total) + " vs " +
                               std::to_string(target));
                }
            }
    }
    for (int n = 0; n <= 7; ++n)
        for (const auto& la : enumerate_partitions(n))
            for (int a = 0; a <= n; ++a)
                for (const auto& mu : enumerate_partitions(a))
                    for (const auto& nu : enumerate_partitions(n - a)) {
                        ++o.checked;
                        if (lr_coeff(la, mu, nu) != lr_oracle(la, mu, nu))
                            o.fail("c" + show(la) + "_" + show(mu) + show(nu));
                    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"kronecker_general matches the character oracle, d <= 6", oracle_equivalence},
        {"two-row, hook and one-box agree with the general procedure, d <= 8", fast_paths},
        {"(2,1) x (2,1) = s(3) + s(2,1) + s(1,1,1) on all four paths", one_box_fixture},
        {"contingency counts and permutation characters", contingency_identity},
        {"Weyl filtrations are non-negative and match the oracle, d <= 7", weyl_filtrations},
        {"exponential family table and summands, d <= 6", exponential_table},
        {"Jacobi-Trudi roundtrip, d <= 8", jacobi_trudi_roundtrip},
        {"orthogonality, dimension identity and LR double path", character_consistency},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, run] = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const Error& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << "criterion " << (i + 1) << ": " << (o.passed ? "PASS" : "FAIL") << "  " << name << "  ["
                  << o.checked << " cases, " << timing << "]";
        if (!o.passed) std::cout << "  first failure: " << o.detail;
        std::cout << std::endl;
        if (!o.passed) ++failures;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("total %.1fs, %d of %zu criteria failed\n", total, failures, criteria.size());
    return failures;
}
