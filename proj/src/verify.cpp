#include "spf/verify.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "spf/characters.hpp"
#include "spf/errors.hpp"
#include "spf/internal_product.hpp"
#include "spf/lr.hpp"

namespace spf {

long SuiteResult::total_checked() const {
    long n = 0;
    for (const auto& [d, count] : checked) n += count;
    return n;
}

std::vector<std::string> suite_names() { return {"kron", "fast", "lr", "dims", "weyl", "contingency", "jt", "ortho"}; }

namespace {

// Every composition of d with 1..max_parts entries, zeros allowed.
std::vector<Composition> compositions_up_to(int d, int max_parts) {
    std::vector<Composition> out;
    for (int len = 1; len <= max_parts; ++len) {
        std::vector<int> cur(static_cast<std::size_t>(len), 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == len - 1) {
                cur[i] = left;
                out.emplace_back(cur);
                return;
            }
            for (int v = left; v >= 0; --v) {
                cur[i] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, d);
    }
    return out;
}

std::string show(const Partition& p) { return "(" + (p.empty() ? std::string() : encode(p)) + ")"; }
std::string show(const Composition& c) { return "(" + encode(c) + ")"; }

// Runs `body` for each degree, recording counts; body returns the number of
// cases checked or sets a counterexample.
SuiteResult sweep(std::string name, int max_d, const std::function<long(int, std::string&)>& body) {
    SuiteResult r;
    r.suite = std::move(name);
    for (int d = 0; d <= max_d; ++d) {
        std::string failure;
        long n = 0;
        try {
            n = body(d, failure);
        } catch (const ConsistencyError& e) {
            failure = e.what();
        }
        r.checked.emplace_back(d, n);
        if (!failure.empty()) {
            r.passed = false;
            r.counterexample = "d=" + std::to_string(d) + ": " + failure;
            break;
        }
    }
    return r;
}

long check_kron(int d, std::string& failure) {
    long n = 0;
    for (const auto& la : enumerate_partitions(d)) {
        for (const auto& mu : enumerate_partitions(d)) {
            ++n;
            auto got = kronecker_general(la, mu);
            auto want = kronecker_oracle_expansion(la, mu);
            if (got != want) {
                failure = "lambda=" + show(la) + " mu=" + show(mu) + ": general " + to_string(got) + " vs oracle " +
                          to_string(want);
                return n;
            }
        }
    }
    return n;
}

long check_fast(int d, std::string& failure) {
    long n = 0;
    for (const auto& la : enumerate_partitions(d)) {
        for (int b = 1; 2 * b <= d; ++b) {
            ++n;
            const int a = d - b;
            auto general = kronecker_general(la, Partition{a, b});
            auto fast = kronecker_two_row(la, a, b);
            if (fast != general) {
                failure = "two-row lambda=" + show(la) + " (a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
                          "): " + to_string(fast) + " vs " + to_string(general);
                return n;
            }
            if (b == 1 && kronecker_one_box(la, a) != fast) {
                failure = "one-box lambda=" + show(la) + " a=" + std::to_string(a);
                return n;
            }
        }
        for (int q = 1; q < d; ++q) {
            ++n;
            auto general = kronecker_general(la, hook_partition(d - q, q));
            auto fast = kronecker_hook(la, d - q, q);
            if (fast != general) {
                failure = "hook lambda=" + show(la) + " (p,q)=(" + std::to_string(d - q) + "," + std::to_string(q) +
                          "): " + to_string(fast) + " vs " + to_string(general);
                return n;
            }
        }
    }
    return n;
}

long check_lr(int d, std::string& failure) {
    long n = 0;
    for (const auto& la : enumerate_partitions(d)) {
        for (int a = 0; a <= d; ++a) {
            for (const auto& mu : enumerate_partitions(a)) {
                for (const auto& nu : enumerate_partitions(d - a)) {
                    ++n;
                    const Count x = lr_coeff(la, mu, nu);
                    const Count y = lr_oracle(la, mu, nu);
                    if (x != y) {
                        failure = "c^" + show(la) + "_{" + show(mu) + "," + show(nu) + "}: tableaux " +
                                  std::to_string(x) + " vs characters " + std::to_string(y);
                        return n;
                    }
                }
            }
        }
    }
    return n;
}

long check_dims(int d, std::string& failure) {
    long n = 0;
    for (const auto& la : enumerate_partitions(d)) {
        for (const auto& mu : enumerate_partitions(d)) {
            ++n;
            const auto result = kronecker(la, mu);
            Count total = 0;
            for (const auto& [alpha, c] : result.expansion.terms()) total = checked_add(total, checked_mul(c, dimension(alpha)));
            const Count want = checked_mul(dimension(la), dimension(mu));
            if (total != want) {
                failure = "lambda=" + show(la) + " mu=" + show(mu) + " (" + std::string(to_string(result.method)) +
                          "): sum of dimensions " + std::to_string(total) + " vs f^lambda f^mu = " + std::to_string(want);
                return n;
            }
        }
    }
    return n;
}

long check_weyl(int d, std::string& failure) {
    long n = 0;
    const auto weights = compositions_up_to(d, 4);
    for (const auto& la : enumerate_partitions(d)) {
        for (const auto& nu : weights) {
            ++n;
            auto got = weyl_tensor_gamma(la, nu);
            auto want = internal_h_oracle(la, nu);
            if (got != want || !got.all_nonnegative()) {
                failure = "lambda=" + show(la) + " nu=" + show(nu) + ": chains " + to_string(got) + " vs oracle " +
                          to_string(want);
                return n;
            }
            if (weyl_tensor_wedge(la, nu) != conjugate_expansion(got)) {
                failure = "wedge lambda=" + show(la) + " nu=" + show(nu);
                return n;
            }
        }
    }
    return n;
}

long check_contingency(int d, std::string& failure) {
    long n = 0;
    const auto weights = compositions_up_to(d, 4);
    for (const auto& mu : weights) {
        for (const auto& la : weights) {
            ++n;
            const auto mats = enumerate_contingency(mu, la);
            Count rsk = 0;
            for (const auto& nu : enumerate_partitions(d)) rsk = checked_add(rsk, checked_mul(kostka(nu, mu), kostka(nu, la)));
            if (static_cast<Count>(mats.size()) != rsk) {
                failure = "mu=" + show(mu) + " lambda=" + show(la) + ": " + std::to_string(mats.size()) +
                          " matrices vs RSK count " + std::to_string(rsk);
                return n;
            }
            if (d <= 6) {
                ClassFunction sum(d);
                for (const auto& nu : gamma_tensor_gamma(mu, la).summands) sum = sum + perm_character(nu);
                if (sum != perm_character(mu) * perm_character(la)) {
                    failure = "mu=" + show(mu) + " lambda=" + show(la) + ": permutation characters disagree";
                    return n;
                }
            }
        }
    }
    return n;
}

long check_jt(int d, std::string& failure) {
    long n = 0;
    for (const auto& mu : enumerate_partitions(d)) {
        ++n;
        SchurExpansion sum(d);
        for (const auto& [sign, nu] : jacobi_trudi(mu)) sum += complete_homogeneous_expansion(nu).scaled(sign);
        if (sum != SchurExpansion::basis(mu)) {
            failure = "mu=" + show(mu) + ": Jacobi-Trudi re-expands to " + to_string(sum);
            return n;
        }
    }
    return n;
}

long check_ortho(int d, std::string& failure) {
    long n = 0;
    for (const auto& la : enumerate_partitions(d)) {
        for (const auto& mu : enumerate_partitions(d)) {
            ++n;
            const Count ip = inner_product(irreducible_character(la), irreducible_character(mu));
            if (ip != (la == mu ? 1 : 0)) {
                failure = "<chi^" + show(la) + ", chi^" + show(mu) + "> = " + std::to_string(ip);
                return n;
            }
        }
    }
    return n;
}

}  // namespace

SuiteResult run_suite(std::string_view suite, int max_d) {
    static const std::map<std::string, std::function<long(int, std::string&)>, std::less<>> suites{
        {"kron", check_kron},   {"fast", check_fast},
        {"lr", check_lr},       {"dims", check_dims},
        {"weyl", check_weyl},   {"contingency", check_contingency},
        {"jt", check_jt},       {"ortho", check_ortho},
    };
    auto it = suites.find(suite);
    if (it == suites.end()) throw InputError("unknown suite '" + std::string(suite) + "'");
    return sweep(it->first, max_d, it->second);
}

std::string format_result(const SuiteResult& r) {
    std::ostringstream out;
    for (const auto& [d, n] : r.checked) out << r.suite << " d=" << d << ": " << n << " checked\n";
    out << r.suite << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.total_checked() << " checked)\n";
    if (!r.passed) out << r.suite << ": first counterexample at " << r.counterexample << '\n';
    return out.str();
}

}  // namespace spf
