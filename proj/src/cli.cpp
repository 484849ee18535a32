#include "spf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spf/characters.hpp"
#include "spf/errors.hpp"
#include "spf/internal_product.hpp"
#include "spf/lr.hpp"
#include "spf/report.hpp"
#include "spf/verify.hpp"

namespace spf::cli {

namespace {

// Attaches the flag name to parse errors raised while interpreting it.
template <typename F>
auto with_flag(std::string_view flag, F&& parse) {
    try {
        return parse();
    } catch (const InputError& e) {
        throw InputError("--" + std::string(flag) + ": " + e.what());
    }
}

// Partitions may be given as "4,2,1" or as a hook "hook:p,q" = (p,1^q).
Partition partition_flag(std::string_view flag, const std::string& text) {
    return with_flag(flag, [&] {
        constexpr std::string_view prefix = "hook:";
        if (text.starts_with(prefix)) {
            auto pq = parse_composition(std::string_view(text).substr(prefix.size()));
            if (pq.length() != 2) throw InputError("hook needs two numbers 'hook:p,q', got '" + text + "'");
            return hook_partition(pq[0], pq[1]);
        }
        return parse_partition(text);
    });
}

Composition composition_flag(std::string_view flag, const std::string& text) {
    return with_flag(flag, [&] { return parse_composition(text); });
}

CharTwoMode char_two_flag(const std::string& text) {
    if (text == "unit") return CharTwoMode::TwoInvertible;
    if (text == "zero") return CharTwoMode::TwoZero;
    if (text == "other") return CharTwoMode::TwoNonzeroNonunit;
    throw InputError("--char-two: expected unit, zero or other, got '" + text + "'");
}

std::vector<std::pair<Composition, Count>> unit_weights(const std::vector<Composition>& summands) {
    std::vector<std::pair<Composition, Count>> out;
    for (const auto& s : summands) out.emplace_back(s, 1);
    return out;
}

struct Options {
    std::string lambda;
    std::string mu;
    std::string nu;
    std::string method = "auto";
    std::string left_family = "gamma";
    std::string right_family = "gamma";
    std::string char_two = "unit";
    std::string suite = "all";
    std::string cache;
    int max_d = 5;
    bool force = false;
    bool json = false;
};

std::string render(const ExpansionReport& r, bool json) { return json ? to_json(r) + "\n" : to_table(r); }

}  // namespace

void save_cache(const std::string& path) {
    nlohmann::ordered_json doc;
    doc["lr"] = nlohmann::ordered_json::object();
    doc["characters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : lr_cache_snapshot()) doc["lr"][k] = v;
    for (const auto& [k, v] : character_cache_snapshot()) doc["characters"][k] = v;
    std::ofstream file(path);
    if (!file) throw InputError("--cache: cannot write '" + path + "'");
    file << doc.dump(1) << '\n';
}

void load_cache(const std::string& path) {
    std::ifstream file(path);
    if (!file) return;
    try {
        const auto doc = nlohmann::json::parse(file);
        lr_cache_load(doc.at("lr").get<std::map<std::string, Count>>());
        character_cache_load(doc.at("characters").get<std::map<std::string, Count>>());
    } catch (const nlohmann::json::exception& e) {
        throw InputError("--cache: malformed cache file '" + path + "': " + e.what());
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Internal tensor products of strict polynomial functors and Kronecker coefficients", "spf"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--cache", opt.cache, "Persist LR and character memo tables in this JSON file");

    auto* kron = app.add_subcommand("kron", "Decompose Δ(λ) ⊗ Δ(µ) (Kronecker coefficients g(λ,µ,α))");
    kron->add_option("--lambda", opt.lambda, "Partition λ, e.g. 3,2,1")->required();
    kron->add_option("--mu", opt.mu, "Partition µ, e.g. 4,2 or hook:p,q")->required();
    kron->add_option("--method", opt.method, "auto, general, two-row, one-box or hook");

    auto* gamma = app.add_subcommand("gamma-tensor", "Decompose Γ^µ ⊗ Γ^λ into Γ^ν");
    gamma->add_option("--mu", opt.mu, "Weight µ (row sums)")->required();
    gamma->add_option("--lambda", opt.lambda, "Weight λ (column sums)")->required();

    auto* exp = app.add_subcommand("exp-tensor", "Internal product of two exponential functors");
    exp->add_option("--left", opt.left_family, "gamma, sym or wedge");
    exp->add_option("--lambda", opt.lambda, "Weight of the left functor (row sums)")->required();
    exp->add_option("--right", opt.right_family, "gamma, sym or wedge");
    exp->add_option("--mu", opt.mu, "Weight of the right functor (column sums)")->required();
    exp->add_option("--char-two", opt.char_two, "2 in the ground ring: unit, zero or other");

    auto* wg = app.add_subcommand("weyl-gamma", "Weyl filtration multiplicities of Δ(λ) ⊗ Γ^ν");
    wg->add_option("--lambda", opt.lambda, "Partition λ")->required();
    wg->add_option("--nu", opt.nu, "Weight ν, zeros allowed")->required();

    auto* ww = app.add_subcommand("weyl-wedge", "Dual Weyl filtration multiplicities of Δ(λ) ⊗ ∧^ν");
    ww->add_option("--lambda", opt.lambda, "Partition λ")->required();
    ww->add_option("--nu", opt.nu, "Weight ν, zeros allowed")->required();

    auto* jt = app.add_subcommand("jacobi-trudi", "Signed Γ^ν terms of Δ(µ)");
    jt->add_option("--mu", opt.mu, "Partition µ")->required();

    auto* check = app.add_subcommand("oracle-check", "Run verification sweeps against the character oracle");
    check->add_option("--max-d", opt.max_d, "Largest degree to sweep");
    check->add_option("--suite", opt.suite, "all, kron, fast, lr, dims, weyl, contingency, jt or ortho");
    check->add_flag("--force", opt.force, "Allow --max-d above 8");

    for (auto* sub : {kron, gamma, exp, wg, ww, jt})
        sub->add_flag("--json", opt.json, "Emit a JSON report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "spf: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (!opt.cache.empty()) load_cache(opt.cache);
        std::string text;
        int status = kExitOk;

        if (kron->parsed()) {
            const Partition lambda = partition_flag("lambda", opt.lambda);
            const Partition mu = partition_flag("mu", opt.mu);
            const auto method = with_flag("method", [&] { return parse_method(opt.method); });
            if (lambda.size() != mu.size())
                throw InputError("--mu: |" + encode(mu) + "| = " + std::to_string(mu.size()) + " differs from |" +
                                 encode(lambda) + "| = " + std::to_string(lambda.size()));
            auto result = kronecker(lambda, mu, method);
            text = render(make_report(result.expansion, std::string(to_string(result.method)), Basis::Weyl), opt.json);
        } else if (gamma->parsed()) {
            const Composition mu = composition_flag("mu", opt.mu);
            const Composition lambda = composition_flag("lambda", opt.lambda);
            if (mu.degree() != lambda.degree())
                throw InputError("--lambda: degree " + std::to_string(lambda.degree()) + " differs from --mu degree " +
                                 std::to_string(mu.degree()));
            auto dec = gamma_tensor_gamma(mu, lambda);
            text = render(make_report(mu.degree(), unit_weights(dec.summands), "contingency", Basis::Gamma), opt.json);
        } else if (exp->parsed()) {
            const ExpFunctor left{with_flag("left", [&] { return parse_family(opt.left_family); }),
                                  composition_flag("lambda", opt.lambda)};
            const ExpFunctor right{with_flag("right", [&] { return parse_family(opt.right_family); }),
                                   composition_flag("mu", opt.mu)};
            const CharTwoMode mode = char_two_flag(opt.char_two);
            if (left.weight.degree() != right.weight.degree())
                throw InputError("--mu: degree " + std::to_string(right.weight.degree()) + " differs from --lambda degree " +
                                 std::to_string(left.weight.degree()));
            auto dec = exponential_tensor(left, right, mode);
            text = render(make_report(left.weight.degree(), unit_weights(dec.summands), "exponential-table",
                                      basis_of(dec.family)),
                          opt.json);
        } else if (wg->parsed() || ww->parsed()) {
            const Partition lambda = partition_flag("lambda", opt.lambda);
            const Composition nu = composition_flag("nu", opt.nu);
            if (lambda.size() != nu.degree())
                throw InputError("--nu: degree " + std::to_string(nu.degree()) + " differs from |" + encode(lambda) +
                                 "| = " + std::to_string(lambda.size()));
            if (wg->parsed())
                text = render(make_report(weyl_tensor_gamma(lambda, nu), "weyl-filtration", Basis::Weyl), opt.json);
            else
                text = render(make_report(weyl_tensor_wedge(lambda, nu), "dual-weyl-filtration", Basis::DualWeyl),
                              opt.json);
        } else if (jt->parsed()) {
            const Partition mu = partition_flag("mu", opt.mu);
            std::vector<std::pair<Composition, Count>> weights;
            for (const auto& [sign, nu] : jacobi_trudi(mu)) weights.emplace_back(nu, sign);
            text = render(make_report(mu.size(), weights, "jacobi-trudi", Basis::Gamma), opt.json);
        } else if (check->parsed()) {
            if (opt.max_d < 0) throw InputError("--max-d must be non-negative");
            if (opt.max_d > kDefaultOracleMaxDegree && !opt.force)
                throw InputError("--max-d " + std::to_string(opt.max_d) + " exceeds the guard of " +
                                 std::to_string(kDefaultOracleMaxDegree) + "; pass --force to run anyway");
            std::vector<std::string> suites = opt.suite == "all" ? suite_names() : std::vector<std::string>{opt.suite};
            std::ostringstream report;
            for (const auto& name : suites) {
                const auto result = run_suite(name, opt.max_d);
                report << format_result(result);
                if (!result.passed) status = kExitInternal;
            }
            text = report.str();
        }

        if (!opt.cache.empty()) save_cache(opt.cache);
        out << text;
        return status;
    } catch (const InputError& e) {
        err << "spf: " << e.what() << '\n';
        return kExitInput;
    } catch (const ConsistencyError& e) {
        err << "spf: internal consistency failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const OverflowError& e) {
        err << "spf: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace spf::cli
