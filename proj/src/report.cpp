#include "spf/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"
#include "spf/errors.hpp"

namespace spf {

using Json = nlohmann::ordered_json;

std::string_view to_string(Basis b) {
    switch (b) {
        case Basis::Weyl: return "Weyl";
        case Basis::DualWeyl: return "DualWeyl";
        case Basis::Gamma: return "Gamma";
        case Basis::Sym: return "Sym";
        case Basis::Wedge: return "Wedge";
    }
    return "?";
}

Basis parse_basis(std::string_view text) {
    for (auto b : {Basis::Weyl, Basis::DualWeyl, Basis::Gamma, Basis::Sym, Basis::Wedge})
        if (to_string(b) == text) return b;
    throw InputError("unknown basis '" + std::string(text) + "'");
}

Basis basis_of(Family f) {
    switch (f) {
        case Family::Gamma: return Basis::Gamma;
        case Family::Sym: return Basis::Sym;
        case Family::Wedge: return Basis::Wedge;
    }
    return Basis::Gamma;
}

ExpansionReport make_report(const SchurExpansion& e, std::string method, Basis basis) {
    ExpansionReport r;
    r.degree = e.degree();
    r.method = std::move(method);
    r.basis = basis;
    for (const auto& [p, c] : e.terms()) r.expansion.emplace_back(p, c);
    return r;
}

ExpansionReport make_report(int degree, const std::vector<std::pair<Composition, Count>>& weights, std::string method,
                            Basis basis) {
    std::map<Partition, Count, std::greater<>> collapsed;
    for (const auto& [w, c] : weights) {
        std::vector<int> parts = w.entries();
        std::sort(parts.begin(), parts.end(), std::greater<>());
        collapsed[Partition(std::move(parts))] += c;
    }
    ExpansionReport r;
    r.degree = degree;
    r.method = std::move(method);
    r.basis = basis;
    for (const auto& [p, c] : collapsed)
        if (c != 0) r.expansion.emplace_back(p, c);
    r.weights = weights;
    return r;
}

std::string to_json(const ExpansionReport& r) {
    Json doc;
    doc["d"] = r.degree;
    doc["method"] = r.method;
    doc["basis"] = std::string(to_string(r.basis));
    doc["expansion"] = Json::array();
    for (const auto& [p, c] : r.expansion) doc["expansion"].push_back(Json{{"partition", p.parts()}, {"mult", c}});
    if (!r.weights.empty()) {
        doc["weights"] = Json::array();
        for (const auto& [w, c] : r.weights) doc["weights"].push_back(Json{{"weight", w.entries()}, {"mult", c}});
    }
    return doc.dump();
}

ExpansionReport report_from_json(std::string_view text) {
    try {
        const Json doc = Json::parse(text);
        ExpansionReport r;
        r.degree = doc.at("d").get<int>();
        r.method = doc.at("method").get<std::string>();
        r.basis = parse_basis(doc.at("basis").get<std::string>());
        for (const auto& term : doc.at("expansion")) {
            Partition p(term.at("partition").get<std::vector<int>>());
            const Count c = term.at("mult").get<Count>();
            if (p.size() != r.degree) throw InputError("report partition " + encode(p) + " has the wrong degree");
            if (c == 0) throw InputError("report contains a zero multiplicity");
            if (!r.expansion.empty() && !(r.expansion.back().first > p))
                throw InputError("report expansion is not in descending lexicographic order");
            r.expansion.emplace_back(std::move(p), c);
        }
        if (doc.contains("weights"))
            for (const auto& term : doc.at("weights"))
                r.weights.emplace_back(Composition(term.at("weight").get<std::vector<int>>()), term.at("mult").get<Count>());
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report JSON: ") + e.what());
    }
}

std::string to_table(const ExpansionReport& r) {
    std::ostringstream out;
    out << "method: " << r.method << "   basis: " << to_string(r.basis) << "   d = " << r.degree << '\n';
    if (!r.weights.empty()) {
        out << std::left << std::setw(24) << "weight" << "mult\n";
        for (const auto& [w, c] : r.weights) out << std::left << std::setw(24) << ("(" + encode(w) + ")") << c << '\n';
        out << '\n';
    }
    out << std::left << std::setw(24) << "partition" << "mult\n";
    for (const auto& [p, c] : r.expansion)
        out << std::left << std::setw(24) << ("(" + (p.empty() ? std::string() : encode(p)) + ")") << c << '\n';
    if (r.expansion.empty()) out << "(zero)\n";
    return out.str();
}

}  // namespace spf
