#include "equichar/serialize.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace equichar {

namespace {

nlohmann::ordered_json coeff_json(const Int& c) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (c >= lo && c <= hi) return nlohmann::ordered_json(static_cast<long long>(c));
    return nlohmann::ordered_json(c.str());
}

Int coeff_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

nlohmann::ordered_json terms_json(const std::vector<std::pair<Partition, Int>>& terms) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [partition, coeff] : terms) {
        nlohmann::ordered_json t;
        t["partition"] = partition.parts();
        t["coeff"] = coeff_json(coeff);
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace

CharacterDocument make_document(std::string space, int n, std::optional<int> m,
                                std::optional<int> k, const SchurExpansion& x,
                                std::string version) {
    CharacterDocument doc;
    doc.space = std::move(space);
    doc.n = n;
    doc.m = m;
    doc.k = k;
    doc.version = std::move(version);
    const auto& terms = x.terms();
    doc.terms.assign(terms.rbegin(), terms.rend());  // canonical descending
    return doc;
}

std::string render_document_json(const CharacterDocument& doc) {
    nlohmann::ordered_json j;
    j["space"] = doc.space;
    j["n"] = doc.n;
    if (doc.m) j["m"] = *doc.m;
    if (doc.k) j["k"] = *doc.k;
    j["basis"] = doc.basis;
    j["terms"] = terms_json(doc.terms);
    j["version"] = doc.version;
    return j.dump();
}

CharacterDocument parse_document_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    CharacterDocument doc;
    doc.space = j.at("space").get<std::string>();
    doc.n = j.at("n").get<int>();
    if (j.contains("m")) doc.m = j["m"].get<int>();
    if (j.contains("k")) doc.k = j["k"].get<int>();
    doc.basis = j.at("basis").get<std::string>();
    for (const auto& t : j.at("terms"))
        doc.terms.emplace_back(Partition(t.at("partition").get<std::vector<unsigned>>()),
                               coeff_from_json(t.at("coeff")));
    doc.version = j.at("version").get<std::string>();
    return doc;
}

std::string render_document_json_all_k(const std::string& space, int n, std::optional<int> m,
                                       const CharPoly& p, const std::string& version) {
    nlohmann::ordered_json j;
    j["space"] = space;
    j["n"] = n;
    if (m) j["m"] = *m;
    j["basis"] = "schur";
    j["version"] = version;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [k, f] : p.coeffs()) {
        const auto doc = make_document(space, n, m, static_cast<int>(k), to_schur(f), version);
        nlohmann::ordered_json row;
        row["k"] = k;
        row["terms"] = terms_json(doc.terms);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

namespace {

// display order of the reference tables: fewer parts first, then
// lexicographically increasing
std::vector<std::pair<Partition, Int>> display_order(const SchurExpansion& x) {
    std::vector<std::pair<Partition, Int>> terms(x.terms().begin(), x.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.length() != b.first.length()) return a.first.length() < b.first.length();
        return a.first.parts() < b.first.parts();
    });
    return terms;
}

std::string render_with(const SchurExpansion& x, const char* open, const char* sep,
                        const char* close) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [partition, coeff] : display_order(x)) {
        if (!out.empty()) out += coeff > 0 ? " + " : " - ";
        else if (coeff < 0) out += "-";
        const Int mag = abs(coeff);
        if (mag != 1) out += mag.str() + " ";
        out += open;
        for (std::size_t i = 0; i < partition.length(); ++i) {
            if (i) out += sep;
            out += std::to_string(partition.parts()[i]);
        }
        out += close;
    }
    return out;
}

}  // namespace

std::string render_text(const SchurExpansion& x) { return render_with(x, "s(", ",", ")"); }

std::string render_latex(const SchurExpansion& x) { return render_with(x, "s_{(", ", ", ")}"); }

}  // namespace equichar
