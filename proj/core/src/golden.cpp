#include "equichar/golden.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#ifndef EQUICHAR_SOURCE_DATA_DIR
#define EQUICHAR_SOURCE_DATA_DIR ""
#endif

namespace equichar {

std::string golden_data_dir() {
    if (const char* env = std::getenv("EQUICHAR_DATA")) return env;
    return EQUICHAR_SOURCE_DATA_DIR;
}

namespace {

nlohmann::json load_json(const std::string& filename) {
    const auto path = std::filesystem::path(golden_data_dir()) / filename;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("golden data not found: " + path.string());
    return nlohmann::json::parse(in);
}

}  // namespace

std::vector<GoldenCharacterRow> load_golden_characters(const std::string& table) {
    if (table != "appendix_a" && table != "appendix_b")
        throw std::invalid_argument("load_golden_characters: unknown table " + table);
    const auto j = load_json(table + ".json");
    std::vector<GoldenCharacterRow> rows;
    for (const auto& r : j.at("rows")) {
        GoldenCharacterRow row;
        row.n = r.at("n").get<int>();
        row.k = r.at("k").get<int>();
        for (const auto& t : r.at("terms"))
            row.terms.add_term(Partition(t.at("partition").get<std::vector<unsigned>>()),
                               Int(t.at("coeff").get<long long>()));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<GoldenQuotientRow> load_golden_quotients() {
    const auto j = load_json("table2_quotients.json");
    std::vector<GoldenQuotientRow> rows;
    for (const auto& r : j.at("rows")) {
        GoldenQuotientRow row;
        row.n = r.at("n").get<int>();
        const auto coeffs = r.at("coeffs").get<std::vector<long long>>();
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k]) row.poly.emplace(static_cast<unsigned>(k), coeffs[k]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<GoldenCuspidalRow> load_golden_cuspidal() {
    const auto j = load_json("table3_cuspidal.json");
    std::vector<GoldenCuspidalRow> rows;
    for (const auto& r : j.at("rows")) {
        GoldenCuspidalRow row;
        row.n = r.at("n").get<int>();
        if (r.contains("note")) row.note = r["note"].get<std::string>();
        for (const auto& c : r.at("components")) {
            std::optional<TransitivePermSpec::WreathBlock> wreath;
            if (!c.at("wreath").is_null())
                wreath = TransitivePermSpec::WreathBlock{c["wreath"].at("a").get<unsigned>(),
                                                         c["wreath"].at("m").get<unsigned>()};
            row.components.emplace_back(
                TransitivePermSpec(c.at("young").get<std::vector<unsigned>>(), wreath),
                c.at("mult").get<unsigned>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace equichar
