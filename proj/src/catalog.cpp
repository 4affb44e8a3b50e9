#include "lame/catalog.hpp"

#include <cstdlib>
#include <fstream>

namespace lame {

std::array<BigFloat, 3> CatalogEntry::targets_at(const PrecisionContext& ctx) const {
    std::array<BigFloat, 3> out = {BigFloat(ctx.bits()), BigFloat(ctx.bits()), BigFloat(ctx.bits())};
    for (int k = 0; k < 3; ++k) {
        BigComplex v = evaluate(target_squares[k], ctx);
        if (abs(v.im()) > ctx.eps() * max(ctx.real(1), v.abs()))
            throw SchemaError("catalog row " + label + ": target square " + std::to_string(k) +
                              " is not real");
        out[k] = v.re();
    }
    return out;
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("catalog row: expected an object");
    CatalogEntry e;
    try {
        e.label = j.at("label").get<std::string>();
        e.e = j.at("e").get<int>();
        e.curve = curve_from_json(j.at("curve"));
        if (j.contains("expected_C") && !j.at("expected_C").is_null())
            e.expected_C = coef_from_json(j.at("expected_C"));
        auto& ts = j.at("target_squares");
        if (!ts.is_array() || ts.size() != 3)
            throw SchemaError("target_squares must hold exactly 3 values");
        for (int k = 0; k < 3; ++k) e.target_squares[k] = coef_from_json(ts.at(k));
        if (j.contains("flags"))
            for (auto& f : j.at("flags")) e.flags.insert(f.get<std::string>());
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError("catalog row " + e.label + ": " + ex.what());
    } catch (const SchemaError& ex) {
        throw SchemaError("catalog row " + (e.label.empty() ? std::string("?") : e.label) + ": " +
                          ex.what());
    }
    static const std::set<int> allowed = {3, 4, 5, 6, 7, 9, 11};
    if (!allowed.count(e.e))
        throw SchemaError("catalog row " + e.label + ": ramification index " +
                          std::to_string(e.e) + " not in {3,4,5,6,7,9,11}");
    return e;
}

nlohmann::json entry_to_json(const CatalogEntry& e) {
    nlohmann::json j;
    j["label"] = e.label;
    j["e"] = e.e;
    nlohmann::json c;
    c["a1"] = coef_to_json(e.curve.a1);
    c["a2"] = coef_to_json(e.curve.a2);
    c["a3"] = coef_to_json(e.curve.a3);
    c["a4"] = coef_to_json(e.curve.a4);
    c["a6"] = coef_to_json(e.curve.a6);
    j["curve"] = c;
    if (e.expected_C) j["expected_C"] = coef_to_json(*e.expected_C);
    j["target_squares"] = nlohmann::json::array();
    for (auto& t : e.target_squares) j["target_squares"].push_back(coef_to_json(t));
    j["flags"] = nlohmann::json::array();
    for (auto& f : e.flags) j["flags"].push_back(f);
    return j;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("catalog: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("catalog: bad JSON: ") + ex.what());
    }
    if (!j.is_array()) throw SchemaError("catalog: expected a top-level array");

    std::vector<CatalogEntry> out;
    auto ctx = PrecisionContext::make(40);
    for (auto& row : j) {
        CatalogEntry e = entry_from_json(row);
        if (!e.flagged()) {
            // invariant: target squares evaluate to positive reals
            auto ts = e.targets_at(ctx);
            for (auto& t : ts)
                if (t.sign() <= 0)
                    throw SchemaError("catalog row " + e.label + ": non-positive target square");
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<const CatalogEntry*> find_entries(const std::vector<CatalogEntry>& catalog,
                                              const std::string& label, int e) {
    std::vector<const CatalogEntry*> out;
    for (auto& entry : catalog)
        if (entry.label == label && (e == 0 || entry.e == e)) out.push_back(&entry);
    return out;
}

BigFloat fricke_check(const CatalogEntry& entry, const PrecisionContext& ctx) {
    auto sq = entry.targets_at(ctx);
    BigFloat x = sqrt(sq[0]), y = sqrt(sq[1]), z = sqrt(sq[2]);
    BigFloat rhs = BigFloat::of(2L, ctx.bits()) -
                   cos(BigFloat::pi(ctx.bits()) / entry.e) * 2;
    return abs(sq[0] + sq[1] + sq[2] - x * y * z - rhs);
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("LAME_DATA_DIR"))
        return std::string(env) + "/catalog.json";
    return "data/catalog.json";
}

} // namespace lame
