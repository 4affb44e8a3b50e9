#include "lame/curve.hpp"

#include <fstream>

namespace lame {

DepressedCubic depress(const WeierstrassCurve& curve, const PrecisionContext& ctx) {
    BigComplex a1 = evaluate(curve.a1, ctx);
    BigComplex a2 = evaluate(curve.a2, ctx);
    BigComplex a3 = evaluate(curve.a3, ctx);
    BigComplex a4 = evaluate(curve.a4, ctx);
    BigComplex a6 = evaluate(curve.a6, ctx);

    BigComplex b2 = a1 * a1 + a2 * 4;
    BigComplex b4 = a4 * 2 + a1 * a3;
    BigComplex b6 = a3 * a3 + a6 * 4;

    DepressedCubic out;
    out.g2 = (b2 * b2 - b4 * 24) / 12;
    out.g3 = (b2 * b4 * 36 - b2 * b2 * b2 - b6 * 216) / 216;
    out.shift = b2 / 12;
    out.roots = cubic_roots(out.g2, out.g3, ctx); // throws DegenerateCubic when singular
    return out;
}

namespace {

mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw SchemaError("coefficient: bad integer '" + j.get<std::string>() + "'");
        }
    }
    throw SchemaError("coefficient: minpoly entries must be integers or integer strings");
}

} // namespace

AlgebraicNumber coef_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return AlgebraicNumber::rational(mpq_class(static_cast<long>(j.get<long long>())), 192);
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
            throw SchemaError("coefficient: bad rational '" + j.get<std::string>() + "'");
        q.canonicalize();
        return AlgebraicNumber::rational(q, 192);
    }
    if (j.is_object()) {
        if (!j.contains("minpoly") || !j.contains("approx"))
            throw SchemaError("coefficient: object form needs 'minpoly' and 'approx'");
        AlgebraicNumber a;
        for (auto& c : j.at("minpoly")) a.minpoly.push_back(mpz_from_json(c));
        if (poly_degree(a.minpoly) < 1) throw SchemaError("coefficient: constant minpoly");
        try {
            a.approx = parse_packed_complex(j.at("approx").get<std::string>(), 50);
        } catch (const Error& e) {
            throw SchemaError(std::string("coefficient: bad approx: ") + e.what());
        }
        a.digits_certified = 0; // as given, not certified here
        return a;
    }
    throw SchemaError("coefficient: expected rational string or {minpoly, approx} object");
}

nlohmann::json coef_to_json(const AlgebraicNumber& a) {
    if (a.is_rational()) {
        mpq_class q = a.rational_value();
        return q.get_str();
    }
    nlohmann::json j;
    j["minpoly"] = nlohmann::json::array();
    for (auto& c : a.minpoly) {
        if (c.fits_slong_p())
            j["minpoly"].push_back(c.get_si());
        else
            j["minpoly"].push_back(c.get_str());
    }
    j["approx"] = a.approx.str(50);
    return j;
}

WeierstrassCurve curve_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("curve: expected an object");
    auto get = [&](const char* key) -> AlgebraicNumber {
        if (!j.contains(key)) return AlgebraicNumber::rational(mpq_class(0), 64);
        try {
            return coef_from_json(j.at(key));
        } catch (const SchemaError& e) {
            throw SchemaError(std::string("curve field ") + key + ": " + e.what());
        }
    };
    WeierstrassCurve c;
    c.a1 = get("a1");
    c.a2 = get("a2");
    c.a3 = get("a3");
    c.a4 = get("a4");
    c.a6 = get("a6");
    return c;
}

WeierstrassCurve load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("curve: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("curve: bad JSON in " + path + ": " + e.what());
    }
    return curve_from_json(j);
}

} // namespace lame
