#include "wplab/error.hpp"
#include "wplab/maps.hpp"

#include <json.hpp>

namespace wplab {

namespace {

using nlohmann::json;

json coeff_array(const ComplexSeries& s) {
    json a = json::array();
    for (const auto& c : s.coeffs())
        a.push_back({c.real(), c.imag()});
    return a;
}

std::vector<cplx> read_coeffs(const json& a, const char* key) {
    if (!a.is_array() || a.empty())
        throw InvalidInput(std::string("pair json: '") + key + "' must be a non-empty array");
    std::vector<cplx> out;
    out.reserve(a.size());
    for (const auto& e : a) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw InvalidInput(std::string("pair json: '") + key + "' entries must be [re, im]");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

} // namespace

std::string export_pair_json(const WeldingPair& p) {
    json j;
    j["family_tag"] = p.family_tag;
    j["params"] = p.params;
    j["taylor_coeffs"] = coeff_array(p.f);
    j["laurent_coeffs"] = coeff_array(p.g);
    j["g_prime_at_infinity"] = {p.g_prime_at_infinity.real(), p.g_prime_at_infinity.imag()};
    j["M"] = p.samples;
    j["residuals"] = p.residuals;
    return j.dump(1);
}

WeldingPair import_pair_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("pair json: ") + e.what());
    }
    if (!j.is_object())
        throw InvalidInput("pair json: top level must be an object");
    try {
        WeldingPair p;
        p.f = ComplexSeries::taylor(read_coeffs(j.at("taylor_coeffs"), "taylor_coeffs"));
        p.g = ComplexSeries::laurent(read_coeffs(j.at("laurent_coeffs"), "laurent_coeffs"));
        p.family_tag = j.value("family_tag", std::string("imported"));
        if (j.contains("params"))
            p.params = j["params"].get<std::map<std::string, double>>();
        if (j.contains("residuals"))
            p.residuals = j["residuals"].get<std::map<std::string, double>>();
        p.samples = j.value("M", std::size_t{0});
        p.g_prime_at_infinity = p.g[0];
        if (p.f.order() < 2 || p.f[0] != 0.0 || p.f[1] != 1.0)
            throw InvalidInput("pair json: f must satisfy f(0) = 0, f'(0) = 1");
        if (p.g[0] == 0.0)
            throw InvalidInput("pair json: g must have a pole at infinity");
        return p;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("pair json: ") + e.what());
    }
}

} // namespace wplab
