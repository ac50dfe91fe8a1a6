#include "cmdbell/model_json.hpp"

#include "cmdbell/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace cmdbell {

namespace {

std::array<double, kStrategyCount> parse_block(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array())
        throw ParseError(where + " must be an array of 16 numbers");
    if (j.size() != kStrategyCount)
        throw ParseError(where + " has " + std::to_string(j.size()) +
                         " entries, expected 16");
    std::array<double, kStrategyCount> out{};
    for (int l = 0; l < kStrategyCount; ++l) {
        const auto& v = j[l];
        if (!v.is_number())
            throw ParseError(where + "[" + std::to_string(l) + "] is not a number");
        const double x = v.get<double>();
        if (!std::isfinite(x))
            throw ParseError(where + "[" + std::to_string(l) + "] is not finite");
        out[l] = x;
    }
    return out;
}

} // namespace

HVModel model_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("model JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("model JSON: top level must be an object");
    if (!j.contains("reference"))
        throw ParseError("model JSON: missing 'reference'");
    if (!j.contains("xi") || !j["xi"].is_object())
        throw ParseError("model JSON: missing 'xi' object");

    HVModel m;
    m.reference.p = parse_block(j["reference"], "reference");
    for (const SettingPair& sp : kNonReferencePairs) {
        const std::string key = to_string(sp);
        if (!j["xi"].contains(key))
            throw ParseError("model JSON: missing xi block '" + key + "'");
        m.xi.block(sp.code()) = parse_block(j["xi"][key], "xi." + key);
    }
    return m;
}

std::string model_to_json(const HVModel& model, int indent) {
    nlohmann::json j;
    j["reference"] = model.reference.p;
    nlohmann::json xi = nlohmann::json::object();
    for (const SettingPair& sp : kNonReferencePairs)
        xi[to_string(sp)] = model.xi.block(sp.code());
    j["xi"] = xi;
    return j.dump(indent);
}

HVModel load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open model file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return model_from_json(buffer.str());
}

void save_model_file(const HVModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write model file '" + path + "'");
    out << model_to_json(model) << '\n';
}

} // namespace cmdbell
