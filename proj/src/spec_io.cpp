#include "chatelet/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace chatelet {

std::string SurfaceSpec::to_json() const {
    nlohmann::json j;
    j["a"] = a;
    j["f"] = f;
    if (!label.empty()) j["label"] = label;
    return j.dump();
}

SurfaceSpec parse_surface_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("surface spec: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("surface spec: top level must be an object");

    SurfaceSpec spec;
    if (!j.contains("a")) throw ParseError("surface spec: missing field \"a\"");
    if (!j["a"].is_number_integer()) throw ParseError("surface spec: field \"a\" must be an integer");
    spec.a = j["a"].get<int64_t>();

    if (!j.contains("f")) throw ParseError("surface spec: missing field \"f\"");
    if (!j["f"].is_array() || j["f"].size() != 5) {
        throw ParseError("surface spec: field \"f\" must be an array of exactly 5 integers (c0..c4)");
    }
    for (size_t i = 0; i < 5; ++i) {
        if (!j["f"][i].is_number_integer()) {
            throw ParseError("surface spec: field \"f\"[" + std::to_string(i) +
                             "] must be an integer");
        }
        spec.f[i] = j["f"][i].get<int64_t>();
    }
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError("surface spec: field \"label\" must be a string");
        spec.label = j["label"].get<std::string>();
    }
    return spec;
}

SurfaceSpec load_surface_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_surface_spec(buf.str());
}

Surface load_surface(const std::string& path) {
    SurfaceSpec spec = load_surface_spec(path);
    return Surface::validate(spec.a, spec.f, spec.label);
}

}  // namespace chatelet
