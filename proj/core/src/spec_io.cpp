#include "lmpe/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lmpe/error.hpp"

namespace lmpe {

namespace {

using nlohmann::json;

template <class T>
T get_number(const json& doc, const char* key) {
    const auto& v = doc.at(key);
    if (!v.is_number_integer()) fail(ErrorKind::data_format, std::string("spec field '") + key + "' must be an integer");
    if constexpr (std::is_unsigned_v<T>) {
        if (v.is_number_unsigned()) return v.get<T>();
        if (v.get<long long>() < 0) fail(ErrorKind::data_format, std::string("spec field '") + key + "' must be non-negative");
    }
    return v.get<T>();
}

Quad get_quad(const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != kLetters)
        fail(ErrorKind::data_format, what + " must be an array of four integers");
    Quad q{};
    for (std::size_t i = 0; i < kLetters; ++i) {
        if (!v[i].is_number_integer()) fail(ErrorKind::data_format, what + " must be an array of four integers");
        q[i] = v[i].get<int>();
    }
    return q;
}

}  // namespace

LmpeCodeSpec parse_code_spec(std::string_view json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::data_format, std::string("spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::data_format, "spec must be a JSON object");
    static const std::set<std::string> known{"variant", "k", "l", "t", "q", "r", "w", "w2", "n", "m", "g",
                                             "gray_radius", "gray_mapping", "critical", "map_overrides", "seed"};
    for (const auto& [key, _] : doc.items())
        if (!known.count(key)) fail(ErrorKind::data_format, "unknown spec field '" + key + "'");

    LmpeCodeSpec spec;
    if (!doc.contains("variant") || !doc["variant"].is_string())
        fail(ErrorKind::data_format, "spec needs a string field 'variant'");
    try {
        spec.variant = parse_variant(doc["variant"].get<std::string>());
    } catch (const Error& e) {
        fail(ErrorKind::data_format, e.what());
    }
    if (!doc.contains("k")) fail(ErrorKind::data_format, "spec needs an integer field 'k'");
    spec.k = get_number<int>(doc, "k");
    if (doc.contains("l")) spec.l = get_number<int>(doc, "l");
    if (doc.contains("t")) spec.t = get_number<int>(doc, "t");
    if (doc.contains("g")) spec.g = get_number<int>(doc, "g");
    if (doc.contains("q")) spec.q = get_number<std::uint32_t>(doc, "q");
    if (doc.contains("r")) spec.r = get_number<int>(doc, "r");
    if (doc.contains("w")) spec.w = get_number<int>(doc, "w");
    if (doc.contains("w2")) spec.w2 = get_number<int>(doc, "w2");
    if (doc.contains("n")) spec.n = get_number<std::size_t>(doc, "n");
    if (doc.contains("m")) spec.m = get_number<std::size_t>(doc, "m");
    if (doc.contains("gray_radius")) spec.gray_radius = get_number<int>(doc, "gray_radius");
    if (doc.contains("seed")) spec.seed = get_number<std::uint64_t>(doc, "seed");
    if (doc.contains("critical")) spec.critical = get_quad(doc["critical"], "'critical'");
    if (doc.contains("map_overrides")) {
        const auto& list = doc["map_overrides"];
        if (!list.is_array()) fail(ErrorKind::data_format, "'map_overrides' must be an array");
        for (const auto& item : list) {
            if (!item.is_object() || !item.contains("remainder") || !item.contains("element"))
                fail(ErrorKind::data_format, "each map override needs 'remainder' and 'element'");
            spec.map_overrides.emplace_back(get_quad(item["remainder"], "override 'remainder'"),
                                            get_number<std::uint32_t>(item, "element"));
        }
    }
    if (doc.contains("gray_mapping")) {
        if (!doc["gray_mapping"].is_string()) fail(ErrorKind::data_format, "'gray_mapping' must be a path string");
        std::filesystem::path path = doc["gray_mapping"].get<std::string>();
        if (path.is_relative()) path = base_dir / path;
        std::ifstream in(path);
        if (!in) fail(ErrorKind::data_format, "cannot open Gray mapping file " + path.string());
        spec.gray = std::make_shared<GrayMapping>(read_gray_mapping(in));
    }
    return spec;
}

LmpeCodeSpec load_code_spec(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail(ErrorKind::data_format, "cannot open spec file " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_spec(buf.str(), file.parent_path());
}

std::string format_code_spec(const LmpeCodeSpec& spec) {
    json doc;
    doc["variant"] = std::string(to_string(spec.variant));
    doc["k"] = spec.k;
    doc["l"] = spec.l;
    doc["t"] = spec.t;
    doc["g"] = spec.g;
    if (spec.q) doc["q"] = *spec.q;
    if (spec.r) doc["r"] = *spec.r;
    if (spec.w) doc["w"] = *spec.w;
    if (spec.w2) doc["w2"] = *spec.w2;
    if (spec.n) doc["n"] = *spec.n;
    if (spec.m) doc["m"] = *spec.m;
    if (spec.gray_radius) doc["gray_radius"] = *spec.gray_radius;
    if (spec.seed) doc["seed"] = *spec.seed;
    if (spec.critical) doc["critical"] = *spec.critical;
    if (!spec.map_overrides.empty()) {
        doc["map_overrides"] = json::array();
        for (const auto& [b, e] : spec.map_overrides) doc["map_overrides"].push_back({{"remainder", b}, {"element", e}});
    }
    return doc.dump(2);
}

}  // namespace lmpe
