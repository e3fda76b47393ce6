#include "catwig/state_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "catwig/state.hpp"

namespace catwig {

namespace {

using nlohmann::json;

Complex complex_from(const json& j, const char* what) {
    if (j.is_number()) {
        return Complex{j.get<double>(), 0.0};
    }
    if (j.is_object() && j.contains("re") && j.contains("im") && j["re"].is_number() &&
        j["im"].is_number()) {
        return Complex{j["re"].get<double>(), j["im"].get<double>()};
    }
    throw std::invalid_argument(std::string("state json: ") + what +
                                " must be a number or {\"re\":..,\"im\":..}");
}

Complex field(const json& j, const char* key) {
    if (!j.contains(key)) {
        throw std::invalid_argument(std::string("state json: missing field ") + key);
    }
    return complex_from(j.at(key), key);
}

SuperpositionState parse(const json& root) {
    if (!root.is_object() || root.size() != 1) {
        throw std::invalid_argument(
            "state json: expected exactly one of terms/cat/cat_diff/cat_sum");
    }
    if (root.contains("terms")) {
        const json& terms = root["terms"];
        if (!terms.is_array() || terms.empty()) {
            throw std::invalid_argument("state json: terms must be a non-empty array");
        }
        SuperpositionState s;
        for (const json& t : terms) {
            if (!t.is_object()) {
                throw std::invalid_argument("state json: each term must be an object");
            }
            s.terms.push_back({field(t, "coeff"), field(t, "amp")});
        }
        return s;
    }
    if (root.contains("cat")) {
        const json& c = root["cat"];
        return build_cat({field(c, "aL"), field(c, "da")});
    }
    const bool diff = root.contains("cat_diff");
    if (diff || root.contains("cat_sum")) {
        const json& c = root[diff ? "cat_diff" : "cat_sum"];
        const SuperpositionState cat1 = build_cat({field(c, "a0"), field(c, "da0")});
        const SuperpositionState cat2 = build_cat({field(c, "a00"), field(c, "da00")});
        return combine(cat1, cat2, diff ? CombineMode::difference : CombineMode::sum);
    }
    throw std::invalid_argument("state json: unknown top-level key");
}

}  // namespace

SuperpositionState state_from_json_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("state json: parse error: ") + e.what());
    }
    return parse(root);
}

SuperpositionState state_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("state json: cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return state_from_json_text(buf.str());
}

}  // namespace catwig
