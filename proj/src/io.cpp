#include "teamtl/io.hpp"

#include "teamtl/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace teamtl {

using nlohmann::json;

std::string strip_comments(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_string = false, escaped = false, in_comment = false;
    for (char c : text) {
        if (in_comment) {
            if (c == '\n') {
                in_comment = false;
                out += c;
            }
            continue;
        }
        if (in_string) {
            out += c;
            if (escaped) escaped = false;
            else if (c == '\\') escaped = true;
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '#') {
            in_comment = true;
            continue;
        }
        if (c == '"') in_string = true;
        out += c;
    }
    return out;
}

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(strip_comments(text));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
}

std::vector<PropSet> letters(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of letters");
    std::vector<PropSet> out;
    for (const auto& letter : j) {
        if (!letter.is_array()) throw InputError(std::string(what) + " letters must be arrays");
        PropSet s;
        for (const auto& p : letter) {
            if (!p.is_string()) throw InputError("propositions must be strings");
            s.insert(p.get<std::string>());
        }
        out.push_back(std::move(s));
    }
    return out;
}

json letters_json(const std::vector<PropSet>& word) {
    json out = json::array();
    for (const auto& letter : word) out.push_back(json(std::vector<std::string>(letter.begin(), letter.end())));
    return out;
}

}  // namespace

TeamEncoding parse_team(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("traces") || !doc["traces"].is_array())
        throw InputError("team document needs a \"traces\" array");
    std::vector<LassoTrace> traces;
    for (const auto& t : doc["traces"]) {
        if (!t.is_object() || !t.contains("loop"))
            throw InputError("each trace needs a \"loop\"");
        auto prefix = t.contains("prefix") ? letters(t["prefix"], "prefix") : std::vector<PropSet>{};
        auto loop = letters(t["loop"], "loop");
        traces.emplace_back(std::move(prefix), std::move(loop));
    }
    return TeamEncoding(std::move(traces));
}

std::string write_team(const TeamEncoding& team) {
    json traces = json::array();
    for (const auto& t : team)
        traces.push_back({{"prefix", letters_json(t.prefix())}, {"loop", letters_json(t.loop())}});
    return json{{"traces", traces}}.dump(2) + "\n";
}

KripkeDescription parse_kripke(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw InputError("Kripke document must be an object");
    KripkeDescription d;
    try {
        d.worlds = doc.at("worlds").get<std::vector<std::string>>();
        for (const auto& e : doc.value("edges", json::array())) {
            const auto pair = e.get<std::vector<std::string>>();
            if (pair.size() != 2) throw InputError("edges must be [from, to] pairs");
            d.edges.emplace_back(pair[0], pair[1]);
        }
        const json labels = doc.value("labels", json::object());
        for (const auto& [w, props] : labels.items()) {
            const auto list = props.get<std::vector<std::string>>();
            d.labels[w] = PropSet(list.begin(), list.end());
        }
        if (doc.contains("initial")) d.initial = doc["initial"].get<std::string>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed Kripke document: ") + e.what());
    }
    return d;
}

std::string write_kripke(const KripkeStructure& k) {
    const KripkeDescription d = k.description();
    json edges = json::array();
    for (const auto& [a, b] : d.edges) edges.push_back({a, b});
    json labels = json::object();
    for (const auto& [w, props] : d.labels)
        labels[w] = std::vector<std::string>(props.begin(), props.end());
    json doc{{"worlds", d.worlds}, {"edges", edges}, {"labels", labels}};
    if (d.initial) doc["initial"] = *d.initial;
    return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << contents;
}

}  // namespace teamtl
