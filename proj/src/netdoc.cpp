#include "autonet/netdoc.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "autonet/rules.hpp"

namespace autonet {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
}

int require_int(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw DocumentError(std::string("missing integer field \"") + key + "\"");
    const auto v = j[key].get<std::int64_t>();
    if (v < lo || v > hi)
        throw DocumentError(std::string("field \"") + key + "\" out of range");
    return static_cast<int>(v);
}

Network network_from_table(const json& doc, int q, int n) {
    const std::uint64_t size = Network::state_count_for(q, n);
    const json& table = doc.at("table");
    if (!table.is_array())
        throw DocumentError("\"table\" must be an array of configuration strings");
    if (table.size() != size)
        throw DocumentError("table: expected " + std::to_string(size) + " entries, got " +
                            std::to_string(table.size()));
    const Network id = Network::identity(q, n);
    std::vector<state_t> t(size);
    for (std::uint64_t k = 0; k < size; ++k) {
        if (!table[k].is_string())
            throw DocumentError("table entry " + std::to_string(k) + " is not a string");
        try {
            t[k] = id.parse_state(table[k].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw DocumentError("table entry " + std::to_string(k) + ": " + e.what());
        }
    }
    return Network(q, n, std::move(t));
}

Network network_from_rules(const json& doc, int q, int n) {
    if (q != 2) throw DocumentError("rules form requires q = 2");
    const json& rules = doc.at("rules");
    if (!rules.is_array() || rules.size() != static_cast<std::size_t>(n))
        throw DocumentError("\"rules\" must be an array of " + std::to_string(n) + " expressions");
    std::vector<RuleExpr> exprs;
    for (int i = 0; i < n; ++i) {
        if (!rules[static_cast<std::size_t>(i)].is_string())
            throw DocumentError("rule " + std::to_string(i + 1) + " is not a string");
        try {
            exprs.push_back(parse_rule(rules[static_cast<std::size_t>(i)].get<std::string>()));
        } catch (const RuleParseError& e) {
            throw DocumentError("rule " + std::to_string(i + 1) + ": " + e.what());
        }
        if (max_variable(exprs.back()) > n)
            throw DocumentError("rule " + std::to_string(i + 1) + " references a variable beyond x" +
                                std::to_string(n));
    }
    return Network::build(2, n, [&](state_t x) {
        state_t y = 0;
        for (int i = 1; i <= n; ++i)
            y |= static_cast<state_t>(eval_rule(exprs[static_cast<std::size_t>(i - 1)], x, n)) << (n - i);
        return y;
    });
}

int cube_node(const std::string& key, int n) {
    if (key.size() < 2 || key[0] != 'x') throw DocumentError("cube keys must look like \"x1\"");
    int idx = 0;
    for (std::size_t k = 1; k < key.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(key[k])))
            throw DocumentError("cube keys must look like \"x1\"");
        idx = idx * 10 + (key[k] - '0');
    }
    if (idx < 1 || idx > n) throw DocumentError("cube key " + key + " out of range");
    return idx;
}

std::vector<Subcube> cubes_from_json(const json& doc, int n) {
    const json& cubes = doc.at("cubes");
    if (!cubes.is_array() || cubes.empty()) throw DocumentError("\"cubes\" must be a nonempty array");
    std::vector<Subcube> out;
    for (const json& c : cubes) {
        if (!c.is_object()) throw DocumentError("each cube must be an object of node assignments");
        state_t fixed = 0, values = 0;
        for (const auto& [key, val] : c.items()) {
            const int node = cube_node(key, n);
            if (!val.is_number_integer() || (val.get<int>() != 0 && val.get<int>() != 1))
                throw DocumentError("cube value for " + key + " must be 0 or 1");
            const state_t bit = state_t{1} << (n - node);
            fixed |= bit;
            if (val.get<int>() == 1) values |= bit;
        }
        out.push_back(Subcube::from_masks(n, fixed, values));
    }
    return out;
}

}  // namespace

Network parse_network_document(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw DocumentError("document must be a JSON object");
    const int q = require_int(doc, "q", 2, 255);
    const int n = require_int(doc, "n", 1, Network::kMaxNodes);
    if (!doc.contains("format") || !doc["format"].is_string())
        throw DocumentError("missing string field \"format\"");
    const std::string format = doc["format"].get<std::string>();
    if (format == "table") {
        if (!doc.contains("table")) throw DocumentError("table form requires a \"table\" field");
        return network_from_table(doc, q, n);
    }
    if (format == "rules") {
        if (!doc.contains("rules")) throw DocumentError("rules form requires a \"rules\" field");
        return network_from_rules(doc, q, n);
    }
    throw DocumentError("unknown format \"" + format + "\" (expected \"table\" or \"rules\")");
}

std::string network_document(const Network& f) {
    json doc;
    doc["format"] = "table";
    doc["q"] = f.q();
    doc["n"] = f.n();
    json table = json::array();
    for (std::uint64_t x = 0; x < f.state_count(); ++x)
        table.push_back(f.format_state(f.apply_index(static_cast<state_t>(x))));
    doc["table"] = std::move(table);
    return doc.dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("cannot write " + path);
    out << text;
}

Network load_network(const std::string& path) { return parse_network_document(read_file(path)); }

void save_network(const Network& f, const std::string& path) { write_file(path, network_document(f)); }

Arrangement parse_arrangement_document(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw DocumentError("document must be a JSON object");
    const int n = require_int(doc, "n", 1, Network::kMaxNodes);
    if (!doc.contains("cubes")) throw DocumentError("missing \"cubes\" field");
    try {
        return Arrangement::validate(n, cubes_from_json(doc, n));
    } catch (const ArrangementValidationError& e) {
        throw DocumentError(std::string("not an arrangement: ") + e.what());
    }
}

Arrangement load_arrangement(const std::string& path) {
    return parse_arrangement_document(read_file(path));
}

ArrangementNetworkSpec parse_spec_document(const std::string& text) {
    const json doc = parse_json(text);
    Arrangement arr = parse_arrangement_document(text);
    const int n = arr.n();
    std::map<int, FreeChoice> choices;
    if (doc.contains("free_choice")) {
        if (!doc["free_choice"].is_object()) throw DocumentError("\"free_choice\" must be an object");
        for (const auto& [key, val] : doc["free_choice"].items()) {
            const int node = cube_node(key, n);
            if (!val.is_string()) throw DocumentError("free_choice values must be strings");
            const std::string name = val.get<std::string>();
            FreeChoice choice;
            if (name == "const0")
                choice = FreeChoice::Const0;
            else if (name == "const1")
                choice = FreeChoice::Const1;
            else if (name == "negate")
                choice = FreeChoice::Negate;
            else
                throw DocumentError("unknown free choice \"" + name + "\"");
            choices.emplace(node, choice);
        }
    }
    return ArrangementNetworkSpec{std::move(arr), std::move(choices)};
}

ArrangementNetworkSpec load_spec(const std::string& path) {
    return parse_spec_document(read_file(path));
}

std::string spec_document(const ArrangementNetworkSpec& spec) {
    json doc;
    doc["n"] = spec.arrangement.n();
    json cubes = json::array();
    for (const Subcube& c : spec.arrangement.cubes()) {
        json cube = json::object();
        c.support().for_each_node([&](int i) { cube["x" + std::to_string(i)] = c.value_at(i); });
        cubes.push_back(std::move(cube));
    }
    doc["cubes"] = std::move(cubes);
    json fc = json::object();
    for (const auto& [node, choice] : spec.free_choice)
        fc["x" + std::to_string(node)] = free_choice_name(choice);
    doc["free_choice"] = std::move(fc);
    return doc.dump() + "\n";
}

}  // namespace autonet
