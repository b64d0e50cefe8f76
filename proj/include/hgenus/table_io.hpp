#pragma once

// JSON manifold descriptors.
//
//   {
//     "half_dim": 2,
//     "has_x": true,
//     "k0": 3,
//     "hypotheses": {"connected": true},
//     "numbers": {"c_1^2": "9", "c_2^1": "3", "x^2": "1", ...}
//   }
//
// Rationals are reduced "p/q" strings (or integers); there is no floating
// point anywhere in the format. Loading validates every table invariant.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "error.hpp"
#include "manifolds.hpp"

namespace hgenus {

inline nlohmann::json table_to_json(const CharacteristicTable& table)
{
    nlohmann::json numbers = nlohmann::json::object();
    for (const auto& [key, value] : table.numbers()) {
        numbers[monomial_key(key)] = value.to_string();
    }
    nlohmann::json hyp = nlohmann::json::object();
    for (const auto& [name, value] : table.hypotheses()) {
        hyp[name] = value;
    }
    nlohmann::json out;
    out["half_dim"] = table.half_dim();
    out["has_x"] = table.has_x();
    out["k0"] = table.k0() ? nlohmann::json(*table.k0()) : nlohmann::json(nullptr);
    out["hypotheses"] = hyp;
    out["numbers"] = numbers;
    return out;
}

inline CharacteristicTable table_from_json(const nlohmann::json& doc)
{
    auto fail = [](const std::string& why) { return Error(Errc::parse_error, why); };
    if (!doc.is_object()) {
        throw fail("descriptor must be a JSON object");
    }
    for (const char* field : {"half_dim", "has_x", "numbers"}) {
        if (!doc.contains(field)) {
            throw fail(std::string("missing field \"") + field + "\"");
        }
    }
    if (!doc["half_dim"].is_number_integer() || !doc["has_x"].is_boolean() || !doc["numbers"].is_object()) {
        throw fail("half_dim must be an integer, has_x a boolean, numbers an object");
    }
    int n = doc["half_dim"].get<int>();
    if (n < 0) {
        throw Error(Errc::invariant_violation, "half_dim is negative");
    }
    std::optional<long> k0;
    if (doc.contains("k0") && !doc["k0"].is_null()) {
        if (!doc["k0"].is_number_integer()) {
            throw fail("k0 must be an integer or null");
        }
        k0 = doc["k0"].get<long>();
    }
    CharacteristicTable table(n, doc["has_x"].get<bool>(), k0);
    if (doc.contains("hypotheses")) {
        if (!doc["hypotheses"].is_object()) {
            throw fail("hypotheses must be an object of booleans");
        }
        for (const auto& [name, value] : doc["hypotheses"].items()) {
            if (!value.is_boolean()) {
                throw fail("hypothesis \"" + name + "\" is not a boolean");
            }
            table.set_hypothesis(name, value.get<bool>());
        }
    }
    for (const auto& [key, value] : doc["numbers"].items()) {
        Rational number;
        if (value.is_string()) {
            number = Rational::parse(value.get<std::string>());
        } else if (value.is_number_integer()) {
            number = Rational::parse(value.dump());
        } else {
            throw fail("number for \"" + key + "\" must be a rational string or an integer");
        }
        Exponents e = parse_monomial_key(key, n);
        if (table.find(e)) {
            throw fail("monomial \"" + key + "\" appears twice");
        }
        table.set(e, number);
    }
    table.validate();
    return table;
}

inline std::string dump_table(const CharacteristicTable& table)
{
    return table_to_json(table).dump(2) + "\n";
}

inline CharacteristicTable parse_table(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, e.what());
    }
    return table_from_json(doc);
}

inline CharacteristicTable load_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::parse_error, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

inline void save_table(const CharacteristicTable& table, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(Errc::invalid_argument, "cannot write " + path);
    }
    out << dump_table(table);
}

} // namespace hgenus
