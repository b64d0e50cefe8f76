#pragma once

// Text and JSON renderings of HattoriReport. JSON carries every rational as
// an exact string and parses back into an equal report.

#include <sstream>
#include <string>

#include <json.hpp>

#include "error.hpp"
#include "vanishing.hpp"

namespace hgenus {

inline nlohmann::json report_to_json(const HattoriReport& report)
{
    using nlohmann::json;
    auto strings = [](const std::vector<Rational>& v) {
        json arr = json::array();
        for (const auto& r : v) {
            arr.push_back(r.to_string());
        }
        return arr;
    };
    json out;
    out["mode"] = report.mode;
    out["instance"] = {{"n", report.instance.n},
                       {"k0", report.instance.k0},
                       {"parity", report.instance.parity},
                       {"unknown_count", report.instance.unknown_count}};
    out["admissible_ks"] = report.admissible_ks;
    json matrix = json::array();
    for (const auto& row : report.matrix) {
        matrix.push_back(strings(row));
    }
    out["matrix"] = matrix;
    out["determinant"] = report.determinant.to_string();
    json hyp = json::object();
    for (const auto& [name, value] : report.hypotheses) {
        hyp[name] = value;
    }
    out["hypotheses"] = hyp;
    out["hypotheses_status"] = "assumed, not verified";
    json relations = json::array();
    for (const auto& r : report.relations) {
        relations.push_back({{"k", r.k}, {"value", r.value.to_string()}});
    }
    out["relations"] = relations;
    json conclusions = json::array();
    for (const auto& c : report.conclusions) {
        json entry;
        entry["statement"] = c.statement;
        entry["status"] = status_name(c.status);
        entry["residual"] = c.residual ? json(c.residual->to_string()) : json(nullptr);
        entry["route_difference"] = c.route_difference ? json(c.route_difference->to_string()) : json(nullptr);
        entry["combination"] = strings(c.combination);
        conclusions.push_back(entry);
    }
    out["conclusions"] = conclusions;
    return out;
}

inline HattoriReport report_from_json(const nlohmann::json& doc)
{
    HattoriReport report;
    try {
        auto rationals = [](const nlohmann::json& arr) {
            std::vector<Rational> v;
            for (const auto& s : arr) {
                v.push_back(Rational::parse(s.get<std::string>()));
            }
            return v;
        };
        auto optional_rational = [](const nlohmann::json& j) -> std::optional<Rational> {
            if (j.is_null()) {
                return std::nullopt;
            }
            return Rational::parse(j.get<std::string>());
        };
        report.mode = doc.at("mode").get<std::string>();
        const auto& inst = doc.at("instance");
        report.instance = HattoriInstance{inst.at("n").get<int>(), inst.at("k0").get<long>(), inst.at("parity").get<int>(),
                                          inst.at("unknown_count").get<int>()};
        report.admissible_ks = doc.at("admissible_ks").get<std::vector<long>>();
        for (const auto& row : doc.at("matrix")) {
            report.matrix.push_back(rationals(row));
        }
        report.determinant = Rational::parse(doc.at("determinant").get<std::string>());
        for (const auto& [name, value] : doc.at("hypotheses").items()) {
            report.hypotheses[name] = value.get<bool>();
        }
        for (const auto& r : doc.at("relations")) {
            report.relations.push_back({r.at("k").get<long>(), Rational::parse(r.at("value").get<std::string>())});
        }
        for (const auto& c : doc.at("conclusions")) {
            Conclusion conclusion;
            conclusion.statement = c.at("statement").get<std::string>();
            conclusion.status = parse_status(c.at("status").get<std::string>());
            conclusion.residual = optional_rational(c.at("residual"));
            conclusion.route_difference = optional_rational(c.at("route_difference"));
            conclusion.combination = rationals(c.at("combination"));
            report.conclusions.push_back(std::move(conclusion));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("malformed report: ") + e.what());
    }
    return report;
}

inline std::string render_report_text(const HattoriReport& report)
{
    std::ostringstream out;
    const auto& inst = report.instance;
    out << "mode: " << report.mode << "\n";
    out << "instance: n = " << inst.n << ", k0 = " << inst.k0 << ", parity = " << inst.parity
        << ", unknowns = " << inst.unknown_count << "\n";
    out << "admissible k:";
    for (long k : report.admissible_ks) {
        out << ' ' << k;
    }
    out << "\nmatrix:\n";
    for (const auto& row : report.matrix) {
        out << "  [";
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << (j ? ", " : "") << row[j];
        }
        out << "]\n";
    }
    out << "determinant: " << report.determinant << "\n";
    if (!report.hypotheses.empty()) {
        out << "hypotheses (assumed, not verified):";
        for (const auto& [name, value] : report.hypotheses) {
            out << ' ' << name << '=' << (value ? "true" : "false");
        }
        out << "\n";
    }
    if (!report.relations.empty()) {
        out << "relations:\n";
        for (const auto& r : report.relations) {
            out << "  k = " << r.k << ": " << r.value << "\n";
        }
    }
    out << "conclusions:\n";
    for (const auto& c : report.conclusions) {
        out << "  [" << status_name(c.status) << "] " << c.statement;
        if (c.residual) {
            out << "  residual " << *c.residual;
        }
        if (c.route_difference && !c.route_difference->is_zero()) {
            out << "  route difference " << *c.route_difference;
        }
        out << "\n";
    }
    out << "result: " << (report.all_pass() ? "pass" : "FAIL") << "\n";
    return out.str();
}

} // namespace hgenus
