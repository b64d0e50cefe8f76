#pragma once

// Command-line front end. run_cli() is the whole program; main() only binds
// it to the process streams so the tests can drive it in-process.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or input error.

#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgenus/hgenus.hpp"

namespace hgenus::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct Context {
    std::ostream& out;
    std::ostream& err;
};

namespace detail {

inline std::string format_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline std::optional<long> opt_k(long k) { return k == 0 ? std::nullopt : std::optional<long>(k); }

inline PowerSeries named_series(const std::string& name, std::optional<long> k, int order)
{
    if (name == "todd") {
        return todd_series(order);
    }
    if (name == "ahat") {
        return ahat_series(order);
    }
    if (name == "L") {
        return l_series(order);
    }
    if (name == "a_k" || name == "a_recip_k") {
        if (!k) {
            throw Error(Errc::bad_k, name + " needs --k");
        }
        return name == "a_k" ? ak_series(*k, order) : a_recip_k_series(*k, order);
    }
    throw Error(Errc::invalid_argument, "unknown series \"" + name + "\"");
}

struct Check {
    std::string label;
    bool holds;
    std::string witness;
};

inline std::string series_witness(const PowerSeries& s)
{
    return s == PowerSeries(s.order()) ? "0" : s.to_string();
}

inline std::vector<std::function<Check()>> identity_checks(const std::string& identity, int n, long k, long kmax, int order,
                                                           bool all)
{
    std::vector<std::function<Check()>> checks;
    auto want = [&](const char* name) { return all || identity == name; };
    if (want("todd-decomposition")) {
        int lo = all ? 1 : n;
        for (int nn = lo; nn <= n; ++nn) {
            for (int kk = 1; kk <= nn; ++kk) {
                checks.emplace_back([kk, nn] {
                    auto r = verify_todd_decomposition(kk, nn);
                    return Check{"todd-decomposition k=" + std::to_string(kk) + " n=" + std::to_string(nn), r.holds,
                                 r.witness.to_string()};
                });
            }
        }
    }
    if (want("exp-identity")) {
        long lo = all ? 2 : k;
        long hi = all ? kmax : k;
        for (long kk = lo; kk <= hi; ++kk) {
            checks.emplace_back([kk, order] {
                auto r = verify_exp_identity(kk, order);
                return Check{"exp-identity k=" + std::to_string(kk) + " order=" + std::to_string(order), r.holds,
                             series_witness(r.witness)};
            });
        }
    }
    if (want("ak-scaling")) {
        long lo = all ? 2 : k;
        long hi = all ? kmax : k;
        for (long kk = lo; kk <= hi; ++kk) {
            for (int nn = all ? 1 : n; nn <= n; ++nn) {
                checks.emplace_back([kk, nn] {
                    auto r = verify_ak_scaling(kk, nn);
                    return Check{"ak-scaling k=" + std::to_string(kk) + " n=" + std::to_string(nn), r.holds,
                                 r.witness.to_string()};
                });
            }
        }
    }
    if (want("a2-ahat")) {
        for (int nn = all ? 1 : n; nn <= n; ++nn) {
            checks.emplace_back([nn] {
                auto r = verify_a2_is_ahat(nn);
                std::string w = r.witness.to_string();
                if (!(r.series_witness == PowerSeries(r.series_witness.order()))) {
                    w += "; series " + r.series_witness.to_string();
                }
                return Check{"a2-ahat n=" + std::to_string(nn), r.holds, w};
            });
        }
    }
    if (want("a-sequence")) {
        for (int s = all ? 1 : n; s <= n; ++s) {
            checks.emplace_back([s] {
                auto r = verify_a_sequence_relation(s);
                return Check{"a-sequence s=" + std::to_string(s), r.holds, r.witness.to_string()};
            });
        }
    }
    if (want("a1-todd")) {
        checks.emplace_back([order] {
            auto r = verify_a1_is_todd(order);
            return Check{"a1-todd order=" + std::to_string(order), r.holds, series_witness(r.witness)};
        });
    }
    return checks;
}

inline CharacteristicTable table_from_flags(int cp, const std::string& hypersurface, const std::string& manifest)
{
    int given = (cp > 0) + !hypersurface.empty() + !manifest.empty();
    if (given != 1) {
        throw Error(Errc::invalid_argument, "give exactly one of --cp, --hypersurface, --manifest");
    }
    if (cp > 0) {
        return cp_table(cp);
    }
    if (!hypersurface.empty()) {
        auto comma = hypersurface.find(',');
        if (comma == std::string::npos) {
            throw Error(Errc::invalid_argument, "--hypersurface takes N,D");
        }
        try {
            return hypersurface_table(std::stoi(hypersurface.substr(0, comma)), std::stoi(hypersurface.substr(comma + 1)));
        } catch (const std::logic_error&) {
            throw Error(Errc::invalid_argument, "--hypersurface takes N,D");
        }
    }
    return load_table(manifest);
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact multiplicative sequences, genera and the Vandermonde vanishing engine", "hgenus"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    int status = exit_ok;
    std::function<void()> action;

    // series
    auto* series = app.add_subcommand("series", "Print coefficients of a characteristic series");
    std::string series_name;
    long series_k = 0;
    int series_order = 8;
    series->add_option("name", series_name, "todd | ahat | L | a_k | a_recip_k")->required();
    series->add_option("--k", series_k, "k for the a_k families");
    series->add_option("--order", series_order, "Truncation order")->required();
    series->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    series->callback([&] {
        action = [&] {
            PowerSeries s = detail::named_series(series_name, detail::opt_k(series_k), series_order);
            if (format == "json") {
                nlohmann::json j;
                j["series"] = series_name;
                j["k"] = series_k ? nlohmann::json(series_k) : nlohmann::json(nullptr);
                j["order"] = series_order;
                j["coefficients"] = nlohmann::json::array();
                for (const auto& c : s.coefficients()) {
                    j["coefficients"].push_back(c.to_string());
                }
                out << detail::format_json(j);
                return;
            }
            for (int m = 0; m <= s.order(); ++m) {
                out << "a_" << m << " = " << s[m] << "\n";
            }
        };
    });

    // sequence
    auto* sequence = app.add_subcommand("sequence", "Print K_1..K_n of a multiplicative sequence");
    std::string seq_name;
    long seq_k = 0;
    int seq_n = 0;
    std::string seq_grading;
    sequence->add_option("name", seq_name, "todd | ahat | L | a_k | a_recip_k")->required();
    sequence->add_option("--n", seq_n, "Number of terms")->required();
    sequence->add_option("--k", seq_k, "k for the a_k families");
    sequence->add_option("--grading", seq_grading, "chern | pontrjagin (default: natural grading of the genus)")
        ->check(CLI::IsMember({"chern", "pontrjagin"}));
    sequence->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    sequence->callback([&] {
        action = [&] {
            GenusSpec spec = GenusSpec::from_name(seq_name, detail::opt_k(seq_k));
            std::optional<Grading> grading;
            if (!seq_grading.empty()) {
                grading = seq_grading == "chern" ? Grading::chern : Grading::pontrjagin;
            }
            MultiplicativeSequence seq = spec.sequence(seq_n, grading);
            if (format == "json") {
                nlohmann::json j;
                j["genus"] = spec.name();
                j["grading"] = grading_name(seq.ring.grading);
                j["terms"] = nlohmann::json::array();
                for (int m = 1; m <= seq_n; ++m) {
                    j["terms"].push_back({{"m", m}, {"polynomial", seq[m].to_string()}});
                }
                out << detail::format_json(j);
                return;
            }
            for (int m = 1; m <= seq_n; ++m) {
                out << spec.symbol() << "_" << m << " = " << seq[m].to_string() << "\n";
            }
        };
    });

    // genus
    auto* genus = app.add_subcommand("genus", "Evaluate a genus on a manifold descriptor");
    std::string genus_name;
    long genus_k = 0;
    int genus_cp = 0;
    std::string genus_hyper;
    std::string genus_manifest;
    genus->add_option("name", genus_name, "todd | ahat | L | a_k | a_recip_k")->required();
    genus->add_option("--k", genus_k, "k for the a_k families");
    genus->add_option("--cp", genus_cp, "Built-in CP^n");
    genus->add_option("--hypersurface", genus_hyper, "Built-in degree-D hypersurface of complex dimension N, as N,D");
    genus->add_option("--manifest", genus_manifest, "Manifold descriptor JSON");
    genus->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    genus->callback([&] {
        action = [&] {
            CharacteristicTable table = detail::table_from_flags(genus_cp, genus_hyper, genus_manifest);
            GenusSpec spec = GenusSpec::from_name(genus_name, detail::opt_k(genus_k));
            Rational value = evaluate_genus(table, spec);
            if (format == "json") {
                out << detail::format_json({{"genus", spec.name()}, {"half_dim", table.half_dim()}, {"value", value.to_string()}});
                return;
            }
            out << value << "\n";
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Check the identities between genera symbolically");
    std::string identity;
    bool verify_all = false;
    int verify_n = 3;
    long verify_k = 2;
    long verify_kmax = 6;
    int verify_order = 12;
    verify->add_option("identity", identity, "todd-decomposition | exp-identity | ak-scaling | a2-ahat | a-sequence | a1-todd")
        ->check(CLI::IsMember({"todd-decomposition", "exp-identity", "ak-scaling", "a2-ahat", "a-sequence", "a1-todd"}));
    verify->add_flag("--all", verify_all, "Run every identity up to the given bounds");
    verify->add_option("--n", verify_n, "Dimension bound");
    verify->add_option("--k", verify_k, "k for single-k identities");
    verify->add_option("--kmax", verify_kmax, "Largest k for --all");
    verify->add_option("--order", verify_order, "Series order");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] {
        action = [&] {
            if (verify_all == !identity.empty()) {
                throw Error(Errc::invalid_argument, "give an identity name or --all");
            }
            auto checks = detail::identity_checks(identity, verify_n, verify_k, verify_kmax, verify_order, verify_all);
            std::vector<std::future<detail::Check>> pending;
            for (auto& check : checks) {
                pending.push_back(std::async(std::launch::async, check));
            }
            std::vector<detail::Check> results;
            for (auto& f : pending) {
                results.push_back(f.get());
            }
            int failed = 0;
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : results) {
                failed += r.holds ? 0 : 1;
                if (format == "json") {
                    j.push_back({{"check", r.label}, {"holds", r.holds}, {"witness", r.witness}});
                } else {
                    out << (r.holds ? "PASS " : "FAIL ") << r.label << "  witness " << r.witness << "\n";
                }
            }
            if (format == "json") {
                out << detail::format_json({{"checks", j}, {"failed", failed}});
            } else {
                out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " identities hold\n";
            }
            status = failed ? exit_failed : exit_ok;
        };
    });

    // hattori
    auto* hattori = app.add_subcommand("hattori", "Run the Vandermonde vanishing engine");
    int hat_n = 0;
    long hat_k0 = 0;
    std::string hat_manifest;
    long hat_max_k = 4;
    auto* n_opt = hattori->add_option("--n", hat_n, "Half dimension (symbolic mode)");
    auto* k0_opt = hattori->add_option("--k0", hat_k0, "c_1 = k0 x (symbolic mode)");
    auto* manifest_opt = hattori->add_option("--manifest", hat_manifest, "Descriptor to check (numeric mode)");
    hattori->add_option("--max-k", hat_max_k, "Largest k for the A_k checks in numeric mode");
    hattori->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    n_opt->needs(k0_opt);
    k0_opt->needs(n_opt);
    manifest_opt->excludes(n_opt)->excludes(k0_opt);
    hattori->callback([&] {
        action = [&] {
            HattoriReport report;
            if (!hat_manifest.empty()) {
                report = check_theorem(load_table(hat_manifest), hat_max_k);
            } else if (*n_opt) {
                report = solve_vanishing(hat_n, hat_k0);
            } else {
                throw Error(Errc::invalid_argument, "give --n and --k0, or --manifest");
            }
            out << (format == "json" ? detail::format_json(report_to_json(report)) : render_report_text(report));
            status = report.all_pass() ? exit_ok : exit_failed;
        };
    });

    // mk-manifold
    auto* mk = app.add_subcommand("mk-manifold", "Write a manifold descriptor");
    std::string mk_kind;
    std::vector<std::string> mk_params;
    int mk_n = 0;
    long mk_k0 = 0;
    std::uint64_t mk_seed = 1;
    std::string mk_out;
    mk->add_option("kind", mk_kind, "cp | hypersurface | product | synthetic")
        ->required()
        ->check(CLI::IsMember({"cp", "hypersurface", "product", "synthetic"}));
    mk->add_option("params", mk_params, "cp N | hypersurface N D | product A.json B.json");
    mk->add_option("--n", mk_n, "Half dimension (synthetic)");
    mk->add_option("--k0", mk_k0, "k0 (synthetic)");
    mk->add_option("--seed", mk_seed, "Seed (synthetic)");
    mk->add_option("--out", mk_out, "Output path (default: stdout)");
    mk->callback([&] {
        action = [&] {
            auto int_param = [&](std::size_t i) {
                try {
                    return std::stoi(mk_params.at(i));
                } catch (const std::exception&) {
                    throw Error(Errc::invalid_argument, "mk-manifold " + mk_kind + ": bad or missing parameter " + std::to_string(i + 1));
                }
            };
            auto expect_params = [&](std::size_t count) {
                if (mk_params.size() != count) {
                    throw Error(Errc::invalid_argument, "mk-manifold " + mk_kind + " takes " + std::to_string(count) + " parameters");
                }
            };
            std::optional<CharacteristicTable> table;
            if (mk_kind == "cp") {
                expect_params(1);
                table = cp_table(int_param(0));
            } else if (mk_kind == "hypersurface") {
                expect_params(2);
                table = hypersurface_table(int_param(0), int_param(1));
            } else if (mk_kind == "product") {
                expect_params(2);
                table = product_table(load_table(mk_params[0]), load_table(mk_params[1]));
            } else {
                expect_params(0);
                table = synthesize_consistent_table(mk_n, mk_k0, mk_seed);
            }
            if (mk_out.empty()) {
                out << dump_table(*table);
            } else {
                save_table(*table, mk_out);
            }
        };
    });

    std::vector<const char*> argv{"hgenus"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    try {
        if (action) {
            action();
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
    return status;
}

} // namespace hgenus::cli
