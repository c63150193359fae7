#include "diffeo/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffeo/amplitudes.hpp"
#include "diffeo/bell.hpp"
#include "diffeo/diffeoeq.hpp"
#include "diffeo/errors.hpp"
#include "diffeo/json_io.hpp"
#include "diffeo/legendre.hpp"

namespace diffeo::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Orders pinned per suite; --order overrides all of them.
struct SuiteDefaults {
    int bell_identities = 12;
    int bell_oracle = 10;
    int ode = 10;
    int recurrences = 10;
    int smatrix_n = 8;
    int legendre = 10;
    int loday = 8;
    int amplitudes = 6;
    int agreement_tree = 6;
    int agreement_closed = 10;
};

struct RunConfig {
    std::optional<int> order;
    int trials = 20;
    std::uint64_t seed = 42;
    std::map<Indeterminate, Rational> coeffs;
    bool json = false;
};

std::map<Indeterminate, Rational> parse_coeffs(const std::string& list) {
    std::map<Indeterminate, Rational> values;
    std::size_t start = 0;
    while (start < list.size()) {
        auto comma = list.find(',', start);
        if (comma == std::string::npos) comma = list.size();
        const std::string entry = list.substr(start, comma - start);
        const auto equals = entry.find('=');
        if (equals == std::string::npos)
            throw ParseError("coefficient entry '" + entry + "' is not name=value");
        const auto var = Indeterminate::from_name(entry.substr(0, equals));
        if (!var) throw ParseError("unknown coefficient name '" + entry.substr(0, equals) + "'");
        values[*var] = parse_rational(entry.substr(equals + 1));
        start = comma + 1;
    }
    return values;
}

bool option_given(const CLI::App& app, const std::string& name) {
    const CLI::Option* option = app.get_option_no_throw(name);
    return option != nullptr && option->count() > 0;
}

void load_config_file(const std::string& path, const CLI::App& app, RunConfig& config,
                      std::optional<int>& order_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    Json json;
    try {
        in >> json;
    } catch (const Json::exception& e) {
        throw ParseError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    // Explicit command-line flags win over config values.
    if (json.contains("order") && !option_given(app, "--order")) order_override = json["order"].get<int>();
    if (json.contains("trials") && !option_given(app, "--trials")) config.trials = json["trials"].get<int>();
    if (json.contains("seed") && !option_given(app, "--seed")) config.seed = json["seed"].get<std::uint64_t>();
    if (json.contains("output") && !option_given(app, "--json"))
        config.json = json["output"].get<std::string>() == "json";
    if (json.contains("coeffs") && !option_given(app, "--coeffs")) {
        for (const auto& [name, value] : json["coeffs"].items()) {
            const auto var = Indeterminate::from_name(name);
            if (!var) throw ParseError("unknown coefficient name '" + name + "' in config");
            config.coeffs[*var] = parse_rational(value.get<std::string>());
        }
    }
}

void print_report_table(const Report& report, std::ostream& out) {
    std::size_t passed = 0;
    for (const auto& item : report.items) {
        if (item.ok) {
            ++passed;
        } else {
            out << "[FAIL] " << item.name << "\n  lhs: " << item.lhs << "\n  rhs: " << item.rhs << "\n";
        }
    }
    out << "suite " << report.suite << ": " << passed << "/" << report.items.size() << " passed\n";
}

int emit_reports(const std::vector<Report>& reports, bool as_json) {
    bool all_ok = true;
    if (as_json) {
        Json out = Json::array();
        for (const auto& report : reports) {
            out.push_back(report_to_json(report));
            all_ok = all_ok && report.all_ok();
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& report : reports) {
            print_report_table(report, std::cout);
            all_ok = all_ok && report.all_ok();
        }
        std::cout << (all_ok ? "all suites passed" : "FAILURES detected") << "\n";
    }
    return all_ok ? kExitOk : kExitFailure;
}

Report bell_oracle_vs_fast(int n_max) {
    Report report;
    report.suite = "bell-oracle";
    BellArgs args = BellArgs::symbolic(n_max);
    BellTable table(args);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            const Polynomial oracle = bell_oracle(n, k, args);
            const Polynomial& fast = table.fast(n, k);
            report.record("oracle-vs-fast n=" + std::to_string(n) + " k=" + std::to_string(k),
                          oracle == fast, oracle.str(), fast.str());
        }
    return report;
}

std::vector<Report> run_suites(const std::vector<std::string>& suites, const RunConfig& config) {
    const SuiteDefaults defaults;
    const auto order_or = [&](int fallback) { return config.order ? *config.order : fallback; };

    std::vector<Report> reports;
    for (const std::string& suite : suites) {
        if (suite == "genfunc") {
            const int n = order_or(defaults.bell_identities);
            reports.push_back(check_genfunc_definition(n, n));
        } else if (suite == "localization") {
            reports.push_back(check_lemma_localization(order_or(defaults.bell_identities)));
        } else if (suite == "starter") {
            reports.push_back(check_starter(order_or(defaults.bell_identities)));
        } else if (suite == "cvijovic") {
            reports.push_back(check_cvijovic(order_or(defaults.bell_identities)));
        } else if (suite == "bell-oracle") {
            reports.push_back(bell_oracle_vs_fast(order_or(defaults.bell_oracle)));
        } else if (suite == "ode") {
            reports.push_back(check_ode_suite(order_or(defaults.ode)));
        } else if (suite == "recurrences") {
            Report combined = check_recurrence2(order_or(defaults.recurrences));
            combined.suite = "recurrences";
            combined.merge(check_recurrence3(order_or(defaults.recurrences)));
            reports.push_back(std::move(combined));
        } else if (suite == "smatrix") {
            reports.push_back(check_smatrix(5, order_or(defaults.smatrix_n)));
        } else if (suite == "legendre") {
            Report combined = check_legendre_b_relation(order_or(defaults.legendre));
            combined.merge(check_loday_vs_invert(order_or(defaults.loday)));
            reports.push_back(std::move(combined));
        } else if (suite == "amplitudes") {
            // Tree enumeration grows like the total-partition numbers, so the
            // tree-based checks never run above their pinned bounds; --order
            // may lower them and still raises the inversion-route bound.
            const int independence = std::min(order_or(defaults.amplitudes), defaults.amplitudes);
            const int tree = std::min(order_or(defaults.agreement_tree), defaults.agreement_tree);
            const int closed = std::max(order_or(defaults.agreement_closed), tree);
            Report combined = check_amplitude_independence(independence, config.trials, config.seed);
            combined.merge(check_b_agreement(tree, closed, config.seed));
            reports.push_back(std::move(combined));
        } else {
            throw ParseError("unknown suite '" + suite + "'");
        }
    }
    return reports;
}

const std::vector<std::string> kAllSuites = {"genfunc",     "localization", "starter",
                                             "cvijovic",    "bell-oracle",  "ode",
                                             "recurrences", "smatrix",      "legendre",
                                             "amplitudes"};

struct BnResult {
    Polynomial poly;
    bool sampled = false;
    bool point_independent = true;
};

BnResult compute_bn(int n, const std::string& method, int trials, std::uint64_t seed) {
    // Tree enumeration grows like the total-partition numbers; keep the
    // explicit routes inside desk-scale bounds.
    if (method == "direct" && n > 7)
        throw ParseError("--method direct supports n <= 7 (tree count grows too fast beyond)");
    if (method == "recurrence" && n > 9)
        throw ParseError("--method recurrence supports n <= 9");
    BnResult result;
    const Diffeomorphism diffeo = Diffeomorphism::symbolic(n + 1);
    if (method == "closed") {
        result.poly = b_closed(n, diffeo);
    } else if (method == "inverse") {
        result.poly = b_inverse(n, diffeo);
    } else if (method == "direct" || method == "recurrence") {
        result.sampled = true;
        const FeynmanRules rules{diffeo};
        SplitMix64 rng(seed);
        for (int trial = 0; trial < trials; ++trial) {
            const KinematicPoint point = sample_kinematic_point(std::max(n, 2), rng);
            const Polynomial value = method == "direct" ? b_direct(n, rules, point)
                                                        : b_recurrence(n, rules, point);
            if (trial == 0)
                result.poly = value;
            else if (!(value == result.poly))
                result.point_independent = false;
        }
    } else {
        throw ParseError("unknown method '" + method + "'");
    }
    return result;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Exact tree amplitudes, Bell identities and series inversion for field diffeomorphisms"};
    app.require_subcommand(1);

    RunConfig config;
    std::string config_path, coeffs_spec;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON file with defaults for order/trials/seed/coeffs/output");
        cmd->add_option("--coeffs", coeffs_spec, "Substitutions, e.g. a1=2,a2=1/3");
        cmd->add_flag("--json", config.json, "Emit JSON instead of plain text");
        cmd->add_option("--trials", config.trials, "Kinematic sample count")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", config.seed, "PRNG seed (SplitMix64)");
    };

    // bn: one coefficient of the one-off-shell-edge tree series
    auto* bn_cmd = app.add_subcommand("bn", "Compute b_n by the chosen route");
    int bn_n = 3;
    std::string bn_method = "closed";
    bn_cmd->add_option("--n", bn_n, "Index n >= 1")->required()->check(CLI::Range(1, 12));
    bn_cmd->add_option("--method", bn_method, "direct | recurrence | closed | inverse")
        ->check(CLI::IsMember({"direct", "recurrence", "closed", "inverse"}));
    add_common(bn_cmd);

    // bell: one partial Bell polynomial, plus its verification suites
    auto* bell_cmd = app.add_subcommand("bell", "Partial Bell polynomial B_{n,k}");
    int bell_n = 0, bell_k = 0;
    std::string bell_subst;
    bell_cmd->add_option("--n", bell_n, "n >= 0")->check(CLI::Range(0, 30));
    bell_cmd->add_option("--k", bell_k, "k >= 0")->check(CLI::Range(0, 30));
    bell_cmd->add_option("--subst", bell_subst, "Substitutions, e.g. x1=1,x2=1/2");
    bell_cmd->add_flag("--json", config.json, "Emit JSON instead of plain text");

    auto* bell_verify = bell_cmd->add_subcommand("verify", "Run a Bell identity suite");
    std::string bell_suite = "genfunc";
    int bell_nmax = 12;
    bell_verify->add_option("--suite", bell_suite, "genfunc | localization | starter | cvijovic")
        ->check(CLI::IsMember({"genfunc", "localization", "starter", "cvijovic"}));
    bell_verify->add_option("--nmax", bell_nmax, "Largest n checked")->check(CLI::Range(0, 16));
    bell_verify->add_flag("--json", config.json, "Emit JSON instead of plain text");

    // verify: any suite or all of them
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    std::string verify_suite = "all";
    verify_cmd
        ->add_option("--suite", verify_suite,
                     "all | genfunc | localization | starter | cvijovic | bell-oracle | ode | "
                     "recurrences | smatrix | legendre | amplitudes")
        ->check(CLI::IsMember({"all", "genfunc", "localization", "starter", "cvijovic", "bell-oracle",
                               "ode", "recurrences", "smatrix", "legendre", "amplitudes"}));
    int verify_order = 0;
    verify_cmd->add_option("--order", verify_order, "Override every suite's default order")
        ->check(CLI::Range(1, 16));
    add_common(verify_cmd);

    // inverse: compositional inverse series of the diffeomorphism
    auto* inverse_cmd = app.add_subcommand("inverse", "Series inverse of the diffeomorphism");
    int inverse_order = 8;
    std::string inverse_kind = "egf";
    inverse_cmd->add_option("--order", inverse_order, "Truncation order")->check(CLI::Range(1, 14));
    inverse_cmd->add_option("--kind", inverse_kind, "egf | ogf")->check(CLI::IsMember({"egf", "ogf"}));
    add_common(inverse_cmd);

    // legendre: transform coefficients plus the b-relation report
    auto* legendre_cmd = app.add_subcommand("legendre", "Combinatorial Legendre transform of the action");
    int legendre_order = 8;
    legendre_cmd->add_option("--order", legendre_order, "Truncation order")->check(CLI::Range(2, 14));
    add_common(legendre_cmd);

    // smatrix: w and W coefficients of the interacting theory
    auto* smatrix_cmd = app.add_subcommand("smatrix", "Interaction-vertex amplitudes w and W");
    int smatrix_s = 3, smatrix_n = 3;
    smatrix_cmd->add_option("--s", smatrix_s, "Interaction order s >= 3")->check(CLI::Range(3, 10));
    smatrix_cmd->add_option("--n", smatrix_n, "External leg count n")->check(CLI::Range(0, 12));
    add_common(smatrix_cmd);

    // export: any of the named series in the JSON wire format
    auto* export_cmd = app.add_subcommand("export", "Write a series as JSON");
    std::string export_series = "inverse", export_kind = "ogf", export_out;
    int export_order = 8;
    export_cmd->add_option("--series", export_series, "inverse | diffeo | p | q | legendre")
        ->check(CLI::IsMember({"inverse", "diffeo", "p", "q", "legendre"}));
    export_cmd->add_option("--kind", export_kind, "egf | ogf")->check(CLI::IsMember({"egf", "ogf"}));
    export_cmd->add_option("--order", export_order, "Truncation order")->check(CLI::Range(1, 14));
    export_cmd->add_option("--out", export_out, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        std::optional<int> config_order;
        if (!config_path.empty()) load_config_file(config_path, *active, config, config_order);
        if (!coeffs_spec.empty()) config.coeffs = parse_coeffs(coeffs_spec);
        const auto substituted = [&](const Polynomial& p) { return p.substitute(config.coeffs); };

        if (bn_cmd->parsed()) {
            const BnResult result = compute_bn(bn_n, bn_method, config.trials, config.seed);
            const Polynomial poly = substituted(result.poly);
            if (config.json) {
                Json out{{"n", bn_n}, {"method", bn_method}, {"poly", poly.str()}};
                if (result.sampled) {
                    out["trials"] = config.trials;
                    out["point_independent"] = result.point_independent;
                }
                std::cout << out.dump() << "\n";
            } else {
                std::cout << poly.str() << "\n";
            }
            if (result.sampled && !result.point_independent) {
                std::cerr << "error: b_" << bn_n << " varied across sampled kinematic points\n";
                return kExitFailure;
            }
            return kExitOk;
        }

        if (bell_verify->parsed()) {
            std::vector<Report> reports;
            if (bell_suite == "genfunc") reports.push_back(check_genfunc_definition(bell_nmax, bell_nmax));
            if (bell_suite == "localization") reports.push_back(check_lemma_localization(bell_nmax));
            if (bell_suite == "starter") reports.push_back(check_starter(bell_nmax));
            if (bell_suite == "cvijovic") reports.push_back(check_cvijovic(bell_nmax));
            return emit_reports(reports, config.json);
        }

        if (bell_cmd->parsed()) {
            const auto subst = bell_subst.empty() ? std::map<Indeterminate, Rational>{}
                                                  : parse_coeffs(bell_subst);
            const Polynomial poly =
                bell_fast(bell_n, bell_k, BellArgs::symbolic(std::max(bell_n - bell_k + 1, 1)))
                    .substitute(subst);
            if (config.json)
                std::cout << Json{{"n", bell_n}, {"k", bell_k}, {"poly", poly.str()}}.dump() << "\n";
            else
                std::cout << poly.str() << "\n";
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            if (verify_order > 0)
                config.order = verify_order;
            else if (config_order)
                config.order = config_order;
            const std::vector<std::string> suites =
                verify_suite == "all" ? kAllSuites : std::vector<std::string>{verify_suite};
            return emit_reports(run_suites(suites, config), config.json);
        }

        if (inverse_cmd->parsed()) {
            if (config_order && !option_given(*inverse_cmd, "--order")) inverse_order = *config_order;
            const Diffeomorphism diffeo = Diffeomorphism::symbolic(inverse_order);
            Series inverse = invert(series_from_diffeo(diffeo));
            if (inverse_kind == "egf") inverse = inverse.to_kind(SeriesKind::EGF);
            Series out(inverse.kind(), inverse.order());
            for (int n = 0; n <= inverse.order(); ++n) out.set_coeff(n, substituted(inverse.coeff(n)));
            if (config.json) {
                std::cout << series_to_json(out).dump(2) << "\n";
            } else {
                for (int n = 1; n <= out.order(); ++n)
                    std::cout << (inverse_kind == "egf" ? "b_" : "r_") << n << " = "
                              << out.coeff(n).str() << "\n";
            }
            return kExitOk;
        }

        if (legendre_cmd->parsed()) {
            if (config_order && !option_given(*legendre_cmd, "--order")) legendre_order = *config_order;
            const Diffeomorphism diffeo = Diffeomorphism::symbolic(legendre_order);
            const Series transform =
                legendre_transform(build_A(diffeo, legendre_order), legendre_order);
            const Report report = check_legendre_b_relation(legendre_order);
            if (config.json) {
                Json out{{"order", legendre_order},
                         {"series", series_to_json(transform)},
                         {"report", report_to_json(report)}};
                std::cout << out.dump(2) << "\n";
            } else {
                for (int n = 2; n <= transform.order(); ++n)
                    std::cout << "L_" << n << " = " << substituted(transform.coeff(n)).str() << "\n";
                print_report_table(report, std::cout);
            }
            return report.all_ok() ? kExitOk : kExitFailure;
        }

        if (smatrix_cmd->parsed()) {
            const InteractingTheory theory = InteractingTheory::symbolic(std::max(smatrix_s, 3),
                                                                         std::max(smatrix_n, smatrix_s) + 1);
            const Polynomial w = substituted(w_coeff(theory, smatrix_s, smatrix_n));
            const Polynomial W = substituted(W_coeff(theory, smatrix_s, smatrix_n));
            if (config.json)
                std::cout << Json{{"s", smatrix_s}, {"n", smatrix_n}, {"w", w.str()}, {"W", W.str()}}.dump()
                          << "\n";
            else
                std::cout << "w = " << w.str() << "\nW = " << W.str() << "\n";
            return kExitOk;
        }

        if (export_cmd->parsed()) {
            const Diffeomorphism diffeo = Diffeomorphism::symbolic(export_order);
            Series series = [&] {
                if (export_series == "inverse") return invert(series_from_diffeo(diffeo));
                if (export_series == "diffeo") return series_from_diffeo(diffeo);
                if (export_series == "p") return build_pq(diffeo, export_order).p;
                if (export_series == "q") return build_pq(diffeo, export_order).q;
                return legendre_transform(build_A(diffeo, std::max(export_order, 2)),
                                          std::max(export_order, 2));
            }();
            if (export_kind == "egf") series = series.to_kind(SeriesKind::EGF);
            if (export_kind == "ogf") series = series.to_kind(SeriesKind::OGF);
            const Json json = series_to_json(series);
            if (export_out.empty()) {
                std::cout << json.dump(2) << "\n";
            } else {
                std::ofstream out(export_out);
                if (!out) throw ParseError("cannot open output file '" + export_out + "'");
                out << json.dump(2) << "\n";
            }
            return kExitOk;
        }

        std::cerr << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace diffeo::cli
