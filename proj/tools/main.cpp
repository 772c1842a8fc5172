// Command-line surface: every library operation behind one binary with
// deterministic text or JSON output. Exit codes: 0 success, 1 identity
// violation (a failed verify suite or --check), 2 usage or input errors.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polyenum/io.hpp"
#include "polyenum/verify.hpp"

namespace {

using namespace polyenum;
using nlohmann::ordered_json;

ordered_json poly_json(const MultiPoly& p, const std::string& prefix) {
    return ordered_json::parse(poly_to_json_text(p, prefix));
}

void print_json(bool ok, const ordered_json& result) {
    ordered_json out;
    out["ok"] = ok;
    out["result"] = result;
    std::cout << out.dump() << "\n";
}

ordered_json report_json(const VerifyReport& r) {
    ordered_json j;
    j["suite"] = r.suite;
    j["ok"] = r.ok;
    j["checks"] = r.checks;
    j["lines"] = r.lines;
    j["counterexample"] = r.counterexample;
    return j;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "fixed-colorings") return verify_fixed_colorings(opts);
    if (name == "weighted-stabilizer") return verify_weighted_stabilizer(opts);
    if (name == "weighted-partition") return verify_weighted_partition(opts);
    if (name == "esym") return verify_esym(opts);
    if (name == "det") return verify_det(opts);
    throw validation_error("unknown verify suite '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cycle-index enumeration, weighted variants, and determinants"};
    app.require_subcommand(1);

    std::string group_spec;
    std::string format = "text";
    std::string weights_csv;
    std::string delta_spec;
    std::string matrix_path;
    std::uint64_t group_cap = kDefaultGroupCap;
    int colors = 0;
    int esym_n = 0;
    int esym_m = 0;
    bool check = false;
    std::string suite;
    VerifyOptions vopts;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    const auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", group_spec, "named group (sym:3, alt:4, cyclic:5, "
                                               "dihedral:4, trivial:2) or group JSON file")
            ->required();
        cmd->add_option("--group-cap", group_cap, "largest allowed group order");
    };

    auto* ci_cmd = app.add_subcommand("cycle-index",
                                      "cycle index polynomial of a permutation group");
    add_group(ci_cmd);
    add_format(ci_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate",
                                        "generating function of colorings per orbit");
    add_group(enum_cmd);
    enum_cmd->add_option("--colors", colors, "number of colors m")->required();
    enum_cmd->add_option("--weights", weights_csv,
                         "evaluate at comma-separated rational weights instead");
    add_format(enum_cmd);

    auto* ext_cmd = app.add_subcommand("extended",
                                       "delta-weighted generating function");
    add_group(ext_cmd);
    ext_cmd->add_option("--colors", colors, "number of colors m")->required();
    ext_cmd->add_option("--delta", delta_spec, "uniform | sign | @file.json")->required();
    add_format(ext_cmd);

    auto* esym_cmd = app.add_subcommand("esym",
                                        "elementary symmetric polynomial via the signed "
                                        "cycle index");
    esym_cmd->add_option("--n", esym_n, "degree of the polynomial")->required();
    esym_cmd->add_option("--m", esym_m, "number of variables")->required();
    esym_cmd->add_flag("--check", check, "verify against the direct subset expansion");
    add_format(esym_cmd);

    auto* det_cmd = app.add_subcommand("det", "determinant from traces of matrix powers");
    det_cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    det_cmd->add_flag("--check", check, "verify against Bareiss elimination");
    add_format(det_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "randomized identity suites");
    verify_cmd
        ->add_option("--suite", suite,
                     "fixed-colorings | weighted-stabilizer | weighted-partition | esym | det | all")
        ->required()
        ->check(CLI::IsMember({"fixed-colorings", "weighted-stabilizer", "weighted-partition", "esym", "det", "all"}));
    verify_cmd->add_option("--max-n", vopts.max_n, "largest point-set size");
    verify_cmd->add_option("--max-m", vopts.max_m, "largest color count");
    verify_cmd->add_option("--triples", vopts.triples, "random (G, delta, m) triples");
    verify_cmd->add_option("--seed", vopts.seed, "seed for all randomized draws");
    verify_cmd->add_option("--max-colorings", vopts.caps.max_colorings,
                           "cap on m^n sweeps");
    verify_cmd->add_option("--max-operations", vopts.caps.max_operations,
                           "cap on group-times-coloring work");
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const bool json = format == "json";
    try {
        if (app.got_subcommand(ci_cmd)) {
            const auto z = cycle_index(resolve_group(group_spec, group_cap));
            if (json)
                print_json(true, poly_json(z.poly, "t"));
            else
                std::cout << z.poly.to_text("t") << "\n";
            return 0;
        }
        if (app.got_subcommand(enum_cmd)) {
            const auto g = resolve_group(group_spec, group_cap);
            const auto gf = polya_enumerate(g, colors);
            if (!weights_csv.empty()) {
                const auto weights = parse_rat_list(weights_csv);
                if (static_cast<int>(weights.size()) != colors)
                    throw validation_error("need exactly one weight per color");
                const Rat value = gf.poly.eval(weights);
                if (json)
                    print_json(true, ordered_json{{"value", rat_to_string(value)}});
                else
                    std::cout << rat_to_string(value) << "\n";
            } else if (json) {
                print_json(true, poly_json(gf.poly, "w"));
            } else {
                std::cout << gf.poly.to_text("w") << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(ext_cmd)) {
            const auto g = resolve_group(group_spec, group_cap);
            const auto gf = extended_enumerate(g, resolve_delta(delta_spec), colors);
            if (json)
                print_json(true, poly_json(gf.poly, "w"));
            else
                std::cout << gf.poly.to_text("w") << "\n";
            return 0;
        }
        if (app.got_subcommand(esym_cmd)) {
            const auto poly = elementary_symmetric_via_cycle_index(esym_n, esym_m);
            bool pass = true;
            MultiPoly direct;
            if (check) {
                direct = elementary_symmetric_direct(esym_n, esym_m);
                pass = poly == direct;
            }
            if (json) {
                if (check) {
                    ordered_json result;
                    result["poly"] = poly_json(poly, "w");
                    result["direct"] = poly_json(direct, "w");
                    result["pass"] = pass;
                    print_json(pass, result);
                } else {
                    print_json(true, poly_json(poly, "w"));
                }
            } else {
                std::cout << poly.to_text("w") << "\n";
                if (check) {
                    std::cout << "direct: " << direct.to_text("w") << "\n"
                              << (pass ? "PASS" : "FAIL") << "\n";
                }
            }
            return pass ? 0 : 1;
        }
        if (app.got_subcommand(det_cmd)) {
            const auto l = load_matrix(matrix_path);
            const Rat d = det_via_traces(l);
            bool pass = true;
            Rat bareiss;
            if (check) {
                bareiss = det_bareiss(l);
                pass = d == bareiss;
            }
            if (json) {
                if (check) {
                    ordered_json result;
                    result["det"] = rat_to_string(d);
                    result["bareiss"] = rat_to_string(bareiss);
                    result["pass"] = pass;
                    print_json(pass, result);
                } else {
                    print_json(true, ordered_json{{"det", rat_to_string(d)}});
                }
            } else {
                std::cout << rat_to_string(d) << "\n";
                if (check) {
                    std::cout << "bareiss: " << rat_to_string(bareiss) << "\n"
                              << (pass ? "PASS" : "FAIL") << "\n";
                }
            }
            return pass ? 0 : 1;
        }
        // verify
        std::vector<std::string> suites;
        if (suite == "all")
            suites = {"fixed-colorings", "weighted-stabilizer", "weighted-partition", "esym", "det"};
        else
            suites = {suite};
        bool all_ok = true;
        ordered_json results = ordered_json::array();
        for (const auto& name : suites) {
            const VerifyReport r = run_suite(name, vopts);
            all_ok = all_ok && r.ok;
            if (json) {
                results.push_back(report_json(r));
                continue;
            }
            for (const auto& line : r.lines) std::cout << line << "\n";
            std::cout << "suite " << r.suite << ": " << (r.ok ? "OK" : "FAIL") << " ("
                      << r.checks << " checks)\n";
            if (!r.ok) std::cout << "counterexample: " << r.counterexample << "\n";
        }
        if (json) print_json(all_ok, results);
        return all_ok ? 0 : 1;
    } catch (const polyenum::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
