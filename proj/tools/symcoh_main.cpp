// Command-line front end; talks to the library through the C API only.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symcoh.h"

namespace {

int report_error(symcoh_status status) {
    std::cerr << "error: " << symcoh_last_error() << "\n";
    return static_cast<int>(status);
}

std::vector<long long> parse_csv(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("lambda", "not an integer list");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("lambda", "empty integer list");
    return out;
}

struct PairHandle {
    symcoh_pair* p = nullptr;
    ~PairHandle() { symcoh_pair_free(p); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { symcoh_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler characteristics and cohomology of special line bundles on complete "
                 "symmetric varieties"};
    app.require_subcommand(1);

    std::string pair_name, lambda_csv, ambient_csv, window, emit = "ascii", out_path, suite;
    int n = 0;
    bool exact = false, bound = false;

    auto add_pair_options = [&](CLI::App* cmd, bool need_lambda) {
        cmd->add_option("--pair", pair_name, "catalog name or pair-spec file")->required();
        cmd->add_option("--n", n, "parameter for parameterized families");
        if (need_lambda) {
            auto* lam = cmd->add_option("--lambda", lambda_csv,
                                        "special-lattice units, comma separated");
            auto* amb = cmd->add_option("--ambient", ambient_csv,
                                        "fundamental-weight coordinates, comma separated");
            lam->excludes(amb);
        }
    };

    CLI::App* euler = app.add_subcommand("euler", "Euler characteristic as a virtual module");
    add_pair_options(euler, true);

    CLI::App* coh = app.add_subcommand("cohomology", "degreewise cohomology table");
    add_pair_options(coh, true);
    coh->add_flag("--exact", exact, "exact table (conics and CnH4 families only)");
    coh->add_flag("--bound", bound, "general upper-bound table");

    CLI::App* regions = app.add_subcommand("regions", "nonvanishing-degree lattice diagram");
    add_pair_options(regions, false);
    regions->add_option("--window", window, "x0:x1,y0:y1 in special-basis coordinates")->required();
    regions->add_option("--emit", emit, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
    regions->add_option("--out", out_path, "output file (required for svg)");

    CLI::App* check = app.add_subcommand("check", "run a cross-validation suite");
    check->add_option("--suite", suite,
                      "conics-euler | sp-equality | table1 | h1-vanishing | p2-plethysm | "
                      "charring-agreement")
        ->required();

    app.add_subcommand("catalog-list", "list built-in pairs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("catalog-list")) {
            StringHandle json;
            if (auto st = symcoh_catalog_json(&json.s); st != SYMCOH_OK) return report_error(st);
            std::cout << json.s;
            return 0;
        }

        if (app.got_subcommand("check")) {
            StringHandle report;
            int failures = 0;
            if (auto st = symcoh_check_suite(suite.c_str(), &report.s, &failures);
                st != SYMCOH_OK)
                return report_error(st);
            std::cout << report.s;
            return failures == 0 ? 0 : 1;
        }

        PairHandle pair;
        if (auto st = symcoh_pair_resolve(pair_name.c_str(), n, &pair.p); st != SYMCOH_OK)
            return report_error(st);

        if (app.got_subcommand("regions")) {
            long long x0, x1, y0, y1;
            char c1, c2, c3;
            std::stringstream ss(window);
            if (!(ss >> x0 >> c1 >> x1 >> c2 >> y0 >> c3 >> y1) || c1 != ':' || c2 != ',' ||
                c3 != ':') {
                std::cerr << "error: --window must be x0:x1,y0:y1\n";
                return 2;
            }
            if (emit == "svg" && out_path.empty()) {
                std::cerr << "error: --emit svg requires --out\n";
                return 2;
            }
            StringHandle text;
            if (auto st = symcoh_regions_render(pair.p, x0, x1, y0, y1, emit.c_str(), &text.s);
                st != SYMCOH_OK)
                return report_error(st);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "error: cannot write " << out_path << "\n";
                    return 2;
                }
                out << text.s;
            } else {
                std::cout << text.s;
            }
            return 0;
        }

        // euler / cohomology need lambda
        std::vector<long long> lambda;
        if (!lambda_csv.empty()) {
            lambda = parse_csv(lambda_csv);
        } else if (!ambient_csv.empty()) {
            lambda = parse_csv(ambient_csv);
        } else {
            std::cerr << "error: --lambda or --ambient is required\n";
            return 2;
        }

        if (app.got_subcommand("euler")) {
            StringHandle json;
            if (auto st = symcoh_euler_json(pair.p, lambda.data(), lambda.size(), &json.s);
                st != SYMCOH_OK)
                return report_error(st);
            std::cout << json.s;
            return 0;
        }

        if (app.got_subcommand("cohomology")) {
            if (exact == bound) {
                std::cerr << "error: choose exactly one of --exact / --bound\n";
                return 2;
            }
            StringHandle json;
            if (auto st = symcoh_cohomology_json(pair.p, lambda.data(), lambda.size(),
                                                 exact ? 1 : 0, &json.s);
                st != SYMCOH_OK)
                return report_error(st);
            std::cout << json.s;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
