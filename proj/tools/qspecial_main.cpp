#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <qspecial/cli.hpp>

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact number tables, continued fractions, and identity verification\n"
                 "for q-analogue special number families."};
    app.name("qspecial");

    std::string command;
    app.add_option("command", command, "table | verify | cf")
        ->required()
        ->check(CLI::IsMember({"table", "verify", "cf"}));

    std::string family, q_str = "1", big_r = "inf", routes_str = "inversion", format = "csv";
    int N = 1, r = 1, m = 1, ell = 1, rhh = 0, nmax = 10, depth = 5;
    unsigned seed = 12345;
    bool check = false, corrupt = false;

    auto* family_opt = app.add_option("--family", family,
                                      "family kind (comma list allowed for verify)");
    app.add_option("--N", N, "hypergeometric parameter N");
    app.add_option("--q", q_str, "exact rational q, as a/b or an integer");
    app.add_option("--r", r, "window lower bound");
    app.add_option("--R", big_r, "window upper bound, or 'inf'");
    app.add_option("--m", m, "hyperharmonic shift (m >= 1)");
    app.add_option("--ell", ell, "hyperharmonic restriction (ell >= 1)");
    app.add_option("--rhh", rhh, "hyperharmonic order");
    app.add_option("--nmax", nmax, "last index for table output");
    app.add_option("--routes", routes_str,
                   "comma list of inversion,determinant,partitions,compositions");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--depth", depth, "continued-fraction depth");
    app.add_flag("--check", check, "verify the continued-fraction contract for cf");
    app.add_option("--seed", seed, "seed for the randomized identity instances");
    app.add_flag("--corrupt", corrupt, "testing hook: perturb a coefficient")->group("");
    app.set_config("--config", "", "flat key=value config file (flags override)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    qspecial::RunConfig cfg;
    cfg.command = command;
    cfg.nmax = nmax;
    cfg.depth = depth;
    cfg.check = check;
    cfg.corrupt = corrupt;
    cfg.seed = seed;
    cfg.format = (format == "json") ? qspecial::OutputFormat::Json : qspecial::OutputFormat::Csv;

    cfg.routes.clear();
    for (const std::string& name : split_csv(routes_str)) {
        auto route = qspecial::route_from_name(name);
        if (!route) {
            std::cerr << "unknown route: " << name << "\n";
            return 2;
        }
        cfg.routes.push_back(*route);
    }

    if (command == "verify") {
        if (family_opt->count() > 0) {
            cfg.verify_kinds.clear();
            for (const std::string& name : split_csv(family)) {
                auto kind = qspecial::kind_from_name(name);
                if (!kind) {
                    std::cerr << "unknown family: " << name << "\n";
                    return 2;
                }
                cfg.verify_kinds.push_back(*kind);
            }
        }
    } else {
        if (family_opt->count() > 0) {
            auto kind = qspecial::kind_from_name(family);
            if (!kind) {
                std::cerr << "unknown family: " << family << "\n";
                return 2;
            }
            qspecial::FamilySpec spec;
            spec.kind = *kind;
            spec.N = N;
            spec.r = r;
            spec.m = m;
            spec.ell = ell;
            spec.r_hh = rhh;
            try {
                spec.q = qspecial::BigRat::from_string(q_str);
                if (big_r == "inf") {
                    spec.R = std::nullopt;
                } else {
                    size_t pos = 0;
                    spec.R = std::stoi(big_r, &pos);
                    if (pos != big_r.size()) throw std::invalid_argument(big_r);
                }
            } catch (const std::exception&) {
                std::cerr << "invalid parameter value (q or R)\n";
                return 2;
            }
            cfg.family = spec;
        }
    }

    return qspecial::dispatch(cfg, std::cout, std::cerr);
}
