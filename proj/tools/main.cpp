// Command-line front end: exact cluster-variable expansions, basis
// expansions, positivity checks, Grassmannian point counts, seed mutation,
// and the named verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or syntax error.

#include <CLI11.hpp>
#include <json.hpp>

#include "kronq/bases.hpp"
#include "kronq/expr.hpp"
#include "kronq/json_io.hpp"
#include "kronq/quiver.hpp"
#include "kronq/seeds.hpp"
#include "kronq/verify.hpp"

#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using namespace kronq;

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsageError = 2;

TorusElem element_from_flags(const std::string& expr_src, const std::string& json_file) {
    if (!expr_src.empty() && !json_file.empty())
        throw CLI::ValidationError("give either --expr or --json, not both");
    if (!expr_src.empty()) return eval_expr(*parse_expr(expr_src));
    if (!json_file.empty()) {
        std::ifstream in(json_file);
        if (!in) throw CLI::ValidationError("cannot open '" + json_file + "'");
        json j;
        in >> j;
        return torus_from_json(j);
    }
    throw CLI::ValidationError("an input element is required (--expr or --json)");
}

ChebKind cheb_kind_from_name(const std::string& s) {
    if (s == "first") return ChebKind::First;
    if (s == "second") return ChebKind::Second;
    if (s == "power") return ChebKind::Power;
    throw CLI::ValidationError("kind must be first, second, or power");
}

ModuleKind module_kind_from_name(const std::string& s) {
    if (s == "preproj") return ModuleKind::Preprojective;
    if (s == "preinj") return ModuleKind::Preinjective;
    if (s == "regular") return ModuleKind::Regular;
    throw CLI::ValidationError("kind must be preproj, preinj, or regular");
}

void print_element(const TorusElem& x, bool as_json) {
    if (as_json)
        std::cout << torus_to_json(x).dump() << "\n";
    else
        std::cout << x.str() << "\n";
}

std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("range must look like A..B");
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

json report_to_json(const VerifyReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"case", f.case_id}, {"detail", f.detail}});
    return json{{"suite", r.suite},
                {"cases", r.cases},
                {"failures", failures},
                {"passed", r.passed()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for the quantum cluster algebra of the Kronecker quiver"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of human-readable output");

    // xvar M
    long xvar_m = 0;
    auto* cmd_xvar = app.add_subcommand("xvar", "expand a cluster variable");
    cmd_xvar->add_option("m", xvar_m, "variable index")->required();

    // cheb KIND N
    std::string cheb_kind;
    long cheb_n = 0;
    auto* cmd_cheb = app.add_subcommand("cheb", "expand a Chebyshev-type element of the diagonal");
    cmd_cheb->add_option("kind", cheb_kind, "first | second | power")->required();
    cmd_cheb->add_option("n", cheb_n, "index (n >= 0)")->required();

    // expand-in-basis
    std::string family_name_arg = "B";
    bool primed = false;
    std::string expr_src;
    std::string json_file;
    auto* cmd_expand = app.add_subcommand("expand-in-basis", "expand an element in a chosen basis");
    cmd_expand->add_option("--family", family_name_arg, "B | S | D")->required();
    cmd_expand->add_flag("--primed", primed, "use the bar-invariant normalization");
    cmd_expand->add_option("--expr", expr_src, "inline expression");
    cmd_expand->add_option("--json", json_file, "file holding an element in JSON form");

    // positivity
    std::string pos_expr;
    std::string pos_clusters = "-5..6";
    auto* cmd_pos = app.add_subcommand("positivity", "check cluster-by-cluster positivity");
    cmd_pos->add_option("--expr", pos_expr, "inline expression")->required();
    cmd_pos->add_option("--clusters", pos_clusters, "cluster range A..B");

    // grcount
    std::string gr_kind;
    long gr_n = 0;
    std::string gr_e;
    std::vector<int> gr_primes;
    std::string gr_lambda = "1";
    auto* cmd_gr = app.add_subcommand("grcount", "count subrepresentations over prime fields");
    cmd_gr->add_option("--kind", gr_kind, "preproj | preinj | regular")->required();
    cmd_gr->add_option("--n", gr_n, "module index (n >= 1)")->required();
    cmd_gr->add_option("--e", gr_e, "dimension pair e1,e2")->required();
    cmd_gr->add_option("--primes", gr_primes, "primes to count over")->required()->delimiter(',');
    cmd_gr->add_option("--lambda", gr_lambda, "regular point: residue or 'inf'");

    // mutate
    std::vector<int> steps;
    auto* cmd_mut = app.add_subcommand("mutate", "walk the exchange pattern");
    cmd_mut->add_option("--steps", steps, "mutation directions, e.g. 2,1,2,1")
        ->required()
        ->delimiter(',');

    // verify
    std::string suite;
    long max_n = -1;
    std::vector<int> primes_override;
    auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
    cmd_verify->add_option("suite", suite, "suite name (see --help for the list)")->required();
    cmd_verify->add_option("--max-n", max_n, "override the main index bound of the suite");
    cmd_verify->add_option("--primes", primes_override, "override the prime list")->delimiter(',');

    // Let the global --json flag appear after the subcommand as well.
    for (auto* sub : {cmd_xvar, cmd_cheb, cmd_expand, cmd_pos, cmd_gr, cmd_mut, cmd_verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*cmd_xvar) {
            print_element(xvar(xvar_m), as_json);
            return kOk;
        }
        if (*cmd_cheb) {
            if (cheb_n < 0) throw CLI::ValidationError("n must be nonnegative");
            print_element(cheb_elem(cheb_kind_from_name(cheb_kind), cheb_n), as_json);
            return kOk;
        }
        if (*cmd_expand) {
            const auto family = family_from_name(family_name_arg);
            if (!family) throw CLI::ValidationError("family must be B, S, or D");
            const TorusElem x = element_from_flags(expr_src, json_file);
            const BasisExpansion e = expand_in_basis(x, *family, primed);
            if (as_json)
                std::cout << expansion_to_json(e).dump() << "\n";
            else
                std::cout << e.str() << "\n";
            return kOk;
        }
        if (*cmd_pos) {
            const auto [lo, hi] = parse_range(pos_clusters);
            const TorusElem x = eval_expr(*parse_expr(pos_expr));
            const BasisExpansion e = expand_in_basis(x, Family::B, false);
            const auto witness = positivity_witness(e, lo, hi);
            if (as_json) {
                json out{{"positive", !witness.has_value()}};
                if (witness)
                    out["witness"] = {{"m", witness->m},
                                      {"e", json::array({witness->exponent.c1, witness->exponent.c2})},
                                      {"coeff", laurent_to_json(witness->coefficient)}};
                std::cout << out.dump() << "\n";
            } else if (witness) {
                std::cout << "not positive: cluster m=" << witness->m << " exponent ("
                          << witness->exponent.c1 << "," << witness->exponent.c2
                          << ") coefficient " << witness->coefficient.str() << "\n";
            } else {
                std::cout << "positive on clusters " << lo << ".." << hi << "\n";
            }
            return witness ? kVerifyFailure : kOk;
        }
        if (*cmd_gr) {
            const ModuleKind kind = module_kind_from_name(gr_kind);
            const auto comma = gr_e.find(',');
            if (comma == std::string::npos)
                throw CLI::ValidationError("--e must look like e1,e2");
            const long e1 = std::stol(gr_e.substr(0, comma));
            const long e2 = std::stol(gr_e.substr(comma + 1));
            const RegularPoint pt = gr_lambda == "inf" ? RegularPoint::infinity()
                                                       : RegularPoint::at(std::stol(gr_lambda));
            json counts = json::array();
            for (int p : gr_primes) {
                const KroneckerRep rep = kronecker_module(kind, gr_n, pt, p);
                counts.push_back(
                    {{"p", p}, {"count", std::to_string(subrep_count(rep, e1, e2))}});
            }
            const CountPoly poly = gr_poly(kind, gr_n, {e1, e2}, gr_primes, pt);
            json out{{"kind", gr_kind},
                     {"n", gr_n},
                     {"e", json::array({e1, e2})},
                     {"counts", counts},
                     {"poly", count_poly_to_json(poly)}};
            std::cout << out.dump() << "\n";
            return kOk;
        }
        if (*cmd_mut) {
            const auto produced = mutation_walk(initial_seed(), steps);
            if (as_json) {
                json vars = json::array();
                for (const TorusElem& x : produced) vars.push_back(torus_to_json(x));
                std::cout << json{{"steps", steps}, {"produced", vars}}.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < produced.size(); ++i)
                    std::cout << "step " << i + 1 << " (direction " << steps[i]
                              << "): " << produced[i].str() << "\n";
            }
            return kOk;
        }
        if (*cmd_verify) {
            VerifyOptions opt;
            if (max_n >= 0) {
                opt.szanto_max_n = max_n;
                opt.regular_max_n = max_n;
                opt.series_max_n = max_n;
                opt.qbinom_max_n = max_n;
            }
            if (!primes_override.empty()) {
                opt.cc_primes = primes_override;
                opt.szanto_primes = primes_override;
            }
            const VerifyReport report = run_verify(suite, opt);
            if (as_json) {
                std::cout << report_to_json(report).dump() << "\n";
            } else {
                std::cout << "suite " << report.suite << ": " << report.cases << " cases, "
                          << report.failures.size() << " failures\n";
                for (const auto& f : report.failures)
                    std::cout << "  " << f.case_id << ": " << f.detail << "\n";
            }
            return report.passed() ? kOk : kVerifyFailure;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kUsageError;
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailure;
    }
    return kUsageError;
}
