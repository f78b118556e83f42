// Command-line front end: parses shapes, tableaux and assignments, dispatches
// to the verifiers and enumerators, and emits deterministic JSON reports.
// Exit codes: 0 = pass, 1 = identity check failed, 2 = usage/input/budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "schurmzf/io.hpp"
#include "schurmzf/suite.hpp"
#include "schurmzf/verify.hpp"
#include "schurmzf/verify_pieri.hpp"

namespace {

using namespace schurmzf;

struct CommonArgs {
    std::string shape_text;
    std::string vars_file;
    std::string assign_file;
    long bound = 4;
    std::string mode = "exact";
    double tol = 1e-8;
    long long max_terms = 0;  // 0: take the environment default
    int threads = 1;
    std::string out_file;
    std::string diag = "full";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_shape = true) {
    if (with_shape)
        cmd->add_option("--shape", args.shape_text, "partition, e.g. 3,2,1");
    cmd->add_option("--vars", args.vars_file, "tableau JSON file");
    cmd->add_option("--assign", args.assign_file, "assignment JSON file");
    cmd->add_option("--N", args.bound, "truncation depth")->check(CLI::NonNegativeNumber);
    cmd->add_option("--mode", args.mode, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--tol", args.tol, "relative tolerance in float mode");
    cmd->add_option("--max-terms", args.max_terms, "work budget for big symmetrizations");
    cmd->add_option("--threads", args.threads, "worker threads for symmetrized sums");
    cmd->add_option("--out", args.out_file, "write the JSON report here instead of stdout");
    cmd->add_option("--diag", args.diag, "diagonal permutation sets: full or pairs")
        ->check(CLI::IsMember({"full", "pairs"}));
}

VerifyOptions make_options(const CommonArgs& args) {
    VerifyOptions opt;
    opt.exact = args.mode == "exact";
    opt.tol = args.tol;
    opt.threads = args.threads;
    opt.diag_mode = args.diag == "pairs" ? DiagMode::TopPair : DiagMode::Full;
    if (args.max_terms > 0) {
        opt.budget = args.max_terms;
    } else if (const char* env = std::getenv("SCHURMZF_MAX_TERMS")) {
        opt.budget = std::atoll(env);
        if (opt.budget <= 0) throw input_error("SCHURMZF_MAX_TERMS must be positive");
    }
    return opt;
}

VarTableau resolve_tableau(const CommonArgs& args) {
    if (!args.vars_file.empty()) {
        VarTableau t = parse_tableau_json(load_json_file(args.vars_file));
        if (!args.shape_text.empty() && Partition::parse(args.shape_text) != t.shape)
            throw input_error("--shape disagrees with the tableau file");
        return t;
    }
    if (args.shape_text.empty()) throw input_error("need --shape or --vars");
    return VarTableau::canonical(Partition::parse(args.shape_text));
}

Assignment resolve_assignment(const CommonArgs& args, const std::vector<Symbol>& symbols) {
    Assignment a = args.assign_file.empty()
                       ? default_assignment(symbols, args.mode == "exact")
                       : parse_assignment_json(load_json_file(args.assign_file));
    bool exact = a.empty() ? true : assignment_is_exact(a);
    if (!a.empty() && exact != (args.mode == "exact"))
        throw input_error("assignment kind disagrees with --mode " + args.mode);
    return a;
}

int emit(const VerificationReport& report, const CommonArgs& args) {
    nlohmann::ordered_json j = to_json(report);
    if (args.out_file.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(args.out_file);
        if (!out) throw input_error("cannot write '" + args.out_file + "'");
        out << j.dump(2) << "\n";
    }
    std::cerr << summary_line(report) << "\n";
    return report.pass ? 0 : 1;
}

int emit_listing(const nlohmann::ordered_json& j, const CommonArgs& args,
                 const std::string& summary) {
    if (args.out_file.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(args.out_file);
        if (!out) throw input_error("cannot write '" + args.out_file + "'");
        out << j.dump(2) << "\n";
    }
    std::cerr << summary << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated Schur multiple zeta identities: verify and enumerate"};
    app.require_subcommand(1);

    // ----- verify -----
    CLI::App* verify = app.add_subcommand("verify", "check an identity family");
    verify->require_subcommand(1);

    CommonArgs jt_args;
    std::string jt_family = "auto";
    CLI::App* jt = verify->add_subcommand("extended-jt", "determinant identities");
    add_common(jt, jt_args);
    jt->add_option("--family", jt_family,
                   "mn, mn1, mn2, e-mn1, e-mn2 or auto (detect from the shape)");

    CommonArgs lemma_args;
    CLI::App* lemma = verify->add_subcommand("lemma-diag",
                                             "diagonal symmetrization of the rim sum");
    add_common(lemma, lemma_args);

    CommonArgs path_args;
    CLI::App* path = verify->add_subcommand("path", "lattice-path cancellation");
    add_common(path, path_args);

    CommonArgs sns_args;
    std::string trend_text;
    CLI::App* sns = verify->add_subcommand("star-nonstar",
                                           "weak-chain versus strict-chain determinants");
    add_common(sns, sns_args);
    sns->add_option("--trend", trend_text, "comma list of float-mode depths, e.g. 10,20,40");

    CommonArgs pieri_args;
    PieriParams pieri_params;
    bool no_sym = false;
    std::string sym_override, flavor_text = "H";
    CLI::App* pieri = verify->add_subcommand("pieri", "product expansions by the pushing rule");
    add_common(pieri, pieri_args);
    pieri->add_option("--kind", pieri_params.kind,
                      "hook_h, hook_e, thm83, cor216, constant_s or m2_hook_h")
        ->required()
        ->check(CLI::IsMember({"hook_h", "hook_e", "thm83", "cor216", "constant_s",
                               "m2_hook_h"}));
    pieri->add_option("--ell", pieri_params.ell, "arm length / box count (see --kind)");
    pieri->add_option("--k", pieri_params.k, "leg length");
    pieri->add_option("--m", pieri_params.m, "multiplier length");
    pieri->add_option("--X", pieri_params.X, "row count for m2_hook_h");
    pieri->add_option("--s", pieri_params.s, "constant exponent for constant_s");
    pieri->add_option("--flavor", flavor_text, "H (row multiplier) or E (column)")
        ->check(CLI::IsMember({"H", "E"}));
    pieri->add_flag("--no-sym", no_sym, "evaluate a single permutation term only");
    pieri->add_option("--sym", sym_override, "comma list overriding the symmetrized symbols");

    // ----- enumerate -----
    CLI::App* enumerate = app.add_subcommand("enumerate", "dump canonical serializations");
    enumerate->require_subcommand(1);

    CommonArgs ssyt_args;
    bool ssyt_count_only = false;
    long ssyt_limit = 0;
    CLI::App* ssyt_cmd = enumerate->add_subcommand("ssyt", "bounded tableaux of a shape");
    add_common(ssyt_cmd, ssyt_args);
    ssyt_cmd->add_flag("--count", ssyt_count_only, "print the count only");
    ssyt_cmd->add_option("--limit", ssyt_limit, "list at most this many tableaux");

    CommonArgs rims_args;
    std::string rims_flavor = "H";
    CLI::App* rims_cmd = enumerate->add_subcommand("rims", "rim decompositions with signs");
    add_common(rims_cmd, rims_args);
    rims_cmd->add_option("--flavor", rims_flavor)->check(CLI::IsMember({"H", "E"}));

    CommonArgs push_args;
    int push_r = 1;
    std::string push_flavor = "H";
    CLI::App* push_cmd = enumerate->add_subcommand("push", "pushing rule outcomes");
    add_common(push_cmd, push_args);
    push_cmd->add_option("--r", push_r, "number of boxes")->check(CLI::PositiveNumber);
    push_cmd->add_option("--flavor", push_flavor)->check(CLI::IsMember({"H", "E"}));

    CommonArgs matrix_args;
    std::string matrix_flavor = "H";
    CLI::App* matrix_cmd = enumerate->add_subcommand("matrix", "determinant entry grid");
    add_common(matrix_cmd, matrix_args);
    matrix_cmd->add_option("--flavor", matrix_flavor)->check(CLI::IsMember({"H", "E"}));

    // ----- suite -----
    CommonArgs suite_args;
    CLI::App* suite_cmd = app.add_subcommand("suite", "run the full acceptance battery");
    suite_cmd->add_option("--out", suite_args.out_file, "write the JSON summary here");
    suite_cmd->add_option("--threads", suite_args.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (jt->parsed()) {
            VarTableau t = resolve_tableau(jt_args);
            Assignment a = resolve_assignment(jt_args, row_major_symbols(t));
            std::string family =
                jt_family == "auto" ? detect_jt_family(t.shape) : jt_family;
            return emit(verify_extended_jt(family, t, a, jt_args.bound, make_options(jt_args)),
                        jt_args);
        }
        if (lemma->parsed()) {
            VarTableau t = resolve_tableau(lemma_args);
            Assignment a = resolve_assignment(lemma_args, row_major_symbols(t));
            return emit(verify_lemma_diag(t, a, lemma_args.bound, make_options(lemma_args)),
                        lemma_args);
        }
        if (path->parsed()) {
            VarTableau t = resolve_tableau(path_args);
            Assignment a = resolve_assignment(path_args, row_major_symbols(t));
            VerifyOptions opt = make_options(path_args);
            if (path_args.max_terms == 0 && !std::getenv("SCHURMZF_MAX_TERMS"))
                opt.budget = 1000000;  // pattern tuples, not permutation terms
            return emit(verify_path_identity(t, a, path_args.bound, opt), path_args);
        }
        if (sns->parsed()) {
            VarTableau t = resolve_tableau(sns_args);
            Assignment a = resolve_assignment(sns_args, row_major_symbols(t));
            VerifyOptions opt = make_options(sns_args);
            if (!trend_text.empty()) {
                if (opt.exact)
                    throw input_error("--trend needs --mode float");
                std::stringstream ss(trend_text);
                std::string item;
                while (std::getline(ss, item, ',')) opt.trend_bounds.push_back(std::stol(item));
            }
            return emit(verify_star_nonstar(t, a, sns_args.bound, opt), sns_args);
        }
        if (pieri->parsed()) {
            VerifyOptions opt = make_options(pieri_args);
            opt.symmetrize = !no_sym;
            if (!sym_override.empty()) {
                std::stringstream ss(sym_override);
                std::string item;
                while (std::getline(ss, item, ',')) opt.sym_symbols.push_back(item);
            }
            pieri_params.flavor = flavor_text == "E" ? RimFlavor::E : RimFlavor::H;
            if (pieri_params.kind == "constant_s") {
                if (pieri_args.shape_text.empty())
                    throw input_error("constant_s needs --shape");
                pieri_params.shape = Partition::parse(pieri_args.shape_text);
            }
            Assignment a =
                pieri_args.assign_file.empty()
                    ? default_pieri_assignment(pieri_params, pieri_args.mode == "exact")
                    : parse_assignment_json(load_json_file(pieri_args.assign_file));
            return emit(verify_pieri(pieri_params, a, pieri_args.bound, opt), pieri_args);
        }
        if (ssyt_cmd->parsed()) {
            Partition shape = Partition::parse(ssyt_args.shape_text);
            nlohmann::ordered_json j;
            j["shape"] = shape.parts();
            j["N"] = ssyt_args.bound;
            j["count"] = count_ssyt(shape, ssyt_args.bound).get_str();
            if (!ssyt_count_only) {
                nlohmann::ordered_json items = nlohmann::ordered_json::array();
                long listed = 0;
                for (SsytEnumerator en(shape, ssyt_args.bound); en.valid(); en.advance()) {
                    if (ssyt_limit > 0 && listed >= ssyt_limit) break;
                    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                    std::size_t k = 0;
                    for (int i = 1; i <= shape.rows(); ++i) {
                        std::vector<int> row;
                        for (int c = 0; c < shape.part(i); ++c)
                            row.push_back(en.entries()[k++]);
                        rows.push_back(row);
                    }
                    items.push_back(rows);
                    ++listed;
                }
                j["tableaux"] = items;
            }
            return emit_listing(j, ssyt_args,
                                "ssyt count=" + count_ssyt(shape, ssyt_args.bound).get_str());
        }
        if (rims_cmd->parsed()) {
            Partition shape = Partition::parse(rims_args.shape_text);
            auto decs = rims_flavor == "E" ? enumerate_e_rims(shape) : enumerate_h_rims(shape);
            nlohmann::ordered_json items = nlohmann::ordered_json::array();
            for (const RimDecomposition& dec : decs) {
                nlohmann::ordered_json j;
                j["labels"] = dec.label_grid(shape);
                j["type"] = dec.sigma;
                j["sign"] = dec.sign;
                items.push_back(std::move(j));
            }
            nlohmann::ordered_json j;
            j["shape"] = shape.parts();
            j["flavor"] = rims_flavor;
            j["count"] = decs.size();
            j["decompositions"] = items;
            return emit_listing(j, rims_args,
                                "rims count=" + std::to_string(decs.size()));
        }
        if (push_cmd->parsed()) {
            VarTableau t = resolve_tableau(push_args);
            SymbolWord boxes;
            for (int i = 1; i <= push_r; ++i) boxes.push_back("t" + std::to_string(i));
            auto outcomes =
                push(t, boxes, push_flavor == "E" ? RimFlavor::E : RimFlavor::H);
            nlohmann::ordered_json items = nlohmann::ordered_json::array();
            for (const PushOutcome& o : outcomes)
                items.push_back(push_outcome_json(o.shape, o.tableau.rows, o.positions));
            nlohmann::ordered_json j;
            j["shape"] = t.shape.parts();
            j["r"] = push_r;
            j["flavor"] = push_flavor;
            j["count"] = outcomes.size();
            j["outcomes"] = items;
            return emit_listing(j, push_args,
                                "push outcomes=" + std::to_string(outcomes.size()));
        }
        if (matrix_cmd->parsed()) {
            VarTableau t = resolve_tableau(matrix_args);
            DetSpec spec = matrix_flavor == "E" ? jt_matrix(t) : jts_matrix(t);
            nlohmann::ordered_json j;
            j["shape"] = t.shape.parts();
            j["flavor"] = matrix_flavor;
            j["size"] = spec.size;
            j["grid"] = spec.dump();
            std::cerr << spec.dump();
            return emit_listing(j, matrix_args, "matrix size=" + std::to_string(spec.size));
        }
        if (suite_cmd->parsed()) {
            auto results = run_acceptance_suite(std::max(1, suite_args.threads));
            int failed = print_suite_results(results, std::cerr);
            nlohmann::ordered_json j = suite_json(results);
            if (!suite_args.out_file.empty()) {
                std::ofstream out(suite_args.out_file);
                if (!out) throw input_error("cannot write '" + suite_args.out_file + "'");
                out << j.dump(2) << "\n";
            } else {
                std::cout << j.dump(2) << "\n";
            }
            return failed == 0 ? 0 : 1;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
