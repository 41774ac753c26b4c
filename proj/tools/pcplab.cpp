// pcplab: exact verification harness for the partial-crossed-product model
// of the Cuntz algebra O_n and its k x k matrix extension.
//
//   pcplab verify --suite <name> --n <int> [--k <int>] [--seed <int>]
//                 [--samples <int>] [--json]
//   pcplab eval --n <int> [--k <int>] "<expr>"
//   pcplab cocycle --n <int> --lambda 1,0 --mu 0 [--json]
//
// Exit codes: 0 pass, 1 relation failure, 2 usage/config error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pcp/groupoid.hpp"
#include "pcp/json_io.hpp"
#include "pcp/parser.hpp"
#include "pcp/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitRelationFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t seed_from_env() {
    if (const char* env = std::getenv("PCPLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("PCPLAB_SEED is not an unsigned integer");
        }
    }
    return 0;
}

std::vector<int> parse_digit_csv(const std::string& text) {
    std::vector<int> digits;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) digits.push_back(std::stoi(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in digit list");
        }
    }
    if (!cur.empty()) digits.push_back(std::stoi(cur));
    return digits;
}

void print_report(const pcp::RelationReport& rep, const pcp::SessionConfig& cfg, bool as_json) {
    if (as_json) {
        std::cout << pcp::to_json(rep, cfg).dump(2) << "\n";
        return;
    }
    for (const auto& e : rep.relations) {
        if (e.pass) {
            std::cout << "ok   " << e.label << "\n";
        } else {
            std::cout << "FAIL " << e.label << ": " << e.witness << "\n";
        }
    }
    std::cout << (rep.all_pass() ? "PASS" : "FAIL") << " suite " << rep.suite << " ("
              << rep.relations.size() << " relations)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic checks for partial crossed product presentations"};
    app.require_subcommand(1);

    pcp::SessionConfig cfg;
    bool json_out = false;

    auto add_session_options = [&](CLI::App* cmd) {
        cmd->add_option("--n", cfg.n, "base n >= 2");
        cmd->add_option("--k", cfg.k, "slot count k >= 1 (matrix sessions)");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a relation/property suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "cuntz | matrix | groupoid | nest | algebra-axioms | all");
    add_session_options(verify);
    bool seed_given = false;
    verify->add_option("--seed", cfg.seed, "RNG seed (default: PCPLAB_SEED or 0)")
        ->each([&](const std::string&) { seed_given = true; });
    verify->add_option("--samples", cfg.samples, "samples per randomized check");
    verify->add_option("--max-word-len", cfg.max_word_len, "word length bound for random pairs");
    verify->add_option("--grid-max-exp", cfg.grid_max_exp, "grid exponent bound");
    verify->add_option("--grid-max-k", cfg.grid_max_abs_k, "grid |k| bound");
    verify->add_flag("--json", json_out, "emit the report as JSON");

    CLI::App* eval = app.add_subcommand("eval", "print the canonical form of an expression");
    add_session_options(eval);
    std::string expr;
    eval->add_option("expr", expr, "expression, e.g. \"S1' * S1\"")->required();
    eval->add_flag("--json", json_out, "emit the element as JSON");

    CLI::App* coc = app.add_subcommand("cocycle", "cocycle value of a cylinder pair");
    add_session_options(coc);
    std::string lambda_csv, mu_csv;
    coc->add_option("--lambda", lambda_csv, "comma-separated digits of lambda (may be empty)");
    coc->add_option("--mu", mu_csv, "comma-separated digits of mu (may be empty)");
    coc->add_flag("--json", json_out, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (!seed_given) cfg.seed = seed_from_env();
        cfg.validate();

        if (verify->parsed()) {
            pcp::RelationReport rep = pcp::run_suite(suite, cfg);
            print_report(rep, cfg, json_out);
            return rep.all_pass() ? kExitPass : kExitRelationFailure;
        }

        if (eval->parsed()) {
            pcp::AlgebraElement a = pcp::parse_expr(expr, cfg.session());
            std::cout << pcp::serialize(a, json_out ? pcp::SerializeFormat::json
                                                    : pcp::SerializeFormat::text)
                      << "\n";
            return kExitPass;
        }

        if (coc->parsed()) {
            pcp::Word lambda(cfg.n, parse_digit_csv(lambda_csv));
            pcp::Word mu(cfg.n, parse_digit_csv(mu_csv));
            pcp::GElem c = pcp::cocycle(pcp::GroupoidElement(lambda, mu));
            if (json_out) {
                std::cout << pcp::to_json(c).dump() << "\n";
            } else {
                std::cout << c.str() << "\n";
            }
            return kExitPass;
        }
    } catch (const pcp::ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
