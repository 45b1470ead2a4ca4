#include <qforms/cli.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include <qforms/double_eisenstein.hpp>
#include <qforms/mu_solver.hpp>
#include <qforms/oracle.hpp>
#include <qforms/serialize.hpp>
#include <qforms/verify.hpp>

namespace qforms::cli
{

namespace
{

struct ExpandArgs {
    std::string series;
    std::string pair;
    std::optional<unsigned> k;
    unsigned r = 0;
    unsigned s = 0;
    int order = -1;
    std::string format = "json";
};

struct MuArgs {
    int s = 0;
    int verify_order = -1;
    int extra_rows = 0;
    std::string format = "json";
};

struct RepArgs {
    std::string kind;
    int s = 0;
    long n_max = -1;
    bool check = false;
    std::string format = "csv";
};

struct VerifyArgs {
    std::string suite = "all";
    std::optional<int> order;
    std::optional<double> tol;
    std::string format = "json";
    bool timing = false;
};

class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

int do_expand(const ExpandArgs &a, std::ostream &out)
{
    if (a.series.empty() == a.pair.empty()) {
        throw UsageError("expand: give exactly one of --series or --double");
    }
    ESeries series(0);
    if (!a.series.empty()) {
        const bool weightless = a.series == "theta" || a.series == "T8";
        if (!a.k && !weightless) {
            throw UsageError("expand: --series " + a.series + " needs --k");
        }
        series = build_named_series(a.series, a.k.value_or(0u), a.order);
    } else {
        if (a.r == 0u || a.s == 0u) {
            throw UsageError("expand: --double needs --r and --s");
        }
        series = Z_double(ParityPair::parse(a.pair), a.r, a.s, a.order);
    }
    if (a.format == "csv") {
        out << series_to_csv(series);
    } else {
        out << series_to_json(series).dump(2) << '\n';
    }
    return exit_ok;
}

int do_mu(const MuArgs &a, std::ostream &out)
{
    const int order = a.verify_order >= 0 ? a.verify_order : std::max(2 * a.s - 1, 60);
    const MuTable t = solve_mu(a.s, order, a.extra_rows);
    if (a.format == "csv") {
        out << mu_to_csv(t);
    } else if (a.format == "pretty") {
        out << mu_to_pretty(t);
    } else {
        out << mu_to_json(t).dump(2) << '\n';
    }
    return exit_ok;
}

int do_rep(const RepArgs &a, std::ostream &out)
{
    const bool squares = a.kind == "squares";
    const MuTable t = solve_mu(a.s, std::max(2 * a.s - 1, 60));
    const auto formula = squares ? r8s_table(a.s, a.n_max, t) : t8s_table(a.s, a.n_max, t);
    std::vector<BigInt> oracle;
    if (a.check) {
        const auto u = static_cast<unsigned>(8 * a.s);
        oracle = squares ? r_oracle(u, a.n_max) : t_oracle(u, a.n_max);
    }
    bool all_equal = true;
    const std::string count = squares ? "r" : "t";
    if (a.format == "json") {
        json rows = json::array();
        for (long n = 0; n <= a.n_max; ++n) {
            const auto i = static_cast<std::size_t>(n);
            json row = {{"n", n}, {"count", formula[i].get_str()}};
            if (a.check) {
                row["oracle"] = oracle[i].get_str();
                all_equal = all_equal && oracle[i] == formula[i];
            }
            rows.push_back(row);
        }
        json doc = {{"kind", a.kind}, {"s", a.s}, {"function", count + "_" + std::to_string(8 * a.s)}, {"rows", rows}};
        if (a.check) {
            doc["match"] = all_equal;
        }
        out << doc.dump(2) << '\n';
    } else {
        out << (a.check ? "n,count,oracle\n" : "n,count\n");
        for (long n = 0; n <= a.n_max; ++n) {
            const auto i = static_cast<std::size_t>(n);
            out << n << ',' << formula[i].get_str();
            if (a.check) {
                out << ',' << oracle[i].get_str();
                all_equal = all_equal && oracle[i] == formula[i];
            }
            out << '\n';
        }
    }
    return all_equal ? exit_ok : exit_verification_failed;
}

int do_verify(const VerifyArgs &a, std::ostream &out)
{
    SuiteOptions opt;
    opt.order = a.order;
    opt.tol = a.tol;
    const auto reports = run_suite(parse_suite(a.suite), opt);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.passed; });
    if (a.format == "pretty") {
        for (const auto &r : reports) {
            out << report_to_pretty(r);
        }
    } else {
        json arr = json::array();
        for (const auto &r : reports) {
            arr.push_back(report_to_json(r, a.timing));
        }
        out << arr.dump(2) << '\n';
    }
    return ok ? exit_ok : exit_verification_failed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series engine for level-2 Eisenstein series and sums of 8s squares", "qforms"};
    app.require_subcommand(1, 1);
    std::string output;
    app.add_option("-o,--output", output, "Write to this file instead of stdout");

    ExpandArgs ea;
    auto *expand = app.add_subcommand("expand", "Dump the coefficients of a series");
    auto *series_opt = expand->add_option("--series", ea.series, "Single series name")
                           ->check(CLI::IsMember(named_series_list()));
    auto *double_opt = expand->add_option("--double", ea.pair, "Double series parity pair")
                           ->check(CLI::IsMember({"eo", "oe", "oo"}));
    series_opt->excludes(double_opt);
    expand->add_option("--k", ea.k, "Weight of a single series")->check(CLI::NonNegativeNumber);
    expand->add_option("--r", ea.r, "First index of a double series")->check(CLI::PositiveNumber);
    expand->add_option("--s", ea.s, "Second index of a double series")->check(CLI::PositiveNumber);
    expand->add_option("--order", ea.order, "Truncation order N")->required()->check(CLI::NonNegativeNumber);
    expand->add_option("--format", ea.format)->check(CLI::IsMember({"json", "csv"}));

    MuArgs ma;
    auto *mu = app.add_subcommand("mu", "Solve for mu_s(l)");
    mu->add_option("--s", ma.s, "s >= 2")->required()->check(CLI::Range(2, 64));
    mu->add_option("--verify-order", ma.verify_order, "Check the identity through q^N (default max(2s-1, 60))");
    mu->add_option("--extra-rows", ma.extra_rows, "Coefficient rows beyond q^s")->check(CLI::NonNegativeNumber);
    mu->add_option("--format", ma.format)->check(CLI::IsMember({"json", "csv", "pretty"}));

    RepArgs ra;
    auto *rep = app.add_subcommand("rep", "Tabulate r_{8s}(n) or t_{8s}(n) from the mu formulas");
    rep->add_option("--kind", ra.kind)->required()->check(CLI::IsMember({"squares", "triangular"}));
    rep->add_option("--s", ra.s, "s >= 2")->required()->check(CLI::Range(2, 64));
    rep->add_option("--n-max", ra.n_max)->required()->check(CLI::Range(0L, 100000L));
    rep->add_flag("--check", ra.check, "Add an oracle column from brute-force convolution");
    rep->add_option("--format", ra.format)->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Run identity checks");
    verify->add_option("--suite", va.suite)
        ->check(CLI::IsMember({"all", "shuffle", "summation", "star", "prop4", "transform"}));
    verify->add_option("--order", va.order, "Order for the exact checks (default 30)")->check(CLI::Range(1, 400));
    verify->add_option("--tol", va.tol, "Tolerance for the numeric checks")->check(CLI::PositiveNumber);
    verify->add_option("--format", va.format)->check(CLI::IsMember({"json", "pretty"}));
    verify->add_flag("--timing", va.timing, "Include elapsed_ms in each report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    std::ostringstream buffer;
    int code = exit_ok;
    try {
        if (*expand) {
            code = do_expand(ea, buffer);
        } else if (*mu) {
            code = do_mu(ma, buffer);
        } else if (*rep) {
            code = do_rep(ra, buffer);
        } else {
            code = do_verify(va, buffer);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
        return exit_usage;
    } catch (const VerificationFailed &e) {
        err << "verification failed: " << e.what() << '\n';
        return exit_verification_failed;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_verification_failed;
    }

    if (output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(output);
        if (!file) {
            err << "error: cannot open " << output << " for writing\n";
            return exit_usage;
        }
        file << buffer.str();
    }
    return code;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

} // namespace qforms::cli
