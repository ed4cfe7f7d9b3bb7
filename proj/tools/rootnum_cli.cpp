// rootnum: local and global root numbers of abelian varieties with real multiplication.
//
//   rootnum eval job.json [--format json|table] [--allow-p2-multiplicative]
//   rootnum verify --suite abelian|induced|fq|sp2|gauss|squares|evendim|all [--pmax N] [--qmax N] [--seed S]
//   rootnum sweep --g 1 --case abelian --q 5,7,11,13 [--e ...] [--r ...] > signs.csv
//
// Exit codes: 0 success, 1 parse/IO error, bound violation or verification mismatch,
// 2 job failed validation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootnum/error.hpp"
#include "rootnum/job_io.hpp"
#include "rootnum/root_engine.hpp"
#include "rootnum/sweeps.hpp"

namespace {

using namespace rootnum;

int run_eval(const std::string& path, const std::string& format, bool allow_p2) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    RmVarietyData data;
    try {
        data = io::parse_job(buf.str());
    } catch (const io::JobParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }

    const ValidationOptions options{allow_p2};
    const ValidationReport validation = validate_variety(data, options);
    if (!validation.passed()) {
        if (format == "json")
            std::cout << nlohmann::json{{"validation", io::validation_to_json(validation)}}.dump(2) << "\n";
        else
            std::cout << io::validation_to_table(validation);
        for (const auto& v : validation.violations)
            std::cerr << "invalid: " << (v.label.empty() ? "<job>" : v.label) << ": " << to_string(v.code) << ": "
                      << v.detail << "\n";
        return 2;
    }

    try {
        const RootNumberReport report = sign_global(data, options);
        if (format == "json")
            std::cout << io::report_to_json(report).dump(2) << "\n";
        else
            std::cout << io::report_to_table(report) << io::validation_to_table(report.validation);
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return ex.code() == ErrorCode::ValidationFailed ? 2 : 1;
    }
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::int64_t pmax = 47;
    std::int64_t qmax = 0; // 0: per-suite default
    std::uint64_t seed = 20240601;
    int jobs = 100;
    std::string kernel = "parallel";
};

void print_result(const verify::SuiteResult& r) {
    std::cout << "suite " << r.suite << ": checked " << r.checked << ", mismatches " << r.mismatches.size()
              << (r.passed() ? "  PASS" : "  FAIL") << "\n";
    for (const auto& m : r.mismatches)
        std::cout << "  mismatch " << m.instance << ": " << m.detail << "\n";
}

int run_verify(const VerifyArgs& args) {
    using namespace rootnum::verify;
    const Kernel kernel = args.kernel == "reference" ? Kernel::Reference : Kernel::Parallel;
    auto qmax_or = [&](std::int64_t fallback) { return args.qmax > 0 ? args.qmax : fallback; };
    const std::vector<std::string> all = {"abelian", "induced", "fq", "sp2", "gauss", "squares", "evendim"};
    const std::vector<std::string> suites = args.suite == "all" ? all : std::vector<std::string>{args.suite};

    bool ok = true;
    try {
        for (const auto& s : suites) {
            SuiteResult r;
            if (s == "abelian") {
                const int degrees[] = {1, 2};
                r = verify_abelian(args.pmax, degrees, kernel);
            } else if (s == "induced") {
                r = verify_induced(qmax_or(13), kernel);
            } else if (s == "fq") {
                r = verify_froehlich_queyrut(qmax_or(13), kernel);
            } else if (s == "sp2") {
                r = verify_sp2(qmax_or(100), kernel);
            } else if (s == "gauss") {
                r = verify_gauss(qmax_or(121), kernel);
            } else if (s == "squares") {
                r = verify_squareness(qmax_or(200), kernel);
            } else if (s == "evendim") {
                const std::int64_t dims[] = {2, 4};
                r = verify_even_dimension(qmax_or(100), dims, args.seed, args.jobs, kernel);
            } else {
                std::cerr << "error: unknown suite '" << s << "'\n";
                return 1;
            }
            print_result(r);
            ok = ok && r.passed();
        }
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return ok ? 0 : 1;
}

struct SweepArgs {
    std::int64_t g = 1;
    std::vector<std::string> cases;
    std::vector<std::int64_t> qs;
    std::int64_t qmin = 3;
    std::int64_t qmax = 0;
    std::vector<std::int64_t> es;
    std::vector<std::int64_t> rs{0};
    std::int64_t a_iota = 2;
    bool allow_p2 = false;
};

int run_sweep(const SweepArgs& args) {
    verify::SweepGrid grid;
    grid.g = args.g;
    grid.rs = args.rs;
    grid.a_iota = args.a_iota;
    grid.options.allow_p2_multiplicative = args.allow_p2;
    if (!args.es.empty())
        grid.es = args.es;
    const std::vector<std::string> cases =
        args.cases.empty() ? std::vector<std::string>{"good", "abelian", "induced", "split", "nonsplit", "additive"}
                           : args.cases;
    for (const auto& c : cases) {
        const auto parsed = verify::parse_sweep_case(c);
        if (!parsed) {
            std::cerr << "error: unknown case '" << c << "'\n";
            return 1;
        }
        grid.cases.push_back(*parsed);
    }
    grid.qs = args.qs;
    if (args.qmax > 0) {
        if (args.qmax > verify::Limits::sweep_qmax) {
            std::cerr << "error: --qmax exceeds " << verify::Limits::sweep_qmax << "\n";
            return 1;
        }
        for (const auto q : verify::prime_powers_up_to(args.qmax, false))
            if (q >= args.qmin)
                grid.qs.push_back(q);
    }

    std::vector<verify::SweepRow> rows;
    try {
        rows = verify::sweep_signs(grid);
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    std::cout << "q,e,r,case,w_iota,w\n";
    for (const auto& row : rows) {
        std::cout << row.q << ',' << (row.e ? std::to_string(*row.e) : "") << ','
                  << (row.r ? std::to_string(*row.r) : "") << ',' << verify::to_string(row.sweep_case) << ','
                  << row.w_iota.value() << ',' << row.w.value() << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root numbers of abelian varieties with real multiplication"};
    app.require_subcommand(1);

    std::string job_path, format = "table";
    bool allow_p2 = false;
    auto* eval = app.add_subcommand("eval", "Evaluate local and global root numbers for a JSON job");
    eval->add_option("job", job_path, "Job file (JSON)")->required();
    eval->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    eval->add_flag("--allow-p2-multiplicative", allow_p2, "Admit p = 2 split/non-split multiplicative places");

    VerifyArgs vargs;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check the sign formulas against the Gauss-sum oracle");
    verify_cmd->add_option("--suite", vargs.suite, "Suite to run")
        ->check(CLI::IsMember({"abelian", "induced", "fq", "sp2", "gauss", "squares", "evendim", "all"}));
    verify_cmd->add_option("--pmax", vargs.pmax, "Largest odd prime for the abelian suite (f = 1, 2)");
    verify_cmd->add_option("--qmax", vargs.qmax, "Largest q for the other suites");
    verify_cmd->add_option("--seed", vargs.seed, "Seed for randomized jobs");
    verify_cmd->add_option("--jobs", vargs.jobs, "Number of random jobs in the evendim suite");
    verify_cmd->add_option("--kernel", vargs.kernel, "Kernel")->check(CLI::IsMember({"parallel", "reference"}));

    SweepArgs sargs;
    auto* sweep = app.add_subcommand("sweep", "Tabulate local signs over a parameter grid as CSV");
    sweep->add_option("--g", sargs.g, "Dimension g");
    sweep->add_option("--case", sargs.cases, "Cases: good, abelian, induced, split, nonsplit, additive")
        ->delimiter(',');
    sweep->add_option("--q", sargs.qs, "Residue field orders")->delimiter(',');
    sweep->add_option("--qmin", sargs.qmin, "Lower end of the q range (with --qmax)");
    sweep->add_option("--qmax", sargs.qmax, "Sweep every prime power q in [qmin, qmax]");
    sweep->add_option("--e", sargs.es, "Tame inertia orders (default: all divisors > 1)")->delimiter(',');
    sweep->add_option("--r", sargs.rs, "Wild exponents")->delimiter(',');
    sweep->add_option("--a-iota", sargs.a_iota, "Per-embedding conductor for the induced case");
    sweep->add_flag("--allow-p2-multiplicative", sargs.allow_p2, "Admit p = 2 split/non-split multiplicative places");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (*eval)
        return run_eval(job_path, format, allow_p2);
    if (*verify_cmd)
        return run_verify(vargs);
    return run_sweep(sargs);
}
