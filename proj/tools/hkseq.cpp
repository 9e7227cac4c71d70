// Command-line surface: exact/float evaluation, identity verification
// grids, OEIS b-file checks, b-file export, and the method benchmark.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 usage or parse
// error.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hkseq/analytic.hpp"
#include "hkseq/bench.hpp"
#include "hkseq/bfile.hpp"
#include "hkseq/exec.hpp"
#include "hkseq/poly_residue.hpp"
#include "hkseq/sequence.hpp"
#include "hkseq/verify.hpp"

namespace {

using namespace hkseq;

Family family_from_string(const std::string& text) {
    if (text == "H" || text == "h") return Family::Hyperbolic;
    if (text == "K" || text == "k") return Family::Trigonometric;
    throw CLI::ValidationError("--family", "expected H or K, got '" + text + "'");
}

struct FamilyOptions {
    std::string family = "H";
    int order = 1;
    int index = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "family: H (hyperbolic) or K (trigonometric)")
            ->required();
        cmd->add_option("--order", order, "order n >= 1")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--index", index, "component index s in 1..n")->required();
    }
    FamilyParams params() const { return FamilyParams{family_from_string(family), order}; }
};

int run_eval(const FamilyOptions& opts, std::int64_t m, const std::string& method_name) {
    const Method method = method_from_name(method_name);
    const FamilyParams params = opts.params();
    switch (method) {
        case Method::Recurrence:
            std::printf("%s\n", eval_recurrence(params, opts.index, m).get_str().c_str());
            break;
        case Method::Binomial:
            std::printf("%s\n", eval_binomial(params, opts.index, m).get_str().c_str());
            break;
        case Method::Polynomial:
            std::printf("%s\n", eval_poly(params, opts.index, m).get_str().c_str());
            break;
        case Method::Float: {
            const FloatEval fe = eval_roots_of_unity(params, opts.index, m);
            std::printf("value=%.17g imag_residual=%.3g rounded=%s\n", fe.value,
                        fe.imag_residual, fe.rounded.get_str().c_str());
            break;
        }
    }
    return 0;
}

int print_report(const VerifyReport& report, ExecMode mode, double seconds, bool quiet) {
    if (!quiet) {
        for (const std::string& line : report.lines) std::printf("%s\n", line.c_str());
    }
    std::printf("verify %s: checks=%zu failures=%zu (%s, %d thread%s, %.2f s)\n",
                report.target.c_str(), report.checks, report.failures,
                mode == ExecMode::Parallel ? "parallel" : "serial",
                mode == ExecMode::Parallel ? max_threads() : 1,
                (mode == ExecMode::Parallel && max_threads() != 1) ? "s" : "",
                seconds);
    return report.ok() ? 0 : 1;
}

int run_oeis(const FamilyOptions& opts, const std::string& path, std::int64_t offset) {
    const BFile bfile = load_bfile(path);
    const OeisReport report = oeis_check(opts.params(), opts.index, bfile, offset);
    const char* id = report.sequence_id.empty() ? path.c_str() : report.sequence_id.c_str();
    if (report.compared == 0) {
        std::printf("%s: nothing to compare (offset %lld beyond file)\n", id,
                    static_cast<long long>(offset));
        return 1;
    }
    if (report.full_match()) {
        std::printf("%s: %zu/%zu terms match\n", id, report.matches, report.compared);
        return 0;
    }
    std::printf("%s: mismatch at m=%lld: file has %s, computed %s (%zu matched before)\n", id,
                static_cast<long long>(report.mismatch_m), report.expected.get_str().c_str(),
                report.actual.get_str().c_str(), report.matches);
    return 1;
}

int run_bench(const FamilyOptions& opts, const std::vector<std::int64_t>& m_list,
              const std::vector<std::string>& method_names) {
    std::vector<Method> methods;
    for (const std::string& name : method_names) methods.push_back(method_from_name(name));
    const BenchRun run = ::hkseq::run_bench(opts.params(), opts.index, m_list, methods);
    for (const BenchResult& r : run.results) {
        std::printf("%-10s %c n=%d s=%d m=%lld time=%.6fs hash=%016llx\n",
                    method_name(r.method), family_letter(r.params.family), r.params.order, r.s,
                    static_cast<long long>(r.m), r.seconds,
                    static_cast<unsigned long long>(r.value_hash));
    }
    if (!run.hashes_agree) {
        std::printf("FAIL: value hashes disagree across methods\n");
        return 1;
    }
    std::printf("all methods agree\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"difference analogs of hyperbolic/trigonometric functions of order n"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate F_s(m,n) by one method");
    FamilyOptions eval_opts;
    eval_opts.attach(eval_cmd);
    std::int64_t eval_m = 0;
    std::string eval_method = "recurrence";
    eval_cmd->add_option("--m", eval_m, "step count m >= 0")->required();
    eval_cmd->add_option("--method", eval_method,
                         "recurrence|binomial|polynomial|float (default recurrence)");

    // verify with one subtarget each
    auto* verify_cmd = app.add_subcommand("verify", "check identity grids exactly");
    verify_cmd->require_subcommand(1);
    struct VerifyTarget {
        CLI::App* cmd;
        int max_order;
        std::int64_t max_m;
        bool has_order;
    };
    std::vector<VerifyTarget> targets;
    targets.reserve(5);  // CLI11 keeps pointers into the elements
    bool serial = false;
    bool quiet = false;
    const auto add_target = [&](const char* name, const char* help, int def_order,
                                std::int64_t def_m, bool has_order = true) {
        auto* cmd = verify_cmd->add_subcommand(name, help);
        targets.push_back({cmd, def_order, def_m, has_order});
        VerifyTarget& t = targets.back();
        if (has_order) cmd->add_option("--max-order", t.max_order, "largest order n");
        cmd->add_option("--max-m", t.max_m, "largest step count m");
        cmd->add_flag("--serial", serial, "run the serial reference driver");
        cmd->add_flag("--quiet", quiet, "summary only, no per-cell lines");
        return cmd;
    };
    add_target("cross", "recurrence = binomial sum = residue-ring power", 8, 300);
    add_target("addition", "addition formulas (m and s both up to --max-m)", 6, 40);
    add_target("circulant", "circulant determinant vanishing", 8, 25);
    add_target("alternating", "alternating sums", 8, 200);
    add_target("zeros", "order-5 trigonometric zero pattern", 0, 500, false);

    // oeis
    auto* oeis_cmd = app.add_subcommand("oeis", "cross-check a sequence against a b-file");
    FamilyOptions oeis_opts;
    oeis_opts.attach(oeis_cmd);
    std::string bfile_path;
    std::int64_t offset = 0;
    oeis_cmd->add_option("--bfile", bfile_path, "path to the b-file")
        ->required()
        ->check(CLI::ExistingFile);
    oeis_cmd->add_option("--offset", offset, "b-file index of m = 0 (default 0)");

    // export
    auto* export_cmd = app.add_subcommand("export", "write a b-file to stdout");
    FamilyOptions export_opts;
    export_opts.attach(export_cmd);
    std::int64_t export_max_m = 50;
    std::string export_method = "recurrence";
    export_cmd->add_option("--max-m", export_max_m, "last step count (default 50)");
    export_cmd->add_option("--method", export_method, "evaluation method (default recurrence)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "time the evaluation methods");
    FamilyOptions bench_opts;
    bench_opts.attach(bench_cmd);
    std::vector<std::int64_t> m_list;
    std::vector<std::string> bench_methods = {"recurrence", "binomial", "polynomial"};
    bench_cmd->add_option("--m-list", m_list, "step counts, comma separated")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--methods", bench_methods, "methods, comma separated")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) return run_eval(eval_opts, eval_m, eval_method);

        if (*verify_cmd) {
            const ExecMode mode = serial ? ExecMode::Serial : ExecMode::Parallel;
            for (const VerifyTarget& t : targets) {
                if (!t.cmd->parsed()) continue;
                const auto start = std::chrono::steady_clock::now();
                VerifyReport report;
                const std::string name = t.cmd->get_name();
                if (name == "cross") report = verify_cross(t.max_order, t.max_m, mode);
                else if (name == "addition") report = verify_addition(t.max_order, t.max_m, mode);
                else if (name == "circulant") report = verify_circulant(t.max_order, t.max_m, mode);
                else if (name == "alternating")
                    report = verify_alternating(t.max_order, t.max_m, mode);
                else report = verify_zeros(t.max_m, mode);
                const double seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
                return print_report(report, mode, seconds, quiet);
            }
            return 2;
        }

        if (*oeis_cmd) return run_oeis(oeis_opts, bfile_path, offset);

        if (*export_cmd) {
            const SequenceRecord record =
                sequence(export_opts.params(), export_opts.index, export_max_m,
                         method_from_name(export_method));
            std::fputs(export_bfile(record).c_str(), stdout);
            return 0;
        }

        if (*bench_cmd) return run_bench(bench_opts, m_list, bench_methods);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
