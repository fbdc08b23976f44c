// Command-line front end: decompose / lwv / verify / apply / info.
//
// Exit codes: 0 success, 1 usage or parse error, 2 structural failure
// (theorem violation, nonexistent signature, params mismatch, failed verify
// suite), 3 I/O error, 4 capacity exceeded.

#include "parabose/decompose.hpp"
#include "parabose/exprlang.hpp"
#include "parabose/statefile.hpp"
#include "parabose/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace parabose;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_structural = 2;
constexpr int exit_io = 3;
constexpr int exit_capacity = 4;

void emit(const std::string &content, const std::string &out_path)
{
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    write_file_atomic(out_path, content);
}

int run_decompose(const ModelParams &par, int max_degree, const std::string &format,
                  const std::string &out_path, const std::string &vectors_dir,
                  unsigned long long capacity)
{
    DecompositionReport report = joint_lw_hw_table(par, max_degree, capacity);
    if (format == "json")
        emit(report_to_json(report).dump(2) + "\n", out_path);
    else if (format == "tsv")
        emit(report_to_tsv(report), out_path);
    else
        emit(report_to_pretty(report), out_path);
    if (!vectors_dir.empty()) {
        std::filesystem::create_directories(vectors_dir);
        for (const ReportRow &row : report.rows)
            write_state_file(vectors_dir + "/" + row.vector_id + ".json", row.vector);
    }
    return exit_ok;
}

int run_lwv(const ModelParams &par, const std::string &sig_text, const std::string &out_path)
{
    OspSignature sig = OspSignature::parse(sig_text, par.n);
    auto gauge = signature_bijection(par, sig);
    if (!gauge) {
        std::cerr << "signature " << sig.str() << " is not realizable at order p = " << par.p
                  << ": d - p/2 must be a nonnegative integer and entries truncated by the gauge "
                     "rank must vanish\n";
        return exit_structural;
    }
    State v = build_lwhw_vector(par, sig);
    emit(state_to_json(v).dump(2) + "\n", out_path);
    std::cerr << "gauge partner: signature " << gauge->str() << ", highest weight ("
              << join_weights(gauge->highest_weight()) << "), dimension "
              << weyl_dim(par.p, gauge->highest_weight(), par.p % 2 == 0) << "\n";
    return exit_ok;
}

int run_verify(const ModelParams &par, const std::string &suite, int max_degree,
               unsigned long long capacity)
{
    std::vector<SuiteResult> results;
    auto want = [&](const std::string &name) { return suite == "all" || suite == name; };
    if (want("algebra"))
        results.push_back(verify_algebra(par, max_degree, capacity));
    if (want("gauge"))
        results.push_back(verify_gauge(par, max_degree, capacity));
    if (want("lemma1"))
        results.push_back(verify_lemma1(par, max_degree, capacity));
    if (want("theorem1"))
        results.push_back(verify_theorem1(par, max_degree, capacity));
    if (want("corollary1"))
        results.push_back(verify_corollary1(par, max_degree, capacity));
    if (want("theorem2"))
        results.push_back(verify_theorem2(par, max_degree, capacity));
    if (results.empty()) {
        std::cerr << "unknown suite: " << suite
                  << " (expected algebra|gauge|lemma1|theorem1|corollary1|theorem2|all)\n";
        return exit_usage;
    }
    bool all_ok = true;
    for (const SuiteResult &r : results) {
        std::cout << (r.ok() ? "pass" : "FAIL") << " " << r.name << ": " << r.checks
                  << " checks, " << r.failures.size() << " failures\n";
        for (const std::string &f : r.failures)
            std::cerr << "  " << r.name << ": " << f << "\n";
        all_ok = all_ok && r.ok();
    }
    return all_ok ? exit_ok : exit_structural;
}

int run_apply(const ModelParams &cli_params, bool params_given, const std::string &expr_text,
              const std::string &in_path, const std::string &out_path)
{
    State v = read_state_file(in_path);
    if (params_given && !(v.params == cli_params)) {
        std::cerr << "state file has (n,p) = (" << v.params.n << "," << v.params.p
                  << "), which differs from the command line\n";
        return exit_structural;
    }
    OperatorExpr expr = OperatorExpr::parse(expr_text, v.params);
    emit(state_to_json(expr.apply(v)).dump(2) + "\n", out_path);
    return exit_ok;
}

int run_info(const ModelParams &par, std::optional<int> degree)
{
    std::cout << "n = " << par.n << ", p = " << par.p << ", q = " << par.q()
              << ", eps = " << par.eps() << "\n";
    std::cout << "orbital modes: " << par.total_modes() << " (per alpha: " << par.q()
              << " plus, " << par.q() << " minus" << (par.eps() ? ", 1 odd" : "") << ")\n";
    std::cout << "spin space dimension: " << (1 << par.q()) << "\n";
    std::cout << "gauge group: " << (par.eps() ? "Spin(" : "Pin(") << par.p << ")\n";
    std::cout << "osp(1|" << 2 * par.n << ") positive roots:";
    for (const std::string &r : osp_positive_roots(par.n))
        std::cout << " " << r;
    std::cout << "\nso(" << par.p << ") positive roots:";
    auto roots = GaugeRootLabel::positive(par);
    if (roots.empty())
        std::cout << " none";
    for (const auto &r : roots)
        std::cout << " " << r.str();
    std::cout << "\n";
    if (degree)
        std::cout << "degree-" << *degree << " shell: " << level_count(par, *degree)
                  << " kets, energy " << (HalfInt(par.n * par.p) + HalfInt::of_int(*degree)).str()
                  << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact decomposition of covariant Green-ansatz representations of osp(1|2n)"};
    app.require_subcommand(1);

    int n = 1, p = 1, max_degree = 2;
    std::string format = "pretty", out_path, vectors_dir, sig_text, suite = "all";
    std::string expr_text, in_path;
    unsigned long long capacity = default_capacity();
    std::optional<int> info_degree;
    unsigned long long seed = 0;

    auto add_np = [&](CLI::App *cmd) {
        cmd->add_option("-n,--pairs", n, "number of parabose pairs")->required()->check(
            CLI::PositiveNumber);
        cmd->add_option("-p,--order", p, "order of the ansatz")->required()->check(
            CLI::PositiveNumber);
        cmd->add_option("--capacity", capacity, "shell-size bound (also PARABOSE_CAPACITY)");
    };

    CLI::App *decompose = app.add_subcommand("decompose", "joint lowest/highest weight table");
    add_np(decompose);
    decompose->add_option("--max-degree", max_degree, "highest degree shell to scan");
    decompose->add_option("--format", format, "json | tsv | pretty")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}));
    decompose->add_option("-o,--output", out_path, "output path (stdout when omitted)");
    decompose->add_option("--vectors-dir", vectors_dir,
                          "directory for the lowest-weight vector state files");

    CLI::App *lwv = app.add_subcommand("lwv", "explicit lowest-weight vector for a signature");
    add_np(lwv);
    lwv->add_option("--sig", sig_text, "osp signature \"d;s1,...,s_{n-1}\"")->required();
    lwv->add_option("-o,--output", out_path, "output path (stdout when omitted)");

    CLI::App *verify = app.add_subcommand("verify", "run a property suite");
    add_np(verify);
    verify->add_option("--suite", suite,
                       "algebra | gauge | lemma1 | theorem1 | corollary1 | theorem2 | all");
    verify->add_option("--max-degree", max_degree, "degree range of the suite");
    verify->add_option("--seed", seed, "seed for randomized samples (reserved)");

    CLI::App *apply = app.add_subcommand("apply", "apply an operator expression to a state file");
    apply->add_option("expr", expr_text, "operator expression, rightmost applied first")
        ->required();
    apply->add_option("input", in_path, "input state file")->required();
    apply->add_option("-o,--output", out_path, "output path (stdout when omitted)");
    apply->add_option("-n,--pairs", n, "expected n (validated against the file)");
    apply->add_option("-p,--order", p, "expected p (validated against the file)");

    CLI::App *info = app.add_subcommand("info", "Cartan data, roots, shell dimensions");
    add_np(info);
    info->add_option("--degree", info_degree, "also print the shell size at this degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    bool apply_np_given = apply->count("-n") > 0 || apply->count("-p") > 0;

    try {
        if (decompose->parsed())
            return run_decompose(ModelParams(n, p), max_degree, format, out_path, vectors_dir,
                                 capacity);
        if (lwv->parsed())
            return run_lwv(ModelParams(n, p), sig_text, out_path);
        if (verify->parsed())
            return run_verify(ModelParams(n, p), suite, max_degree, capacity);
        if (apply->parsed())
            return run_apply(ModelParams(n, p), apply_np_given, expr_text, in_path, out_path);
        if (info->parsed())
            return run_info(ModelParams(n, p), info_degree);
    } catch (const capacity_error &e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return exit_capacity;
    } catch (const theorem_violation_error &e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return exit_structural;
    } catch (const params_mismatch_error &e) {
        std::cerr << "params mismatch: " << e.what() << "\n";
        return exit_structural;
    } catch (const std::domain_error &e) {
        std::cerr << e.what() << "\n";
        return exit_structural;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "malformed state file: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::runtime_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
    return exit_usage;
}
