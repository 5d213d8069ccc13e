#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ccomp/errors.hpp"
#include "ccomp/json_io.hpp"
#include "ccomp/locality.hpp"
#include "ccomp/matmul.hpp"
#include "ccomp/scenario.hpp"

namespace {

using namespace ccomp;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitField = 3;
constexpr int kExitVerification = 4;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw usage_error(std::string("JSON parse: ") + ex.what());
    }
    return j;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw usage_error("cannot write file '" + out_path + "'");
    out << text << "\n";
}

Scenario load_scenario(const std::string& path, std::optional<u64> seed_override) {
    Scenario sc = scenario_from_json(load_json_file(path));
    if (seed_override) {
        sc.seed = *seed_override;
        sc.adversary.seed = *seed_override;
    }
    return sc;
}

int cmd_plan(const std::string& path, std::optional<u64> seed, const std::string& out_path) {
    Scenario sc = load_scenario(path, seed);
    MultiPoly f = scenario_function(sc);
    std::vector<Point> inputs = scenario_inputs(sc, f);
    QueryPlan plan = scenario_plan(sc, f, inputs);
    write_output(plan_to_json(plan).dump(2), out_path);
    std::cerr << scheme_name(plan.tag) << ": w=" << plan.workers()
              << " baseline=" << plan.baseline_oblivious << " (s=" << plan.s << ", b=" << plan.b
              << ")\n";
    return kExitOk;
}

int cmd_run(const std::string& path, std::optional<u64> seed, const std::string& out_path,
            bool serial) {
    Scenario sc = load_scenario(path, seed);
    MultiPoly f = scenario_function(sc);
    std::vector<Point> inputs = scenario_inputs(sc, f);
    QueryPlan plan = scenario_plan(sc, f, inputs);
    RunReport report = run(plan, f, inputs, sc.adversary, serial ? Exec::serial : Exec::parallel);
    json out = report_to_json(report);
    out["plan"] = plan_to_json(plan);  // reports embed the full plan
    write_output(out.dump(2), out_path);
    std::cerr << report.scheme << ": " << report.patterns_tested << " patterns, "
              << report.failures.size() << " failures" << (report.sampled ? " (sampled)" : "")
              << "\n";
    return report.failures.empty() ? kExitOk : kExitVerification;
}

int cmd_sweep(const std::string& path, std::optional<u64> seed, const std::string& out_path,
              const std::string& format) {
    json file = load_json_file(path);
    if (!file.contains("scenarios") || !file.at("scenarios").is_array())
        throw usage_error("sweep file needs a 'scenarios' array");

    json rows = json::array();
    std::ostringstream csv;
    csv << "scheme,k,d,s,b,w,baseline,verified\n";
    bool all_ok = true;
    for (const auto& entry : file.at("scenarios")) {
        Scenario sc = scenario_from_json(entry);
        if (seed) {
            sc.seed = *seed;
            sc.adversary.seed = *seed;
        }
        json row;
        std::string verified = "true";
        try {
            MultiPoly f = scenario_function(sc);
            std::vector<Point> inputs = scenario_inputs(sc, f);
            QueryPlan plan = scenario_plan(sc, f, inputs);
            RunReport report = run(plan, f, inputs, sc.adversary);
            verified = report.failures.empty() ? "true" : "false";
            row = {{"scheme", report.scheme},        {"k", report.k},
                   {"d", f.total_degree()},          {"s", report.s},
                   {"b", report.b},                  {"w", report.workers},
                   {"baseline", report.baseline_oblivious},
                   {"patterns", report.patterns_tested},
                   {"verified", report.failures.empty()}};
            csv << report.scheme << "," << report.k << "," << f.total_degree() << ","
                << report.s << "," << report.b << "," << report.workers << ","
                << report.baseline_oblivious << "," << verified << "\n";
        } catch (const field_too_small_error& ex) {
            verified = "field-too-small";
            row = {{"scheme", sc.scheme}, {"error", ex.what()}, {"verified", false}};
            csv << sc.scheme << ",,," << sc.s << "," << sc.b << ",,," << verified << "\n";
        } catch (const std::exception& ex) {
            verified = "error";
            row = {{"scheme", sc.scheme}, {"error", ex.what()}, {"verified", false}};
            csv << sc.scheme << ",,," << sc.s << "," << sc.b << ",,," << verified << "\n";
        }
        all_ok = all_ok && verified == "true";
        rows.push_back(row);
    }
    write_output(format == "csv" ? csv.str() : json{{"rows", rows}}.dump(2), out_path);
    std::cerr << "sweep: " << rows.size() << " scenarios, " << (all_ok ? "all" : "NOT all")
              << " verified\n";
    return all_ok ? kExitOk : kExitVerification;
}

int cmd_locality(u64 q, std::size_t m, u32 d, std::size_t k, std::size_t s,
                 const std::string& out_path) {
    const auto t0 = std::chrono::steady_clock::now();
    PrimeField field(q);
    AssociatedCode code = build_associated_code(field, m, d);
    CodeLocality result = computational_locality(code, k, s);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json out{{"q", q},
             {"m", m},
             {"d", d},
             {"k", k},
             {"s", s},
             {"code_length", code.length()},
             {"codewords", code.codewords.size()},
             {"locality", result.locality},
             {"worst_index_set", result.worst_index_set},
             {"witness", result.witness},
             {"elapsed_ms", ms}};
    write_output(out.dump(2), out_path);
    std::cerr << "locality L=" << result.locality << " (" << ms << " ms)\n";
    return kExitOk;
}

int cmd_matmul(std::size_t dims, std::size_t t, std::size_t s, const std::string& scheme,
               u64 modulus, u64 seed, const std::string& out_path) {
    PrimeField field(modulus);
    SplitMix64 rng(seed);
    FieldMatrix a = random_matrix(field, dims, dims, rng);
    FieldMatrix b = random_matrix(field, dims, dims, rng);
    MatmulPlan plan = scheme == "matdot" ? matdot_plan(a, b, t, s)
                                         : polynomial_code_plan(a, b, t, s);
    MatmulVerification v = verify_matmul_all_drops(plan, matmul_direct(a, b));
    json out{{"scheme", scheme == "matdot" ? "matdot" : "polynomial_code"},
             {"dims", dims},
             {"t", t},
             {"e", plan.e},
             {"s", s},
             {"modulus", modulus},
             {"workers", plan.workers()},
             {"patterns", v.patterns},
             {"failures", v.failures},
             {"seed", seed},
             {"verified", v.failures == 0}};
    write_output(out.dump(2), out_path);
    std::cerr << "matmul " << out["scheme"].get<std::string>() << ": w=" << plan.workers() << ", "
              << v.patterns << " patterns, " << v.failures << " failures\n";
    return v.failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coded computation planner, simulator and verifier over prime fields"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, format = "json";
    std::optional<u64> seed;

    auto* plan = app.add_subcommand("plan", "build a query plan from a scenario file");
    plan->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    plan->add_option("--seed", seed, "override the scenario seed");
    plan->add_option("--out", out_path, "write output to a file instead of stdout");

    bool serial = false;
    auto* runcmd = app.add_subcommand("run", "plan, simulate and verify one scenario");
    runcmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    runcmd->add_option("--seed", seed, "override the scenario seed");
    runcmd->add_option("--out", out_path, "write output to a file instead of stdout");
    runcmd->add_flag("--serial", serial, "run the pattern sweep on one core");

    auto* sweep = app.add_subcommand("sweep", "run a file of scenarios into a threshold table");
    sweep->add_option("--scenario", scenario_path, "JSON file with a scenarios array")->required();
    sweep->add_option("--seed", seed, "override every scenario seed");
    sweep->add_option("--out", out_path, "write output to a file instead of stdout");
    sweep->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    u64 q = 5;
    std::size_t m = 1, k = 2, s = 1;
    u32 d = 2;
    auto* locality = app.add_subcommand("locality", "brute-force locality of a polynomial class");
    locality->add_option("--q", q, "field size (prime)")->required();
    locality->add_option("--m", m, "number of variables")->required();
    locality->add_option("--d", d, "total degree bound")->required();
    locality->add_option("--k", k, "number of target symbols")->required();
    locality->add_option("--s", s, "straggler tolerance")->required();
    locality->add_option("--out", out_path, "write output to a file instead of stdout");

    std::size_t dims = 4, t = 2, ms_s = 1;
    std::string mm_scheme = "matdot";
    u64 modulus = 97, mm_seed = 0;
    auto* matmul = app.add_subcommand("matmul", "verify a coded matrix multiplication scheme");
    matmul->add_option("--dims", dims, "matrix size (t must divide it)")->required();
    matmul->add_option("--t", t, "split parameter")->required();
    matmul->add_option("--s", ms_s, "straggler tolerance")->required();
    matmul->add_option("--scheme", mm_scheme, "poly or matdot")
        ->check(CLI::IsMember({"poly", "matdot"}));
    matmul->add_option("--modulus", modulus, "prime modulus");
    matmul->add_option("--seed", mm_seed, "seed for the random matrices");
    matmul->add_option("--out", out_path, "write output to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (plan->parsed()) return cmd_plan(scenario_path, seed, out_path);
        if (runcmd->parsed()) return cmd_run(scenario_path, seed, out_path, serial);
        if (sweep->parsed()) return cmd_sweep(scenario_path, seed, out_path, format);
        if (locality->parsed()) return cmd_locality(q, m, d, k, s, out_path);
        if (matmul->parsed())
            return cmd_matmul(dims, t, ms_s, mm_scheme, modulus, mm_seed, out_path);
    } catch (const ccomp::field_too_small_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitField;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
