#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <semaphore>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cdtorus/linalg.hpp"
#include "cdtorus/verify.hpp"

namespace {

using cdtorus::VerificationReport;
using cdtorus::VerifyOptions;

std::uint64_t seed_from_env() {
    const char* raw = std::getenv("CDTORUS_SEED");
    if (!raw) return cdtorus::kDefaultSeed;
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        std::cerr << "warning: ignoring unparsable CDTORUS_SEED\n";
        return cdtorus::kDefaultSeed;
    }
}

struct CommonFlags {
    std::vector<std::string> cases;
    std::int64_t p = -1;
    std::int64_t q = -1;
    std::size_t max_dim = cdtorus::kDefaultMaxRealDim;
    std::uint64_t mod_prime = 0;
    bool exact = false;
    bool no_timing = false;
    std::string json_path;
    unsigned jobs = 0;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_pq) {
    if (with_pq) {
        cmd->add_option("--p", f.p, "quaternion factor count (single case)");
        cmd->add_option("--q", f.q, "octonion factor count (single case)");
        cmd->add_option("--case", f.cases, "case as p,q (repeatable)");
        cmd->add_option("--mod-prime", f.mod_prime,
                        "pin the first modular verification prime");
        cmd->add_flag("--exact", f.exact, "force exact rational elimination");
        cmd->add_flag("--no-timing", f.no_timing, "suppress timings for stable output");
        cmd->add_option("--jobs", f.jobs, "max concurrent cases");
    }
    cmd->add_option("--max-dim", f.max_dim, "real dimension guard");
}

std::vector<std::pair<std::size_t, std::size_t>> resolve_cases(const CommonFlags& f) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& c : f.cases) {
        unsigned long long cp = 0, cq = 0;
        char tail = 0;
        if (std::sscanf(c.c_str(), "%llu,%llu%c", &cp, &cq, &tail) != 2)
            throw CLI::ValidationError("--case expects p,q, got '" + c + "'");
        out.emplace_back(cp, cq);
    }
    if (f.p >= 0 || f.q >= 0)
        out.emplace_back(f.p >= 0 ? f.p : 0, f.q >= 0 ? f.q : 0);
    if (out.empty())
        out = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}};
    return out;
}

std::vector<VerificationReport> run_cases(
    const std::vector<std::pair<std::size_t, std::size_t>>& cases,
    const CommonFlags& f, std::uint64_t seed) {
    VerifyOptions opts;
    opts.exact = f.exact;
    if (f.mod_prime != 0) opts.mod_prime = f.mod_prime;
    opts.max_real_dim = f.max_dim;
    opts.seed = seed;

    unsigned jobs = f.jobs != 0 ? f.jobs : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    if (jobs > 1024) jobs = 1024;
    std::counting_semaphore<1024> sem(jobs);

    std::vector<std::future<VerificationReport>> futs;
    futs.reserve(cases.size());
    for (auto [cp, cq] : cases) {
        futs.push_back(std::async(std::launch::async, [cp, cq, opts, &sem] {
            sem.acquire();
            try {
                VerificationReport rep = cdtorus::run_verification(cp, cq, opts);
                sem.release();
                return rep;
            } catch (...) {
                sem.release();
                throw;
            }
        }));
    }
    std::vector<VerificationReport> reports;
    reports.reserve(futs.size());
    for (auto& fut : futs) reports.push_back(fut.get());
    return reports;
}

void print_reports(const std::vector<VerificationReport>& reports, bool no_timing) {
    for (const auto& rep : reports) {
        std::cout << "B(" << rep.p << "," << rep.q << ") version " << rep.version
                  << (rep.all_pass() ? "  PASS" : "  FAIL") << "\n";
        for (const auto& c : rep.checks) {
            std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": "
                      << c.actual;
            if (c.actual != c.expected) std::cout << " (expected " << c.expected << ")";
            if (!no_timing) std::cout << "  [" << c.millis << " ms]";
            std::cout << "\n";
        }
    }
}

int report_failures(const std::vector<VerificationReport>& reports) {
    int failures = 0;
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) {
            if (!c.pass) {
                std::cerr << "FAIL B(" << rep.p << "," << rep.q << ") " << c.name
                          << ": " << c.actual << "\n";
                ++failures;
            }
        }
    }
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of tensor-algebra torus endomorphism claims"};
    app.require_subcommand(1);

    CommonFlags vf, tf, rf;
    std::string table_spec, report_path;

    CLI::App* verify = app.add_subcommand("verify", "run the verification pipeline");
    add_common(verify, vf, true);
    verify->add_option("--json", vf.json_path, "also write a JSON report");

    CLI::App* table = app.add_subcommand("table", "dump a structure-constant table as CSV");
    table->add_option("spec", table_spec, "one of R, C, H, O, B(p,q)")->required();
    add_common(table, tf, false);

    CLI::App* report = app.add_subcommand("report", "write a JSON report file");
    add_common(report, rf, true);
    report->add_option("output", report_path, "output JSON path")->required();

    CLI11_PARSE(app, argc, argv);
    const std::uint64_t seed = seed_from_env();

    try {
        if (verify->parsed()) {
            if (vf.mod_prime != 0 && !cdtorus::is_prime_u64(vf.mod_prime)) {
                std::cerr << "error: --mod-prime " << vf.mod_prime << " is not prime\n";
                return 2;
            }
            const auto reports = run_cases(resolve_cases(vf), vf, seed);
            print_reports(reports, vf.no_timing);
            if (!vf.json_path.empty()) {
                std::ofstream out(vf.json_path);
                if (!out) {
                    std::cerr << "error: cannot write " << vf.json_path << "\n";
                    return 2;
                }
                out << cdtorus::reports_to_json(reports, !vf.no_timing);
            }
            return report_failures(reports) == 0 ? 0 : 1;
        }
        if (table->parsed()) {
            std::cout << cdtorus::table_csv(
                cdtorus::table_from_spec(table_spec, tf.max_dim));
            return 0;
        }
        if (report->parsed()) {
            if (rf.mod_prime != 0 && !cdtorus::is_prime_u64(rf.mod_prime)) {
                std::cerr << "error: --mod-prime " << rf.mod_prime << " is not prime\n";
                return 2;
            }
            std::vector<std::pair<std::size_t, std::size_t>> cases;
            if (!rf.cases.empty() || rf.p >= 0 || rf.q >= 0) cases = resolve_cases(rf);
            const auto reports = run_cases(cases, rf, seed);
            std::ofstream out(report_path);
            if (!out) {
                std::cerr << "error: cannot write " << report_path << "\n";
                return 2;
            }
            out << cdtorus::reports_to_json(reports, !rf.no_timing);
            return report_failures(reports) == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
