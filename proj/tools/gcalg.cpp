// gcalg command-line front end.
//
//   verify  -- run the full verification suite (algebra laws, gamma
//              identities, KG recovery, Adler postulates, plane waves)
//   fig1    -- emit the psi1/psi2 surface grid as CSV
//   props   -- algebra-law report for a structure-constant table
//   polar   -- convert a GC number to polar form
//
// Exit codes: 0 success, 1 check failure, 2 usage/parse error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gcalg/fig1.hpp"
#include "gcalg/serialization.hpp"
#include "gcalg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int cmd_verify(std::size_t samples, std::uint64_t seed, const std::string& format) {
    gcalg::VerificationReport rep =
        gcalg::run_verification(*gcalg::make_gc_table(), samples, seed);
    if (format == "json") {
        std::cout << gcalg::to_json(rep).dump(2) << "\n";
    } else {
        std::size_t ok = 0;
        for (const gcalg::CheckResult& c : rep.checks) {
            std::cout << (c.as_predicted ? "PASS" : "FAIL") << "  " << c.name;
            if (c.expected_failure) std::cout << "  [expected law failure]";
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
            ok += c.as_predicted;
        }
        std::cout << ok << "/" << rep.checks.size() << " checks as predicted\n";
    }
    return rep.all_ok() ? kExitOk : kExitCheckFailure;
}

int cmd_fig1(const gcalg::Fig1Config& cfg, const std::string& out_path) {
    std::string csv = gcalg::fig1_csv(gcalg::fig1_rows(cfg));
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitIo;
    }
    out << csv;
    return out.good() ? kExitOk : kExitIo;
}

int cmd_props(const std::string& table_path) {
    gcalg::TablePtr table;
    if (table_path.empty()) {
        table = gcalg::make_gc_table();
    } else {
        std::ifstream in(table_path);
        if (!in) {
            std::cerr << "error: cannot open " << table_path << "\n";
            return kExitIo;
        }
        try {
            table = gcalg::table_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::parse_error& e) {
            std::cerr << "parse error in " << table_path << ": " << e.what() << "\n";
            return kExitUsage;
        } catch (const std::exception& e) {
            std::cerr << "invalid table in " << table_path << ": " << e.what() << "\n";
            return kExitUsage;
        }
    }

    auto comm = gcalg::check_commutative(*table);
    auto assoc = gcalg::check_associative(*table);
    auto zd = gcalg::find_zero_divisors(*table);
    auto pa = gcalg::check_power_associative_sampled(*table, 1000, 42);

    std::cout << "commutative: " << (comm.empty() ? "yes" : "NO") << "\n";
    for (const auto& w : comm) std::cout << "  witness: " << w.detail << "\n";
    std::cout << "associative: " << (assoc.empty() ? "yes" : "NO") << "\n";
    for (std::size_t k = 0; k < assoc.size() && k < 4; ++k)
        std::cout << "  witness: " << assoc[k].detail << "\n";
    if (assoc.size() > 4)
        std::cout << "  (" << assoc.size() - 4 << " more witnesses)\n";
    std::cout << "basis zero divisors: ";
    if (zd.empty()) {
        std::cout << "none\n";
    } else {
        for (const auto& w : zd)
            std::cout << "(" << table->basis_name(w.operands[0]) << ","
                      << table->basis_name(w.operands[1]) << ") ";
        std::cout << "\n";
    }
    std::cout << "power associative (1000 samples): " << (pa.empty() ? "yes" : "NO")
              << "\n";
    return kExitOk;
}

int cmd_polar(const std::string& triple) {
    gcalg::GcNumber q;
    char c1 = 0, c2 = 0;
    std::istringstream is(triple);
    if (!(is >> q.a >> c1 >> q.b >> c2 >> q.c) || c1 != ',' || c2 != ',') {
        std::cerr << "error: expected A,B,C\n";
        return kExitUsage;
    }
    gcalg::PolarGc p = gcalg::to_polar(q);
    gcalg::GcNumber back = gcalg::from_polar(p);
    double err = gcalg::norm(back - q);
    std::cout << "q     = " << gcalg::format_gc(q) << "\n";
    std::cout << "polar = " << gcalg::to_json(p).dump() << "\n";
    std::cout << "round-trip error = " << gcalg::format_double(err) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GC algebra and two-dimensional Dirac equation toolkit"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
    std::string format = "text";
    verify->add_option("--samples", samples, "random probes per sampled check")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* fig1 = app.add_subcommand("fig1", "emit the psi1/psi2 grid CSV");
    gcalg::Fig1Config cfg;
    std::string branch = "both";
    std::string out_path;
    fig1->add_option("--m-min", cfg.m_min);
    fig1->add_option("--m-max", cfg.m_max);
    fig1->add_option("--p-min", cfg.p_min);
    fig1->add_option("--p-max", cfg.p_max);
    fig1->add_option("--m-steps", cfg.m_steps)->check(CLI::PositiveNumber);
    fig1->add_option("--p-steps", cfg.p_steps)->check(CLI::PositiveNumber);
    fig1->add_option("--branch", branch, "energy branch")
        ->check(CLI::IsMember({"positive", "negative", "both"}));
    fig1->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* props = app.add_subcommand("props", "algebra-law report for a table");
    std::string table_path;
    props->add_option("--table", table_path, "structure-constant table JSON");

    auto* polar = app.add_subcommand("polar", "convert a GC number to polar form");
    std::string triple;
    polar->add_option("number", triple, "comma-separated A,B,C")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(samples, seed, format);
        if (*fig1) {
            cfg.branch = branch == "positive"  ? gcalg::BranchSelection::Positive
                         : branch == "negative" ? gcalg::BranchSelection::Negative
                                                : gcalg::BranchSelection::Both;
            return cmd_fig1(cfg, out_path);
        }
        if (*props) return cmd_props(table_path);
        if (*polar) return cmd_polar(triple);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
