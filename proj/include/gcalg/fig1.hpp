#pragma once

// Surface-grid emitter for the spinor component ratio psi1/psi2 as a
// function of (m, p). Output is deterministic CSV; plotting is left to
// external tools.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcalg/dirac.hpp"

namespace gcalg {

enum class BranchSelection { Positive, Negative, Both };

struct Fig1Config {
    double m_min = 0.5;
    double m_max = 5.0;
    double p_min = -5.0;
    double p_max = 5.0;
    std::size_t m_steps = 50;
    std::size_t p_steps = 50;
    BranchSelection branch = BranchSelection::Both;
};

struct Fig1Row {
    double m;
    double p;
    EnergyBranch branch;
    double ratio;
};

namespace detail {
inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) throw std::invalid_argument("linspace: need at least one step");
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(lo + (hi - lo) * static_cast<double>(k) /
                               static_cast<double>(n - 1));
    return out;
}
}  // namespace detail

// Row-major over the m x p grid, branch innermost.
inline std::vector<Fig1Row> fig1_rows(const Fig1Config& cfg) {
    if (!(cfg.m_min > 0.0))
        throw std::domain_error("fig1: m range must be strictly positive");
    if (cfg.m_max < cfg.m_min || cfg.p_max < cfg.p_min)
        throw std::domain_error("fig1: empty range");
    std::vector<EnergyBranch> branches;
    if (cfg.branch != BranchSelection::Negative)
        branches.push_back(EnergyBranch::Positive);
    if (cfg.branch != BranchSelection::Positive)
        branches.push_back(EnergyBranch::Negative);
    std::vector<Fig1Row> rows;
    rows.reserve(cfg.m_steps * cfg.p_steps * branches.size());
    for (double m : detail::linspace(cfg.m_min, cfg.m_max, cfg.m_steps))
        for (double p : detail::linspace(cfg.p_min, cfg.p_max, cfg.p_steps))
            for (EnergyBranch br : branches)
                rows.push_back({m, p, br, spinor_ratio(m, p, br)});
    return rows;
}

// 17 significant digits, '.' decimal separator.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fig1_csv(const std::vector<Fig1Row>& rows) {
    std::string out = "m,p,branch,ratio\n";
    for (const Fig1Row& r : rows) {
        out += format_double(r.m);
        out += ',';
        out += format_double(r.p);
        out += ',';
        out += (r.branch == EnergyBranch::Positive ? "positive" : "negative");
        out += ',';
        out += format_double(r.ratio);
        out += '\n';
    }
    return out;
}

}  // namespace gcalg
