#pragma once

// The full verification suite: algebra laws on the structure-constant
// table, gamma-matrix identities, Klein-Gordon symbol recovery, Adler
// postulates, Euler formula checks, SGC closure, plane-wave residuals
// and the operator associator probes. Expected failures are first-class:
// the suite passes only when each law that must fail does fail.

#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gcalg/dirac.hpp"
#include "gcalg/fig1.hpp"
#include "gcalg/gc.hpp"
#include "gcalg/matrix.hpp"
#include "gcalg/structure_constants.hpp"

namespace gcalg {

struct CheckResult {
    std::string name;
    bool expected_failure = false;  // the law is predicted to fail
    bool as_predicted = false;      // outcome matches the prediction
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_ok() const {
        for (const CheckResult& c : checks)
            if (!c.as_predicted) return false;
        return true;
    }
};

namespace detail {

inline void push(VerificationReport& rep, std::string name, bool ok,
                 std::string detail = "", bool expected_failure = false) {
    rep.checks.push_back({std::move(name), expected_failure, ok, std::move(detail)});
}

inline bool table_matches_gc_rules(const StructureConstantsTable& t, std::string& why) {
    if (t.dim() != 3) {
        why = "dim != 3";
        return false;
    }
    auto tbl = std::make_shared<StructureConstantsTable>(t);
    auto expect = [&](std::size_t a, std::size_t b, double ea, double eb, double ec) {
        auto prod = mul(AlgebraElement::basis(tbl, a), AlgebraElement::basis(tbl, b));
        return prod[0] == ea && prod[1] == eb && prod[2] == ec;
    };
    if (!expect(1, 1, -1, 0, 0)) { why = "i*i != -1"; return false; }
    if (!expect(2, 2, -1, 0, 0)) { why = "j*j != -1"; return false; }
    if (!expect(1, 2, 0, 0, 0)) { why = "i*j != 0"; return false; }
    if (!expect(2, 1, 0, 0, 0)) { why = "j*i != 0"; return false; }
    return true;
}

}  // namespace detail

inline VerificationReport run_verification(const StructureConstantsTable& gc_table,
                                           std::size_t samples = 1000,
                                           std::uint64_t seed = 42) {
    VerificationReport rep;
    constexpr double pi = std::numbers::pi;

    // Table-driven algebra laws.
    {
        std::string why;
        detail::push(rep, "GC product table (ii=jj=-1, ij=ji=0)",
                     detail::table_matches_gc_rules(gc_table, why), why);
    }
    detail::push(rep, "GC commutativity (basis-exhaustive)",
                 check_commutative(gc_table).empty());
    {
        auto w = check_associative(gc_table);
        bool has_iij = false;
        for (const auto& x : w)
            has_iij |= (x.operands == std::vector<std::size_t>{1, 1, 2});
        detail::push(rep, "GC associativity fails with witness (i,i,j)",
                     !w.empty() && has_iij,
                     w.empty() ? "no witnesses found" : w.front().detail,
                     /*expected_failure=*/true);
    }
    {
        auto zd = find_zero_divisors(gc_table);
        bool exact = zd.size() == 2;
        for (const auto& w : zd)
            exact &= (w.operands == std::vector<std::size_t>{1, 2} ||
                      w.operands == std::vector<std::size_t>{2, 1});
        detail::push(rep, "GC basis zero divisors are exactly {(i,j),(j,i)}", exact, "",
                     /*expected_failure=*/true);
    }
    detail::push(rep, "GC power associativity (sampled)",
                 check_power_associative_sampled(gc_table, samples, seed).empty());

    // Gamma identities.
    {
        auto g = gammas();
        const char* names[4] = {"g0", "g1", "g2", "g3"};
        GcMatrix id = GcMatrix::identity();
        bool sq_ok = mat_mul(g[0], g[0]) == (-1.0 * id);
        detail::push(rep, "gamma0^2 = -I", sq_ok);
        for (int k = 1; k < 4; ++k)
            detail::push(rep, std::string(names[k]) + "^2 = I",
                         mat_mul(g[k], g[k]) == id);
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                detail::push(rep,
                             std::string("{") + names[a] + "," + names[b] + "} = 0",
                             anticommutator(g[a], g[b]) == GcMatrix::zero());
    }

    // Klein-Gordon symbol recovery.
    {
        DiffOpPoly h = build_dirac_operator();
        DiffOpPoly h2 = compose_symbol(h, h);
        DiffOpPoly kg = kg_symbol();
        bool ok = h2.terms().size() == kg.terms().size();
        for (const auto& [idx, coeff] : kg.terms())
            ok = ok && h2.coeff(idx) == coeff;
        detail::push(rep, "KG symbol recovery: H*H = diag(dx^2+dy^2+dz^2-dt^2)", ok);
    }

    // Adler postulates.
    {
        AdlerReport a = adler_check(samples, seed);
        detail::push(rep, "Adler postulate 1 (N(0)=0)", a.p1.holds);
        detail::push(rep, "Adler postulate 2 (positivity)", a.p2.holds);
        detail::push(rep, "Adler postulate 3 (homogeneity)", a.p3.holds);
        detail::push(rep, "Adler postulate 4 (triangle)", a.p4.holds);
        detail::push(rep, "Adler postulate 5 on GC: FAILS with witness (i,j)",
                     !a.p5_gc.holds && a.p5_gc.discrepancy >= 1.0 - 1e-12,
                     a.p5_gc.witness, /*expected_failure=*/true);
        detail::push(rep, "Adler postulate 5 on SGC: holds", a.p5_sgc.holds,
                     a.p5_sgc.witness);
    }

    // Euler formula.
    {
        bool ok = true;
        for (int a = 0; a < 100 && ok; ++a)
            for (int b = 0; b < 32 && ok; ++b) {
                double theta = -10.0 + 20.0 * a / 99.0;
                double phi = 2.0 * pi * b / 32.0;
                ok = norm(exp_series(theta, phi) - exp_closed(theta, phi)) <= 1e-10;
            }
        detail::push(rep, "exp_series matches exp_closed on 100x32 grid", ok);

        auto w = euler_inequality_witness(1.0, pi / 4.0);
        detail::push(rep, "Euler factorization inequality at (theta=1, phi=pi/4)",
                     w.discrepancy > 0.1, "", /*expected_failure=*/true);
        detail::push(rep, "Euler factorization degenerate cases (phi=0, theta=0)",
                     euler_inequality_witness(0.7, 0.0).discrepancy == 0.0 &&
                         euler_inequality_witness(0.0, 1.3).discrepancy == 0.0);
    }

    // SGC closure and associativity.
    {
        std::mt19937_64 rng(seed + 1);
        std::uniform_real_distribution<double> dist(-5.0, 5.0);
        bool prod_ok = true, assoc_ok = true;
        for (std::size_t s = 0; s < samples; ++s) {
            double phi = std::abs(dist(rng));
            SgcNumber x{std::abs(dist(rng)), dist(rng), phi};
            SgcNumber y{std::abs(dist(rng)), dist(rng), phi};
            SgcNumber z{std::abs(dist(rng)), dist(rng), phi};
            prod_ok &= approx_equal(sgc_mul(x, y).embed(), x.embed() * y.embed(),
                                    1e-12 * std::max(1.0, x.R * y.R));
            SgcNumber lhs = sgc_mul(sgc_mul(x, y), z);
            SgcNumber rhs = sgc_mul(x, sgc_mul(y, z));
            assoc_ok &= std::abs(lhs.R - rhs.R) <=
                            1e-12 * std::max(1.0, std::abs(lhs.R)) &&
                        std::abs(lhs.theta - rhs.theta) <=
                            1e-12 * std::max(1.0, std::abs(lhs.theta));
            GcNumber el = (x.embed() * y.embed()) * z.embed();
            GcNumber er = x.embed() * (y.embed() * z.embed());
            assoc_ok &= approx_equal(el, er, 1e-12 * std::max(1.0, norm(el)));
        }
        detail::push(rep, "SGC product formula matches GC multiplication", prod_ok);
        detail::push(rep, "SGC associativity (sampled triples)", assoc_ok);
    }

    // Plane-wave residuals over the (m, p) grid, both branches.
    {
        bool analytic_ok = true;
        double max_fd = 0.0, max_fd_half = 0.0;
        for (int a = 0; a < 20; ++a)
            for (int b = 0; b < 20; ++b) {
                double m = 0.1 + (5.0 - 0.1) * a / 19.0;
                double p = -5.0 + 10.0 * b / 19.0;
                for (EnergyBranch br : {EnergyBranch::Positive, EnergyBranch::Negative}) {
                    PlaneWave w(m, p, br);
                    ResidualReport r = residual_check(w, 20, seed + a * 40 + b);
                    analytic_ok &= r.max_analytic < 1e-10;
                    max_fd = std::max(max_fd, r.max_fd);
                    max_fd_half = std::max(max_fd_half, r.max_fd_half);
                }
            }
        // Order-2 convergence is judged on the grid-wide maximum residual;
        // at h = 1e-4 the cells with near-zero truncation coefficient sit
        // at the double-precision rounding floor and carry no signal.
        double ratio = max_fd_half > 0.0 ? max_fd / max_fd_half : 0.0;
        detail::push(rep, "plane-wave analytic residual < 1e-10 on 20x20 grid",
                     analytic_ok);
        detail::push(rep, "plane-wave FD residual converges at order 2",
                     ratio > 3.5 && ratio < 4.5);
    }

    // Pointwise H(H psi) = m^2 psi on the plane wave (span{1,j} values).
    {
        bool ok = true;
        DiffOpPoly h2 = compose_symbol(build_dirac_operator(), build_dirac_operator());
        for (double m : {0.5, 1.0, 3.0})
            for (double p : {-2.0, 0.0, 4.0}) {
                PlaneWave w(m, p, EnergyBranch::Positive);
                GcVector2 lhs = apply_op_to_plane_wave(h2, w, 0.3, -0.7);
                GcVector2 rhs = (m * m) * eval_plane_wave(w, 0.3, -0.7);
                ok &= norm(lhs - rhs) <= 1e-10 * std::max(1.0, norm(rhs));
            }
        detail::push(rep, "pointwise H(H psi) = m^2 psi on plane waves", ok);
    }

    // Operator associator probes.
    {
        auto g = gammas();
        bool found = false;
        for (const GcMatrix& a : g)
            for (const GcMatrix& b : g)
                for (GcNumber q : {GcNumber::one(), GcNumber::i(), GcNumber::j()})
                    for (GcVector2 v : {GcVector2{q, {}}, GcVector2{{}, q}})
                        found |= operator_associator_probe(a, b, v).second > 0.0;
        detail::push(rep, "operator associator witness exists over gamma pairs", found,
                     "", /*expected_failure=*/true);

        // Confined to span{1,j} everything composes: entries in {0,+-1,+-j}.
        std::mt19937_64 rng(seed + 2);
        std::uniform_real_distribution<double> dist(-3.0, 3.0);
        bool none = true;
        std::array<GcMatrix, 3> jfam = {gamma0(), gamma1(), gamma3()};
        for (std::size_t s = 0; s < samples; ++s) {
            const GcMatrix& a = jfam[s % 3];
            const GcMatrix& b = jfam[(s / 3) % 3];
            GcVector2 v{{dist(rng), 0.0, dist(rng)}, {dist(rng), 0.0, dist(rng)}};
            none &= operator_associator_probe(a, b, v).second <= 1e-12;
        }
        detail::push(rep, "no associator witness within span{1,j}", none);
    }

    return rep;
}

}  // namespace gcalg
