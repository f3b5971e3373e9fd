#pragma once

// The Dirac operator H = C_mu d_mu as a polynomial in the commuting
// derivative symbols (d_t, d_x, d_y, d_z) with GcMatrix coefficients,
// the Klein-Gordon target symbol, and the 1+1 dimensional plane-wave
// solution with its residual checks.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "gcalg/matrix.hpp"

namespace gcalg {

// Derivative orders in (t, x, y, z).
using DerivIndex = std::array<int, 4>;

inline bool is_zero(const GcMatrix& m) {
    for (const GcNumber& q : m.e)
        if (!(q == GcNumber{})) return false;
    return true;
}

class DiffOpPoly {
public:
    using TermMap = std::map<DerivIndex, GcMatrix>;

    DiffOpPoly() = default;

    void add_term(const DerivIndex& idx, const GcMatrix& coeff) {
        for (int o : idx)
            if (o < 0) throw std::invalid_argument("diff op: negative derivative order");
        auto it = terms_.find(idx);
        GcMatrix sum = (it == terms_.end()) ? coeff : it->second + coeff;
        if (is_zero(sum))
            terms_.erase(idx);
        else
            terms_[idx] = sum;
    }

    const TermMap& terms() const { return terms_; }

    GcMatrix coeff(const DerivIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? GcMatrix::zero() : it->second;
    }

private:
    TermMap terms_;
};

// Formal product of two constant-coefficient operators. Derivative
// symbols commute, so multi-indices add componentwise; coefficients
// multiply with mat_mul, which makes the ordered pair (P term, Q term)
// explicit -- the cross coefficient of d_mu d_nu ends up as the
// anticommutator {P_mu, Q_nu} contribution.
inline DiffOpPoly compose_symbol(const DiffOpPoly& p, const DiffOpPoly& q) {
    DiffOpPoly out;
    for (const auto& [ip, cp] : p.terms())
        for (const auto& [iq, cq] : q.terms()) {
            DerivIndex sum;
            for (int k = 0; k < 4; ++k) sum[k] = ip[k] + iq[k];
            out.add_term(sum, mat_mul(cp, cq));
        }
    return out;
}

// H = C_x d_x + C_y d_y + C_z d_z + C_t d_t with (C_t, C_x, C_y, C_z) =
// (gamma0, gamma1, gamma2, gamma3). The mass term is kept separate.
inline DiffOpPoly build_dirac_operator() {
    DiffOpPoly h;
    h.add_term({1, 0, 0, 0}, gamma0());
    h.add_term({0, 1, 0, 0}, gamma1());
    h.add_term({0, 0, 1, 0}, gamma2());
    h.add_term({0, 0, 0, 1}, gamma3());
    return h;
}

// diag(d_x^2 + d_y^2 + d_z^2 - d_t^2)
inline DiffOpPoly kg_symbol() {
    DiffOpPoly kg;
    kg.add_term({0, 2, 0, 0}, GcMatrix::identity());
    kg.add_term({0, 0, 2, 0}, GcMatrix::identity());
    kg.add_term({0, 0, 0, 2}, GcMatrix::identity());
    kg.add_term({2, 0, 0, 0}, -1.0 * GcMatrix::identity());
    return kg;
}

enum class EnergyBranch { Positive, Negative };

// psi(x, t) = N ((E+p)/m, 1)^T e^{j(px - Et)}, E = +-sqrt(p^2 + m^2).
struct PlaneWave {
    double m;
    double p;
    EnergyBranch branch;
    double N = 1.0;

    PlaneWave(double mass, double momentum, EnergyBranch br, double normalization = 1.0)
        : m(mass), p(momentum), branch(br), N(normalization) {
        if (!(m > 0.0)) throw std::domain_error("plane wave: m must be positive");
        if (!std::isfinite(p)) throw std::domain_error("plane wave: p must be finite");
    }

    double energy() const {
        double e = std::hypot(p, m);
        return branch == EnergyBranch::Positive ? e : -e;
    }
};

inline double spinor_ratio(double m, double p, EnergyBranch branch) {
    if (!(m > 0.0)) throw std::domain_error("spinor_ratio: m must be positive");
    double e = branch == EnergyBranch::Positive ? std::hypot(p, m) : -std::hypot(p, m);
    return (e + p) / m;
}

// Values of the plane wave live in span{1, j}; represent that plane as
// std::complex with j as the imaginary unit.
inline GcNumber from_j_plane(std::complex<double> z) { return {z.real(), 0.0, z.imag()}; }
inline std::complex<double> to_j_plane(GcNumber q) { return {q.a, q.c}; }

inline GcVector2 eval_plane_wave(const PlaneWave& w, double x, double t) {
    double phase = w.p * x - w.energy() * t;
    std::complex<double> ph{std::cos(phase), std::sin(phase)};
    double ratio = spinor_ratio(w.m, w.p, w.branch);
    return {from_j_plane(w.N * ratio * ph), from_j_plane(w.N * ph)};
}

// Applies a constant-coefficient operator to the plane wave at (x, t)
// using the exact derivatives of the exponential: d_x multiplies by jp,
// d_t by -jE, and d_y = d_z = 0. Each coefficient entry multiplies the
// differentiated component on the left.
inline GcVector2 apply_op_to_plane_wave(const DiffOpPoly& op, const PlaneWave& w,
                                        double x, double t) {
    GcVector2 psi = eval_plane_wave(w, x, t);
    std::complex<double> jp{0.0, w.p};
    std::complex<double> mjE{0.0, -w.energy()};
    GcVector2 out{};
    for (const auto& [idx, coeff] : op.terms()) {
        if (idx[2] > 0 || idx[3] > 0) continue;  // no y, z dependence
        std::complex<double> factor{1.0, 0.0};
        for (int k = 0; k < idx[0]; ++k) factor *= mjE;
        for (int k = 0; k < idx[1]; ++k) factor *= jp;
        GcVector2 dpsi{from_j_plane(factor * to_j_plane(psi.v1)),
                       from_j_plane(factor * to_j_plane(psi.v2))};
        out = out + mat_apply(coeff, dpsi);
    }
    return out;
}

inline GcVector2 apply_dirac_analytic(const PlaneWave& w, double x, double t) {
    return apply_op_to_plane_wave(build_dirac_operator(), w, x, t);
}

// (H - m) psi at (x, t), analytic derivatives.
inline GcVector2 dirac_residual_analytic(const PlaneWave& w, double x, double t) {
    return apply_dirac_analytic(w, x, t) - w.m * eval_plane_wave(w, x, t);
}

// (H - m) psi with central finite differences of step h for d_x, d_t.
inline GcVector2 dirac_residual_fd(const PlaneWave& w, double x, double t, double h) {
    if (!(h > 0.0)) throw std::domain_error("dirac_residual_fd: h must be positive");
    GcVector2 dx = (1.0 / (2.0 * h)) * (eval_plane_wave(w, x + h, t) -
                                        eval_plane_wave(w, x - h, t));
    GcVector2 dt = (1.0 / (2.0 * h)) * (eval_plane_wave(w, x, t + h) -
                                        eval_plane_wave(w, x, t - h));
    return mat_apply(gamma1(), dx) + mat_apply(gamma0(), dt) -
           w.m * eval_plane_wave(w, x, t);
}

struct ResidualSample {
    double x;
    double t;
    double analytic;
    double fd;       // at step h
    double fd_half;  // at step h/2
};

struct ResidualReport {
    double h = 0.0;
    std::vector<ResidualSample> samples;
    double max_analytic = 0.0;
    double max_fd = 0.0;
    double max_fd_half = 0.0;

    // ~4 for a second-order scheme.
    double convergence_ratio() const {
        return max_fd_half > 0.0 ? max_fd / max_fd_half : 0.0;
    }
};

inline ResidualReport residual_check(const PlaneWave& w, std::size_t points,
                                     std::uint64_t seed, double h = 1e-4) {
    if (!(h > 0.0)) throw std::domain_error("residual_check: h must be positive");
    ResidualReport rep;
    rep.h = h;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    rep.samples.reserve(points);
    for (std::size_t k = 0; k < points; ++k) {
        double x = dist(rng);
        double t = dist(rng);
        ResidualSample s{x, t,
                         norm(dirac_residual_analytic(w, x, t)),
                         norm(dirac_residual_fd(w, x, t, h)),
                         norm(dirac_residual_fd(w, x, t, h / 2.0))};
        rep.max_analytic = std::max(rep.max_analytic, s.analytic);
        rep.max_fd = std::max(rep.max_fd, s.fd);
        rep.max_fd_half = std::max(rep.max_fd_half, s.fd_half);
        rep.samples.push_back(s);
    }
    return rep;
}

}  // namespace gcalg
