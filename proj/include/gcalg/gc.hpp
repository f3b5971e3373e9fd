#pragma once

// The Generalized-C number system: basis {1, i, j} with ii = jj = -1 and
// ij = ji = 0. Commutative, non-associative, has zero divisors. The
// fixed-phi polar elements form the associative SGC sub-algebra.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcalg {

struct GcNumber {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    constexpr GcNumber() = default;
    constexpr GcNumber(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {}

    static constexpr GcNumber one() { return {1, 0, 0}; }
    static constexpr GcNumber i() { return {0, 1, 0}; }
    static constexpr GcNumber j() { return {0, 0, 1}; }

    friend constexpr GcNumber operator+(GcNumber x, GcNumber y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c};
    }
    friend constexpr GcNumber operator-(GcNumber x, GcNumber y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c};
    }
    friend constexpr GcNumber operator-(GcNumber x) { return {-x.a, -x.b, -x.c}; }
    friend constexpr GcNumber operator*(double r, GcNumber x) {
        return {r * x.a, r * x.b, r * x.c};
    }
    // q1*q2 = (a1 a2 - b1 b2 - c1 c2) + (a1 b2 + b1 a2) i + (a1 c2 + c1 a2) j
    friend constexpr GcNumber operator*(GcNumber x, GcNumber y) {
        return {x.a * y.a - x.b * y.b - x.c * y.c,
                x.a * y.b + x.b * y.a,
                x.a * y.c + x.c * y.a};
    }
    friend constexpr bool operator==(GcNumber x, GcNumber y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

inline constexpr GcNumber conj(GcNumber q) { return {q.a, -q.b, -q.c}; }

inline double norm(GcNumber q) { return std::hypot(q.a, q.b, q.c); }

inline bool approx_equal(GcNumber x, GcNumber y, double tol = 1e-12) {
    return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol &&
           std::abs(x.c - y.c) <= tol;
}

struct PolarGc {
    double R = 0.0;      // distance from origin, >= 0
    double theta = 0.0;  // polar angle in [0, pi]
    double phi = 0.0;    // azimuthal angle in [0, 2*pi)
};

// Degenerate conventions: b = c = 0 gives phi = 0; additionally theta = 0
// for a >= 0 and theta = pi for a < 0.
inline PolarGc to_polar(GcNumber q) {
    PolarGc p;
    p.R = norm(q);
    double s = std::hypot(q.b, q.c);
    p.theta = std::atan2(s, q.a);
    p.phi = (s == 0.0) ? 0.0 : std::atan2(q.c, q.b);
    if (p.phi < 0.0) p.phi += 2.0 * std::numbers::pi;
    return p;
}

inline GcNumber from_polar(const PolarGc& p) {
    if (p.R < 0.0) throw std::domain_error("from_polar: R must be >= 0");
    return {p.R * std::cos(p.theta),
            p.R * std::sin(p.theta) * std::cos(p.phi),
            p.R * std::sin(p.theta) * std::sin(p.phi)};
}

// Closed form of exp(theta * u(phi)) with u = cos(phi) i + sin(phi) j.
// u*u = -(cos^2 + sin^2) + 0i + 0j = -1, so span{1, u} behaves like C and
// the series sums to cos(theta) + sin(theta) u.
inline GcNumber exp_closed(double theta, double phi) {
    double s = std::sin(theta);
    return {std::cos(theta), s * std::cos(phi), s * std::sin(phi)};
}

// Direct partial sums of the series with left-folded powers. Stops when
// the term norm drops below tol * |partial sum|.
inline GcNumber exp_series(double theta, double phi, unsigned max_terms = 200,
                           double tol = 1e-12) {
    if (tol <= 0.0) throw std::invalid_argument("exp_series: tol must be positive");
    GcNumber x{0.0, theta * std::cos(phi), theta * std::sin(phi)};
    GcNumber sum = GcNumber::one();
    GcNumber term = GcNumber::one();
    for (unsigned n = 1; n <= max_terms; ++n) {
        term = (1.0 / n) * (term * x);  // term_n = term_{n-1} * x / n, left fold
        sum = sum + term;
        if (norm(term) < tol * norm(sum)) return sum;
    }
    throw std::runtime_error("exp_series: no convergence within term cap");
}

struct EulerInequalityWitness {
    GcNumber lhs;  // exp(theta (cos(phi) i + sin(phi) j))
    GcNumber rhs;  // exp(theta cos(phi) i) * exp(theta sin(phi) j)
    double discrepancy = 0.0;
};

inline EulerInequalityWitness euler_inequality_witness(double theta, double phi) {
    EulerInequalityWitness w;
    w.lhs = exp_closed(theta, phi);
    GcNumber ei = exp_closed(theta * std::cos(phi), 0.0);
    GcNumber ej = exp_closed(theta * std::sin(phi), std::numbers::pi / 2.0);
    w.rhs = ei * ej;
    w.discrepancy = norm(w.lhs - w.rhs);
    return w;
}

// Element R * exp(theta * u(phi)) of the fixed-phi sub-algebra. Theta is
// an additive phase here, deliberately unrestricted.
struct SgcNumber {
    double R = 0.0;
    double theta = 0.0;
    double phi = 0.0;

    GcNumber embed() const {
        GcNumber u = exp_closed(theta, phi);
        return {R * u.a, R * u.b, R * u.c};
    }
};

inline constexpr double kSgcPhiTolerance = 1e-12;

inline SgcNumber sgc_mul(const SgcNumber& x, const SgcNumber& y) {
    if (std::abs(x.phi - y.phi) > kSgcPhiTolerance)
        throw std::domain_error("sgc_mul: operands have different azimuthal phase");
    return {x.R * y.R, x.theta + y.theta, x.phi};
}

// Adler modulus postulates.

struct PostulateVerdict {
    bool holds = true;
    std::string witness;
    double discrepancy = 0.0;
};

struct AdlerReport {
    PostulateVerdict p1;      // N(0) = 0
    PostulateVerdict p2;      // N(q) > 0 for q != 0
    PostulateVerdict p3;      // N(r q) = |r| N(q)
    PostulateVerdict p4;      // triangle inequality
    PostulateVerdict p5_gc;   // N(xy) = N(x)N(y) on full GC -- fails
    PostulateVerdict p5_sgc;  // same on fixed-phi SGC pairs -- holds

    bool as_expected() const {
        return p1.holds && p2.holds && p3.holds && p4.holds && !p5_gc.holds &&
               p5_sgc.holds;
    }
};

inline AdlerReport adler_check(std::size_t samples, std::uint64_t seed,
                               double tol = 1e-12) {
    if (samples < 1) throw std::invalid_argument("adler_check: samples must be >= 1");
    AdlerReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    auto random_q = [&] { return GcNumber{dist(rng), dist(rng), dist(rng)}; };

    // (1) by definition of the Euclidean modulus.
    if (norm(GcNumber{}) != 0.0) {
        rep.p1 = {false, "N(0) != 0", norm(GcNumber{})};
    }

    for (std::size_t s = 0; s < samples; ++s) {
        GcNumber q = random_q();
        GcNumber r2 = random_q();
        double r = dist(rng);

        // (2) positivity on nonzero samples.
        if (!(q == GcNumber{}) && !(norm(q) > 0.0))
            rep.p2 = {false, "N(q) <= 0 for nonzero q", norm(q)};

        // (3) absolute homogeneity.
        double lhs3 = norm(r * q);
        double rhs3 = std::abs(r) * norm(q);
        if (std::abs(lhs3 - rhs3) > tol * std::max(1.0, rhs3))
            rep.p3 = {false, "N(r q) != |r| N(q)", std::abs(lhs3 - rhs3)};

        // (4) triangle inequality.
        double lhs4 = norm(q + r2);
        double rhs4 = norm(q) + norm(r2);
        if (lhs4 > rhs4 + tol * std::max(1.0, rhs4))
            rep.p4 = {false, "N(q1+q2) > N(q1)+N(q2)", lhs4 - rhs4};

        // (5) on full GC: record the worst random violation.
        double d5 = std::abs(norm(q * r2) - norm(q) * norm(r2));
        if (d5 > tol * std::max(1.0, norm(q) * norm(r2)) && rep.p5_gc.holds) {
            rep.p5_gc = {false, "random pair violates N(q1 q2) = N(q1) N(q2)", d5};
        }

        // (5) on SGC: fixed-phi pairs, checked through the embedding.
        double phi = std::abs(dist(rng)) * 0.1 * std::numbers::pi;
        SgcNumber x{std::abs(dist(rng)), dist(rng), phi};
        SgcNumber y{std::abs(dist(rng)), dist(rng), phi};
        GcNumber prod = x.embed() * y.embed();
        double d5s = std::abs(norm(prod) - norm(x.embed()) * norm(y.embed()));
        if (d5s > tol * std::max(1.0, x.R * y.R))
            rep.p5_sgc = {false, "fixed-phi pair violates norm multiplicativity", d5s};
    }

    // The canonical postulate-5 witness: N(ij) = 0 while N(i) N(j) = 1.
    GcNumber ij = GcNumber::i() * GcNumber::j();
    double canonical = std::abs(norm(ij) - norm(GcNumber::i()) * norm(GcNumber::j()));
    if (canonical > 0.0)
        rep.p5_gc = {false, "(i, j): N(ij) = 0 but N(i) N(j) = 1", canonical};

    return rep;
}

}  // namespace gcalg
