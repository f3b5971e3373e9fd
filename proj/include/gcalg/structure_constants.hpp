#pragma once

// Generic engine for finite-dimensional real algebras defined by a
// structure-constant tensor f, with e_A e_B = sum_C f[A][B][C] e_C.
// Basis element 0 is required to be a two-sided unit.

#include <cmath>
#include <cstddef>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcalg {

inline bool approx_equal(double x, double y, double tol = 1e-12) {
    double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= tol * scale;
}

class StructureConstantsTable {
public:
    StructureConstantsTable(std::size_t dim, std::vector<double> f,
                            std::vector<std::string> basis_names)
        : dim_(dim), f_(std::move(f)), basis_names_(std::move(basis_names)) {
        if (dim_ < 1)
            throw std::invalid_argument("structure constants: dim must be >= 1");
        if (f_.size() != dim_ * dim_ * dim_)
            throw std::invalid_argument("structure constants: f must have dim^3 entries");
        for (double v : f_)
            if (!std::isfinite(v))
                throw std::invalid_argument("structure constants: non-finite entry");
        if (basis_names_.empty()) {
            basis_names_.resize(dim_);
            for (std::size_t a = 0; a < dim_; ++a)
                basis_names_[a] = "e" + std::to_string(a);
        }
        if (basis_names_.size() != dim_)
            throw std::invalid_argument("structure constants: basis_names size mismatch");
        // e_0 must act as a two-sided unit.
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t c = 0; c < dim_; ++c) {
                double expect = (b == c) ? 1.0 : 0.0;
                if (at(0, b, c) != expect || at(b, 0, c) != expect)
                    throw std::invalid_argument(
                        "structure constants: basis element 0 is not a two-sided unit");
            }
    }

    std::size_t dim() const { return dim_; }
    double at(std::size_t a, std::size_t b, std::size_t c) const {
        return f_[(a * dim_ + b) * dim_ + c];
    }
    const std::vector<double>& raw() const { return f_; }
    const std::string& basis_name(std::size_t a) const { return basis_names_[a]; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }

private:
    std::size_t dim_;
    std::vector<double> f_;
    std::vector<std::string> basis_names_;
};

using TablePtr = std::shared_ptr<const StructureConstantsTable>;

class AlgebraElement {
public:
    AlgebraElement(TablePtr table, std::vector<double> coeffs)
        : table_(std::move(table)), coeffs_(std::move(coeffs)) {
        if (!table_)
            throw std::invalid_argument("algebra element: null table");
        if (coeffs_.size() != table_->dim())
            throw std::invalid_argument("algebra element: coefficient length mismatch");
        for (double v : coeffs_)
            if (!std::isfinite(v))
                throw std::invalid_argument("algebra element: non-finite coefficient");
    }

    static AlgebraElement basis(TablePtr table, std::size_t index) {
        std::vector<double> c(table->dim(), 0.0);
        c.at(index) = 1.0;
        return AlgebraElement(std::move(table), std::move(c));
    }
    static AlgebraElement unit(TablePtr table) { return basis(std::move(table), 0); }
    static AlgebraElement zero(TablePtr table) {
        std::vector<double> c(table->dim(), 0.0);
        return AlgebraElement(std::move(table), std::move(c));
    }

    const TablePtr& table() const { return table_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double operator[](std::size_t i) const { return coeffs_[i]; }

    double norm() const {
        double s = 0.0;
        for (double v : coeffs_) s += v * v;
        return std::sqrt(s);
    }

private:
    TablePtr table_;
    std::vector<double> coeffs_;
};

inline void require_same_table(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.table() != y.table())
        throw std::invalid_argument("algebra: operands belong to different tables");
}

inline AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_table(x, y);
    std::vector<double> c(x.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += y[i];
    return AlgebraElement(x.table(), std::move(c));
}

inline AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_table(x, y);
    std::vector<double> c(x.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y[i];
    return AlgebraElement(x.table(), std::move(c));
}

inline AlgebraElement scale(double r, const AlgebraElement& x) {
    std::vector<double> c(x.coeffs());
    for (double& v : c) v *= r;
    return AlgebraElement(x.table(), std::move(c));
}

inline AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_table(x, y);
    const auto& t = *x.table();
    std::size_t d = t.dim();
    std::vector<double> out(d, 0.0);
    for (std::size_t a = 0; a < d; ++a) {
        if (x[a] == 0.0) continue;
        for (std::size_t b = 0; b < d; ++b) {
            if (y[b] == 0.0) continue;
            double xy = x[a] * y[b];
            for (std::size_t c = 0; c < d; ++c)
                out[c] += xy * t.at(a, b, c);
        }
    }
    return AlgebraElement(x.table(), std::move(out));
}

// Left-folded power: ((x*x)*x)*...  The algebra may be non-associative,
// so the fold direction is part of the contract.
inline AlgebraElement power(const AlgebraElement& x, unsigned n) {
    AlgebraElement acc = AlgebraElement::unit(x.table());
    for (unsigned k = 0; k < n; ++k) acc = mul(acc, x);
    return acc;
}

enum class Law { Commutativity, Associativity, ZeroDivisor, NormMultiplicativity };

struct LawWitness {
    Law law;
    std::vector<std::size_t> operands;  // basis indices involved
    std::string detail;
    double discrepancy = 0.0;
};

namespace detail {
inline std::vector<double> basis_product(const StructureConstantsTable& t,
                                         std::size_t a, std::size_t b) {
    std::vector<double> out(t.dim());
    for (std::size_t c = 0; c < t.dim(); ++c) out[c] = t.at(a, b, c);
    return out;
}

inline double vec_dist(const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += (u[i] - v[i]) * (u[i] - v[i]);
    return std::sqrt(s);
}
}  // namespace detail

// Exhaustive basis-pair check; by bilinearity e_A e_B = e_B e_A for all
// basis pairs is equivalent to commutativity of the whole algebra.
inline std::vector<LawWitness> check_commutative(const StructureConstantsTable& t) {
    std::vector<LawWitness> out;
    for (std::size_t a = 0; a < t.dim(); ++a)
        for (std::size_t b = a + 1; b < t.dim(); ++b) {
            auto ab = detail::basis_product(t, a, b);
            auto ba = detail::basis_product(t, b, a);
            double d = detail::vec_dist(ab, ba);
            if (d != 0.0)
                out.push_back({Law::Commutativity, {a, b},
                               t.basis_name(a) + "*" + t.basis_name(b) + " != " +
                                   t.basis_name(b) + "*" + t.basis_name(a),
                               d});
        }
    return out;
}

// Exhaustive basis-triple check; by trilinearity associativity on all
// dim^3 basis triples is equivalent to full associativity.
inline std::vector<LawWitness> check_associative(const StructureConstantsTable& t) {
    std::vector<LawWitness> out;
    auto tbl = std::make_shared<StructureConstantsTable>(t);
    for (std::size_t a = 0; a < t.dim(); ++a)
        for (std::size_t b = 0; b < t.dim(); ++b)
            for (std::size_t c = 0; c < t.dim(); ++c) {
                auto ea = AlgebraElement::basis(tbl, a);
                auto eb = AlgebraElement::basis(tbl, b);
                auto ec = AlgebraElement::basis(tbl, c);
                auto lhs = mul(mul(ea, eb), ec);
                auto rhs = mul(ea, mul(eb, ec));
                double d = detail::vec_dist(lhs.coeffs(), rhs.coeffs());
                if (d != 0.0)
                    out.push_back({Law::Associativity, {a, b, c},
                                   "(" + t.basis_name(a) + "*" + t.basis_name(b) + ")*" +
                                       t.basis_name(c) + " != " + t.basis_name(a) + "*(" +
                                       t.basis_name(b) + "*" + t.basis_name(c) + ")",
                                   d});
            }
    return out;
}

// Basis-level scan only: reports basis pairs (A,B), A,B != 0, with
// e_A e_B = 0. Composite zero divisors are out of scope here.
inline std::vector<LawWitness> find_zero_divisors(const StructureConstantsTable& t) {
    std::vector<LawWitness> out;
    for (std::size_t a = 1; a < t.dim(); ++a)
        for (std::size_t b = 1; b < t.dim(); ++b) {
            auto ab = detail::basis_product(t, a, b);
            bool zero = true;
            for (double v : ab)
                if (v != 0.0) { zero = false; break; }
            if (zero)
                out.push_back({Law::ZeroDivisor, {a, b},
                               t.basis_name(a) + "*" + t.basis_name(b) + " = 0", 1.0});
        }
    return out;
}

// Samples random elements and compares left-folded, right-folded and
// balanced parenthesizations of x^3 and x^4.
inline std::vector<LawWitness> check_power_associative_sampled(
    const StructureConstantsTable& t, std::size_t samples, std::uint64_t seed,
    double tol = 1e-12) {
    std::vector<LawWitness> out;
    auto tbl = std::make_shared<StructureConstantsTable>(t);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> c(t.dim());
        for (double& v : c) v = dist(rng);
        AlgebraElement x(tbl, c);
        auto xx = mul(x, x);
        auto cube_l = mul(xx, x);
        auto cube_r = mul(x, xx);
        auto quad_l = mul(cube_l, x);
        auto quad_r = mul(x, cube_r);
        auto quad_b = mul(xx, xx);
        double scale_ref = std::max(1.0, quad_l.norm());
        double d = std::max({detail::vec_dist(cube_l.coeffs(), cube_r.coeffs()),
                             detail::vec_dist(quad_l.coeffs(), quad_r.coeffs()),
                             detail::vec_dist(quad_l.coeffs(), quad_b.coeffs())});
        if (d > tol * scale_ref)
            out.push_back({Law::Associativity, {},
                           "power parenthesizations disagree on sampled element", d});
    }
    return out;
}

// Built-in tables.

inline TablePtr make_complex_table() {
    // {1, i}, i*i = -1
    std::vector<double> f(8, 0.0);
    auto set = [&](std::size_t a, std::size_t b, std::size_t c, double v) {
        f[(a * 2 + b) * 2 + c] = v;
    };
    set(0, 0, 0, 1);
    set(0, 1, 1, 1);
    set(1, 0, 1, 1);
    set(1, 1, 0, -1);
    return std::make_shared<StructureConstantsTable>(2, std::move(f),
                                                     std::vector<std::string>{"1", "i"});
}

inline TablePtr make_gc_table() {
    // {1, i, j}: ii = jj = -1, ij = ji = 0
    std::vector<double> f(27, 0.0);
    auto set = [&](std::size_t a, std::size_t b, std::size_t c, double v) {
        f[(a * 3 + b) * 3 + c] = v;
    };
    for (std::size_t k = 0; k < 3; ++k) {
        set(0, k, k, 1);
        set(k, 0, k, 1);
    }
    set(1, 1, 0, -1);
    set(2, 2, 0, -1);
    return std::make_shared<StructureConstantsTable>(
        3, std::move(f), std::vector<std::string>{"1", "i", "j"});
}

inline TablePtr make_quaternion_table() {
    // {1, i, j, k}: ij = k, ji = -k, cyclic
    std::vector<double> f(64, 0.0);
    auto set = [&](std::size_t a, std::size_t b, std::size_t c, double v) {
        f[(a * 4 + b) * 4 + c] = v;
    };
    for (std::size_t k = 0; k < 4; ++k) {
        set(0, k, k, 1);
        set(k, 0, k, 1);
    }
    set(1, 1, 0, -1);
    set(2, 2, 0, -1);
    set(3, 3, 0, -1);
    set(1, 2, 3, 1);
    set(2, 1, 3, -1);
    set(2, 3, 1, 1);
    set(3, 2, 1, -1);
    set(3, 1, 2, 1);
    set(1, 3, 2, -1);
    return std::make_shared<StructureConstantsTable>(
        4, std::move(f), std::vector<std::string>{"1", "i", "j", "k"});
}

}  // namespace gcalg
