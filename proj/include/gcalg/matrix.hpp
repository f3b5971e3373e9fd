#pragma once

// 2x2 matrices over the GC numbers and the four gamma matrices of the
// two-dimensional Dirac operator. Only binary products are exposed;
// triple products must be parenthesized by the caller because the entry
// algebra is non-associative.

#include <array>
#include <cmath>
#include <utility>

#include "gcalg/gc.hpp"

namespace gcalg {

struct GcMatrix {
    // Row-major entries.
    std::array<GcNumber, 4> e{};

    constexpr GcNumber& at(int r, int c) { return e[r * 2 + c]; }
    constexpr const GcNumber& at(int r, int c) const { return e[r * 2 + c]; }

    static constexpr GcMatrix zero() { return {}; }
    static constexpr GcMatrix identity() {
        GcMatrix m;
        m.at(0, 0) = GcNumber::one();
        m.at(1, 1) = GcNumber::one();
        return m;
    }

    friend constexpr GcMatrix operator+(const GcMatrix& x, const GcMatrix& y) {
        GcMatrix m;
        for (int k = 0; k < 4; ++k) m.e[k] = x.e[k] + y.e[k];
        return m;
    }
    friend constexpr GcMatrix operator-(const GcMatrix& x, const GcMatrix& y) {
        GcMatrix m;
        for (int k = 0; k < 4; ++k) m.e[k] = x.e[k] - y.e[k];
        return m;
    }
    friend constexpr GcMatrix operator*(double r, const GcMatrix& x) {
        GcMatrix m;
        for (int k = 0; k < 4; ++k) m.e[k] = r * x.e[k];
        return m;
    }
    friend constexpr bool operator==(const GcMatrix& x, const GcMatrix& y) {
        for (int k = 0; k < 4; ++k)
            if (!(x.e[k] == y.e[k])) return false;
        return true;
    }
};

// Row-column product. Each entry is a sum of single binary GC products,
// so there is no parenthesization ambiguity inside one mat_mul.
inline constexpr GcMatrix mat_mul(const GcMatrix& x, const GcMatrix& y) {
    GcMatrix m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m.at(r, c) = x.at(r, 0) * y.at(0, c) + x.at(r, 1) * y.at(1, c);
    return m;
}

inline constexpr GcMatrix anticommutator(const GcMatrix& x, const GcMatrix& y) {
    return mat_mul(x, y) + mat_mul(y, x);
}

inline bool approx_equal(const GcMatrix& x, const GcMatrix& y, double tol = 1e-12) {
    for (int k = 0; k < 4; ++k)
        if (!approx_equal(x.e[k], y.e[k], tol)) return false;
    return true;
}

struct GcVector2 {
    GcNumber v1;
    GcNumber v2;

    friend constexpr GcVector2 operator+(const GcVector2& x, const GcVector2& y) {
        return {x.v1 + y.v1, x.v2 + y.v2};
    }
    friend constexpr GcVector2 operator-(const GcVector2& x, const GcVector2& y) {
        return {x.v1 - y.v1, x.v2 - y.v2};
    }
    friend constexpr GcVector2 operator*(double r, const GcVector2& x) {
        return {r * x.v1, r * x.v2};
    }
};

inline double norm(const GcVector2& v) {
    return std::hypot(norm(v.v1), norm(v.v2));
}

inline constexpr GcVector2 mat_apply(const GcMatrix& m, const GcVector2& v) {
    return {m.at(0, 0) * v.v1 + m.at(0, 1) * v.v2,
            m.at(1, 0) * v.v1 + m.at(1, 1) * v.v2};
}

// gamma^0 = C_t, gamma^1 = C_x, gamma^2 = C_y, gamma^3 = C_z.

inline constexpr GcMatrix gamma0() {
    GcMatrix m;
    m.at(0, 1) = GcNumber::j();
    m.at(1, 0) = GcNumber::j();
    return m;
}

inline constexpr GcMatrix gamma1() {
    GcMatrix m;
    m.at(0, 1) = -GcNumber::j();
    m.at(1, 0) = GcNumber::j();
    return m;
}

inline constexpr GcMatrix gamma2() {
    GcMatrix m;
    m.at(0, 1) = -GcNumber::i();
    m.at(1, 0) = GcNumber::i();
    return m;
}

inline constexpr GcMatrix gamma3() {
    GcMatrix m;
    m.at(0, 0) = GcNumber::one();
    m.at(1, 1) = -GcNumber::one();
    return m;
}

inline constexpr std::array<GcMatrix, 4> gammas() {
    return {gamma0(), gamma1(), gamma2(), gamma3()};
}

// A*(B*v) - (A*B)*v and its norm. Zero exactly when matrix-level
// composition agrees with pointwise action; nonzero values expose the
// non-associativity of the entry algebra.
inline std::pair<GcVector2, double> operator_associator_probe(const GcMatrix& a,
                                                              const GcMatrix& b,
                                                              const GcVector2& v) {
    GcVector2 nested = mat_apply(a, mat_apply(b, v));
    GcVector2 composed = mat_apply(mat_mul(a, b), v);
    GcVector2 diff = nested - composed;
    return {diff, norm(diff)};
}

}  // namespace gcalg
