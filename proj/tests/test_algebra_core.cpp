#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gcalg/structure_constants.hpp"

using namespace gcalg;

namespace {

AlgebraElement elem(const TablePtr& t, std::vector<double> c) {
    return AlgebraElement(t, std::move(c));
}

}  // namespace

TEST_CASE("table construction validates shape and unit axiom") {
    auto gc = make_gc_table();
    REQUIRE(gc->dim() == 3);

    SECTION("wrong tensor size is rejected") {
        REQUIRE_THROWS_AS(StructureConstantsTable(3, std::vector<double>(26, 0.0), {}),
                          std::invalid_argument);
    }
    SECTION("non-unit index 0 is rejected") {
        std::vector<double> f(8, 0.0);  // all-zero product: e0 is no unit
        REQUIRE_THROWS_AS(StructureConstantsTable(2, f, {}), std::invalid_argument);
    }
    SECTION("non-finite entry is rejected") {
        auto f = gc->raw();
        f[13] = std::numeric_limits<double>::quiet_NaN();
        REQUIRE_THROWS_AS(StructureConstantsTable(3, f, {}), std::invalid_argument);
    }
}

TEST_CASE("mul on the GC table") {
    auto gc = make_gc_table();
    auto i = AlgebraElement::basis(gc, 1);
    auto j = AlgebraElement::basis(gc, 2);

    SECTION("i * j = 0") {
        auto ij = mul(i, j);
        REQUIRE(ij.coeffs() == std::vector<double>{0, 0, 0});
    }
    SECTION("1 * x = x") {
        auto x = elem(gc, {1.5, -2.0, 0.25});
        REQUIRE(mul(AlgebraElement::unit(gc), x).coeffs() == x.coeffs());
        REQUIRE(mul(x, AlgebraElement::unit(gc)).coeffs() == x.coeffs());
    }
    SECTION("(1+2i)(3+4j) = 3 + 6i + 4j") {
        auto x = elem(gc, {1, 2, 0});
        auto y = elem(gc, {3, 0, 4});
        REQUIRE(mul(x, y).coeffs() == std::vector<double>{3, 6, 4});
    }
    SECTION("mismatched tables throw") {
        auto other = make_gc_table();
        REQUIRE_THROWS_AS(mul(i, AlgebraElement::basis(other, 1)),
                          std::invalid_argument);
    }
}

TEST_CASE("add and scale are componentwise") {
    auto gc = make_gc_table();
    REQUIRE(add(elem(gc, {1, 1, 0}), elem(gc, {2, 0, 1})).coeffs() ==
            std::vector<double>{3, 1, 1});
    REQUIRE(add(AlgebraElement::zero(gc), elem(gc, {4, 5, 6})).coeffs() ==
            std::vector<double>{4, 5, 6});
    REQUIRE(scale(-2.0, elem(gc, {1, 1, 1})).coeffs() ==
            std::vector<double>{-2, -2, -2});
}

TEST_CASE("left-folded powers") {
    auto gc = make_gc_table();
    auto i = AlgebraElement::basis(gc, 1);
    REQUIRE(power(i, 2).coeffs() == std::vector<double>{-1, 0, 0});

    auto x = elem(gc, {0.5, -1.0, 2.0});
    REQUIRE(power(x, 0).coeffs() == AlgebraElement::unit(gc).coeffs());
    REQUIRE(power(x, 1).coeffs() == x.coeffs());

    // (i+j)^2 = i^2 + ij + ji + j^2 = -2
    auto ipj = elem(gc, {0, 1, 1});
    REQUIRE(power(ipj, 2).coeffs() == std::vector<double>{-2, 0, 0});
}

TEST_CASE("bilinearity of mul on random triples") {
    auto gc = make_gc_table();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int s = 0; s < 1000; ++s) {
        auto rand_elem = [&] {
            return elem(gc, {dist(rng), dist(rng), dist(rng)});
        };
        auto x = rand_elem(), y = rand_elem(), z = rand_elem();
        auto lhs = mul(add(x, y), z);
        auto rhs = add(mul(x, z), mul(y, z));
        for (std::size_t k = 0; k < 3; ++k)
            REQUIRE(approx_equal(lhs[k], rhs[k], 1e-12));
    }
}

TEST_CASE("law checkers on the GC table") {
    auto gc = make_gc_table();

    REQUIRE(check_commutative(*gc).empty());

    auto assoc = check_associative(*gc);
    REQUIRE_FALSE(assoc.empty());
    bool has_iij = false;
    for (const auto& w : assoc)
        if (w.operands == std::vector<std::size_t>{1, 1, 2}) {
            has_iij = true;
            REQUIRE(w.discrepancy > 0.0);
        }
    REQUIRE(has_iij);  // (ii)j = -j but i(ij) = 0

    auto zd = find_zero_divisors(*gc);
    REQUIRE(zd.size() == 2);
    REQUIRE(zd[0].operands == std::vector<std::size_t>{1, 2});
    REQUIRE(zd[1].operands == std::vector<std::size_t>{2, 1});

    REQUIRE(check_power_associative_sampled(*gc, 1000, 42).empty());
}

TEST_CASE("law checkers on reference tables") {
    SECTION("dim-1 reals") {
        auto r = std::make_shared<StructureConstantsTable>(
            1, std::vector<double>{1.0}, std::vector<std::string>{"1"});
        REQUIRE(check_commutative(*r).empty());
        REQUIRE(check_associative(*r).empty());
        REQUIRE(find_zero_divisors(*r).empty());
    }
    SECTION("complex numbers satisfy every law") {
        auto c = make_complex_table();
        REQUIRE(check_commutative(*c).empty());
        REQUIRE(check_associative(*c).empty());
        REQUIRE(find_zero_divisors(*c).empty());
        REQUIRE(check_power_associative_sampled(*c, 500, 1).empty());
    }
    SECTION("quaternions are associative but not commutative") {
        auto h = make_quaternion_table();
        auto comm = check_commutative(*h);
        REQUIRE_FALSE(comm.empty());
        bool has_ij = false;
        for (const auto& w : comm)
            has_ij |= (w.operands == std::vector<std::size_t>{1, 2});
        REQUIRE(has_ij);
        REQUIRE(check_associative(*h).empty());
        REQUIRE(find_zero_divisors(*h).empty());
    }
}
