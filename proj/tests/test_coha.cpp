#include <catch2/catch_amalgamated.hpp>

#include "coha/coha.hpp"
#include "oracles.hpp"

using namespace coha;

namespace {

Quiver a3() { return Quiver(3, {{2, 1}, {3, 2}}); }
Quiver a2() { return Quiver(2, {{2, 1}}); }

} // namespace

TEST_CASE("element validation", "[coha]") {
    Quiver q = a3();
    REQUIRE_NOTHROW(element(q, {0, 1, 1}, MPoly::var(omega(2, 1)) * MPoly::var(omega(3, 1))));
    REQUIRE(one(q, {1, 1, 1}).poly == MPoly::constant(1));
    REQUIRE(one(q, {0, 0, 0}).grade == DimVector{0, 0, 0});

    try {
        element(q, {2, 0, 0}, MPoly::var(omega(1, 1)) - MPoly::var(omega(1, 2)));
        FAIL("asymmetric polynomial accepted");
    } catch (const Error& e) {
        REQUIRE(e.kind() == Err::NotSymmetric);
    }
    try {
        element(q, {1, 0, 0}, MPoly::var(omega(1, 2)));
        FAIL("out-of-range variable accepted");
    } catch (const Error& e) {
        REQUIRE(e.kind() == Err::VariableOutOfRange);
    }
    try {
        element(q, {1, 0, 0}, MPoly::var(tvar(1, 1)));
        FAIL("t-variable accepted");
    } catch (const Error& e) {
        REQUIRE(e.kind() == Err::VariableOutOfRange);
    }
}

TEST_CASE("worked two-factor products", "[coha]") {
    Quiver q = a3();
    // generic f in H_(2,0,0), g in H_(0,1,1): f*g = fg and
    // g*f = fg (w11 - w21)(w12 - w21)
    std::mt19937 rng(31);
    for (int rep = 0; rep < 3; ++rep) {
        CohaElement f = oracles::random_element(rng, q, {2, 0, 0}, rep + 1);
        CohaElement g = oracles::random_element(rng, q, {0, 1, 1}, rep);
        MPoly fg = f.poly * g.poly;
        REQUIRE(mul2(f, g).poly == fg);
        MPoly extra = (MPoly::var(omega(1, 1)) - MPoly::var(omega(2, 1))) *
                      (MPoly::var(omega(1, 2)) - MPoly::var(omega(2, 1)));
        REQUIRE(mul2(g, f).poly == fg * extra);
    }

    auto w21 = element(q, {0, 1, 0}, MPoly::var(omega(2, 1)));
    auto w31 = element(q, {0, 0, 1}, MPoly::var(omega(3, 1)));
    MPoly prod = MPoly::var(omega(2, 1)) * MPoly::var(omega(3, 1));
    REQUIRE(mul2(w21, w31).poly == prod);
    REQUIRE(mul2(w21, w31).grade == DimVector{0, 1, 1});
    REQUIRE(mul2(w31, w21).poly == prod * (MPoly::var(omega(2, 1)) - MPoly::var(omega(3, 1))));

    // regrading the same polynomial changes the product
    auto w31_regraded = element(q, {0, 1, 1}, MPoly::var(omega(3, 1)));
    REQUIRE(mul2(w21, w31_regraded).poly == -MPoly::var(omega(3, 1)));
    REQUIRE(mul2(w21, w31_regraded).grade == DimVector{0, 2, 1});
    REQUIRE(mul2(w31_regraded, w21).poly ==
            (MPoly::var(omega(2, 1)) + MPoly::var(omega(2, 2))) * MPoly::var(omega(3, 1)) -
                MPoly::var(omega(3, 1), 2));

    REQUIRE_THROWS_AS(mul2(w21, psi(0)), Error); // quiver mismatch
}

TEST_CASE("product output is a valid element", "[coha]") {
    std::mt19937 rng(17);
    for (const Quiver& q : {a3(), Quiver(2, {{2, 1}, {2, 1}}), Quiver(4, {{2, 1}, {3, 1}, {4, 1}})}) {
        std::uniform_int_distribution<int> dim(0, q.vertex_count() > 3 ? 1 : 2);
        for (int rep = 0; rep < 6; ++rep) {
            DimVector g1(static_cast<size_t>(q.vertex_count())), g2(g1.size());
            for (auto& x : g1) x = dim(rng);
            for (auto& x : g2) x = dim(rng);
            CohaElement f = oracles::random_element(rng, q, g1, rep % 3);
            CohaElement g = oracles::random_element(rng, q, g2, (rep + 1) % 3);
            CohaElement h = mul2(f, g);
            REQUIRE_NOTHROW(element(q, h.grade, h.poly)); // symmetry + range re-validated
        }
    }
}

TEST_CASE("multi-factor products", "[coha]") {
    Quiver q2 = a2();
    CohaElement f = element(q2, {1, 1}, MPoly::var(omega(1, 1)) + MPoly::var(omega(2, 1)));
    REQUIRE(muln(std::vector<CohaElement>{f}) == f);

    // zero-orbit class of 1 <- 2
    CohaElement z = muln(std::vector<CohaElement>{one(q2, {0, 1}), one(q2, {1, 0})});
    REQUIRE(z.poly == MPoly::var(omega(1, 1)) - MPoly::var(omega(2, 1)));

    REQUIRE_THROWS_AS(muln(std::vector<CohaElement>{}), Error);
}

TEST_CASE("psi elements and the exterior algebra", "[coha]") {
    REQUIRE(mul2(psi(0), psi(1)).poly == MPoly::constant(1));
    REQUIRE(mul2(psi(1), psi(0)).poly == MPoly::constant(-1));
    for (int i = 0; i <= 5; ++i) {
        REQUIRE(mul2(psi(i), psi(i)).poly.is_zero());
        for (int j = 0; j <= 5; ++j)
            REQUIRE((mul2(psi(i), psi(j)).poly + mul2(psi(j), psi(i)).poly).is_zero());
    }
}

TEST_CASE("psi chains give schur polynomials", "[coha]") {
    // lambda = (2,1) with r = 2: psi_1 * psi_3
    CohaElement chain = muln(std::vector<CohaElement>{psi(1), psi(3)});
    REQUIRE(chain.poly == schur({2, 1}, omega_vars(1, 2)));
    // r = 3 with lambda = (2,2,1): psi_1 * psi_3 * psi_4
    CohaElement chain3 = muln(std::vector<CohaElement>{psi(1), psi(3), psi(4)});
    REQUIRE(chain3.poly == schur({2, 2, 1}, omega_vars(1, 3)));
}

TEST_CASE("degree contract and associativity", "[coha]") {
    std::mt19937 rng(2024);
    std::vector<Quiver> quivers{a2(), a3(), Quiver(2, {{2, 1}, {2, 1}})};
    std::uniform_int_distribution<int> dim(0, 2), deg(0, 2);
    for (int rep = 0; rep < 30; ++rep) {
        const Quiver& q = quivers[static_cast<size_t>(rep) % quivers.size()];
        DimVector g1(static_cast<size_t>(q.vertex_count())), g2(g1.size());
        for (auto& x : g1) x = dim(rng);
        for (auto& x : g2) x = dim(rng);
        CohaElement f = oracles::random_element(rng, q, g1, deg(rng));
        CohaElement g = oracles::random_element(rng, q, g2, deg(rng));
        CohaElement fg = mul2(f, g);
        long expected = f.poly.degree() + g.poly.degree() - euler_form(q, g1, g2);
        if (!fg.poly.is_zero()) { // zero lies in every graded piece
            REQUIRE(fg.poly.degree() == expected);
            REQUIRE(fg.poly.is_homogeneous());
        }
    }
    for (int rep = 0; rep < 8; ++rep) {
        const Quiver& q = quivers[static_cast<size_t>(rep) % quivers.size()];
        DimVector g1(static_cast<size_t>(q.vertex_count())), g2(g1.size()), g3(g1.size());
        for (auto& x : g1) x = dim(rng) % 2;
        for (auto& x : g2) x = dim(rng) % 2;
        for (auto& x : g3) x = dim(rng) % 2;
        CohaElement f = oracles::random_element(rng, q, g1, deg(rng));
        CohaElement g = oracles::random_element(rng, q, g2, deg(rng));
        CohaElement h = oracles::random_element(rng, q, g3, deg(rng));
        REQUIRE(mul2(mul2(f, g), h) == mul2(f, mul2(g, h)));
    }
}

TEST_CASE("singleton-consistent products multiply plainly", "[coha]") {
    // with consistent grades over singleton blocks the product is the plain
    // polynomial product
    Quiver q = a3();
    std::mt19937 rng(5);
    CohaElement f1 = oracles::random_element(rng, q, {2, 0, 0}, 2);
    CohaElement f2 = oracles::random_element(rng, q, {0, 1, 0}, 1);
    CohaElement f3 = oracles::random_element(rng, q, {0, 0, 2}, 2);
    CohaElement prod = muln(std::vector<CohaElement>{f1, f2, f3});
    REQUIRE(prod.poly == f1.poly * f2.poly * f3.poly);
}

TEST_CASE("arrows outside the partition contribute factor one", "[coha]") {
    Quiver q = a3();
    SubquiverPartition p = validate_partition(q, {{1}, {2, 3}});
    std::vector<Arrow> inside; // only the arrows within blocks
    for (const auto& arrows : p.block_arrows) inside.insert(inside.end(), arrows.begin(), arrows.end());
    std::mt19937 rng(11);
    for (int rep = 0; rep < 4; ++rep) {
        CohaElement f = oracles::random_element(rng, q, {1, 0, 0}, rep % 2);
        CohaElement g = oracles::random_element(rng, q, {0, 1, 1}, rep % 3);
        REQUIRE(mul2(f, g) == mul2_with_arrows(f, g, inside));
    }
}

TEST_CASE("marker vertices", "[coha]") {
    REQUIRE(choose_marker({1, 1, 1}) == 1);
    REQUIRE(choose_marker({0, 1, 0}) == 2);
    // the longest root of E8 is the unique ADE root without a unit coordinate
    Quiver e8(8, {{2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}, {7, 6}, {8, 3}});
    auto roots = positive_roots(e8);
    int failures = 0;
    DimVector longest;
    for (const auto& beta : roots) {
        try {
            choose_marker(beta);
        } catch (const Error& e) {
            REQUIRE(e.kind() == Err::NoUnitCoordinate);
            ++failures;
            longest = beta;
        }
    }
    REQUIRE(failures == 1);
    REQUIRE(dim_total(longest) == 29); // the highest root
}

TEST_CASE("subalgebra elements", "[coha]") {
    Quiver q = a2();
    DimVector beta{1, 1};
    CohaElement e = subalgebra_element(q, beta, 1, 1, MPoly::var(omega(9, 9)));
    REQUIRE(e.grade == DimVector{1, 1});
    REQUIRE(e.poly == MPoly::var(omega(1, 1)));

    REQUIRE(subalgebra_element(q, beta, 3, 2, MPoly::constant(1)) == one(q, {3, 3}));

    CohaElement s = subalgebra_element(q, beta, 2, 1, schur({1, 1}, omega_vars(1, 2)));
    REQUIRE(s.poly == MPoly::var(omega(1, 1)) * MPoly::var(omega(1, 2)));
    REQUIRE(s.grade == DimVector{2, 2});

    try {
        subalgebra_element(q, {2, 1}, 1, 1, MPoly::constant(1));
        FAIL("bad marker accepted");
    } catch (const Error& e2) {
        REQUIRE(e2.kind() == Err::BadMarker);
    }
    // asymmetric in its two variables
    REQUIRE_THROWS_AS(
        subalgebra_element(q, beta, 2, 1, MPoly::var(omega(1, 1)) - MPoly::var(omega(1, 2))), Error);
}

TEST_CASE("graded dimensions", "[coha]") {
    for (int k = 0; k <= 6; ++k) REQUIRE(graded_dim({1}, k) == 1);
    REQUIRE(graded_dim({2}, 2) == 2);
    REQUIRE(graded_dim({0}, 0) == 1);
    REQUIRE(graded_dim({0}, 3) == 0);
    REQUIRE(graded_dim({1, 1}, 1) == 2);
    REQUIRE(graded_dim({2, 1}, 2) == 4); // (2|-), (11|-), (1|1), (-|2)
}
