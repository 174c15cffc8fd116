#include <catch2/catch_amalgamated.hpp>

#include "coha/mpoly.hpp"
#include "oracles.hpp"

using namespace coha;

namespace {
const MPoly X = MPoly::var(omega(1, 1));
const MPoly Y = MPoly::var(omega(1, 2));
} // namespace

TEST_CASE("basic ring arithmetic", "[mpoly]") {
    REQUIRE((X + Y) * (X - Y) == MPoly::var(omega(1, 1), 2) - MPoly::var(omega(1, 2), 2));
    REQUIRE((X + MPoly::constant(1)) * (X + MPoly::constant(2)) ==
            MPoly::var(omega(1, 1), 2) + Rat(3) * X + MPoly::constant(2));
    MPoly p = Rat(3, 2) * X * Y + Y;
    REQUIRE((p + (-p)).is_zero());
    REQUIRE(p.degree() == 2);
    REQUIRE(!p.is_homogeneous());
    REQUIRE((X * Y + MPoly::var(omega(1, 2), 2)).is_homogeneous());
}

TEST_CASE("ring axioms on random polynomials", "[mpoly]") {
    std::mt19937 rng(20240811);
    for (int rep = 0; rep < 15; ++rep) {
        MPoly a = oracles::random_poly(rng, 3, 50, 3);
        MPoly b = oracles::random_poly(rng, 3, 50, 3);
        MPoly c = oracles::random_poly(rng, 3, 50, 3);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
    }
}

TEST_CASE("multiplication at a few thousand terms", "[mpoly]") {
    // (1 + e1 + e2)^6 in six variables has 15792 monomials
    std::vector<VarId> vars = omega_vars(1, 6);
    MPoly base = MPoly::constant(1);
    for (const auto& lambda : {std::vector<int>{1}, {1, 1}})
        base += monomial_symmetric(lambda, vars);
    MPoly pow2 = base * base;
    MPoly pow4 = pow2 * pow2;
    MPoly pow6 = pow4 * pow2;
    REQUIRE(pow6.term_count() == 15792);
    REQUIRE(pow6.degree() == 12);
    REQUIRE(pow6 == (pow2 * pow2) * pow2);
    REQUIRE(pow6.exact_div(pow4) == pow2);
}

TEST_CASE("exact division", "[mpoly]") {
    MPoly x2_y2 = MPoly::var(omega(1, 1), 2) - MPoly::var(omega(1, 2), 2);
    REQUIRE(x2_y2.exact_div(X - Y) == X + Y);

    MPoly p = Rat(2, 3) * X * Y - Y;
    REQUIRE(p.exact_div(MPoly::constant(1)) == p);

    MPoly x2_1 = MPoly::var(omega(1, 1), 2) + MPoly::constant(1);
    REQUIRE_THROWS_MATCHES(x2_1.exact_div(X - Y), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.kind() == Err::NotDivisible;
                           }));

    std::mt19937 rng(7);
    for (int rep = 0; rep < 12; ++rep) {
        MPoly q = oracles::random_poly(rng, 2, 20, 3);
        MPoly d = oracles::random_poly(rng, 2, 10, 2);
        if (d.is_zero()) continue;
        REQUIRE((q * d).exact_div(d) == q);
    }
}

TEST_CASE("schur via the bialternant", "[mpoly]") {
    auto vars2 = omega_vars(1, 2);
    REQUIRE(schur({1}, vars2) == X + Y);
    REQUIRE(schur({}, vars2) == MPoly::constant(1));
    MPoly s21 = MPoly::var(omega(1, 1), 2) * Y + X * MPoly::var(omega(1, 2), 2);
    REQUIRE(schur({2, 1}, vars2) == s21);

    REQUIRE_THROWS_AS(schur({1, 2}, vars2), Error);      // not weakly decreasing
    REQUIRE_THROWS_AS(schur({1, 1, 1}, vars2), Error);   // too many parts

    SECTION("agrees with the Jacobi-Trudi oracle, |lambda| <= 5, <= 4 variables") {
        for (int nv = 1; nv <= 4; ++nv) {
            auto vars = omega_vars(1, nv);
            for (int size = 0; size <= 5; ++size)
                for (const auto& lambda : partitions_max_parts(size, nv)) {
                    MPoly got = schur(lambda, vars);
                    REQUIRE(got == oracles::schur_jacobi_trudi(lambda, vars));
                    REQUIRE(is_block_symmetric(got, {vars}));
                }
        }
    }
}

TEST_CASE("block symmetry", "[mpoly]") {
    REQUIRE(is_block_symmetric(X + Y, {{omega(1, 1), omega(1, 2)}}));
    REQUIRE(!is_block_symmetric(X - Y, {{omega(1, 1), omega(1, 2)}}));
    MPoly p = MPoly::var(omega(1, 1)) * MPoly::var(omega(1, 2)) * MPoly::var(omega(2, 1));
    REQUIRE(is_block_symmetric(p, {{omega(1, 1), omega(1, 2)}, {omega(2, 1)}}));
}

TEST_CASE("substitution", "[mpoly]") {
    std::map<VarId, VarId> collapse{{omega(1, 1), tvar(1, 1)}, {omega(1, 2), tvar(1, 1)}};
    REQUIRE((X - Y).substitute(collapse).is_zero());
    REQUIRE((X * Y).substitute(collapse) == MPoly::var(tvar(1, 1), 2));
    std::map<VarId, VarId> id{{omega(1, 1), omega(1, 1)}};
    MPoly p = Rat(5) * X * Y - Y;
    REQUIRE(p.substitute(id) == p);
    REQUIRE(p.substitute({}) == p);
}

TEST_CASE("canonical text form", "[mpoly]") {
    MPoly p = MPoly::var(omega(2, 1), 2) * MPoly::var(omega(3, 1)) -
              MPoly::var(omega(2, 1)) * MPoly::var(omega(3, 1), 2);
    REQUIRE(p.str() == "ω[2,1]^2*ω[3,1] - ω[2,1]*ω[3,1]^2");
    REQUIRE(MPoly().str() == "0");
    REQUIRE(MPoly::constant(Rat(-3, 4)).str() == "-3/4");
    REQUIRE((Rat(1, 2) * MPoly::var(tvar(2, 1))).str() == "1/2*t[2,1]");
}

TEST_CASE("parsing round-trips the canonical form", "[mpoly]") {
    REQUIRE(MPoly::parse("0").is_zero());
    REQUIRE(MPoly::parse("w[1,1] + w[1,2]") == X + Y); // ascii alias for omega
    REQUIRE(MPoly::parse("3/2*ω[1,1]*t[2,1]^2") ==
            Rat(3, 2) * X * MPoly::var(tvar(2, 1), 2));
    REQUIRE_THROWS_AS(MPoly::parse("1 + + 2"), Error);
    REQUIRE_THROWS_AS(MPoly::parse("q[1,2]"), Error);

    std::mt19937 rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        MPoly p = oracles::random_poly(rng, 3, 30, 4);
        REQUIRE(MPoly::parse(p.str()) == p);
    }
}
