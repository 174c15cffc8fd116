// Whole-stack checks on an 8-vertex quiver that mixes all three ADE block
// types (A1 + A3 + D4), plus decomposition runs on quivers the smaller suites
// do not cover.

#include <catch2/catch_amalgamated.hpp>

#include "coha/qalg.hpp"
#include "coha/strata.hpp"

using namespace coha;

namespace {

struct Fig {
    Quiver quiver;
    SubquiverPartition partition;
};

// built from arbitrary labels through the reindexing helper
Fig mixed_quiver() {
    std::vector<Arrow> raw{{2, 1}, {2, 3}, {2, 4}, {4, 6}, {3, 5}, {6, 5}, {7, 5}, {7, 8}};
    auto re = head_before_tail_reindex(8, raw);
    auto relabel = [&](std::vector<int> vs) {
        for (int& v : vs) v = re.new_of_old[static_cast<size_t>(v - 1)];
        std::sort(vs.begin(), vs.end());
        return vs;
    };
    SubquiverPartition p = validate_partition(
        re.quiver, {relabel({8}), relabel({5, 6, 7}), relabel({1, 2, 3, 4})});
    return {re.quiver, p};
}

} // namespace

TEST_CASE("mixed A1+A3+D4 partition", "[integration]") {
    Fig f = mixed_quiver();
    REQUIRE(f.partition.types[0] == DynkinType{'A', 1});
    REQUIRE(f.partition.types[1] == DynkinType{'A', 3});
    REQUIRE(f.partition.types[2] == DynkinType{'D', 4});

    RootList rl = combined_reineke_order(f.quiver, f.partition);
    REQUIRE(rl.size() == 1 + 6 + 12);

    SECTION("dilogarithm factorization in the unit box") {
        DimVector box(8, 1);
        REQUIRE(verify_factorization(f.quiver, f.partition, box).ok);
        REQUIRE(verify_factorization(f.quiver, singleton_partition(f.quiver), box).ok);
    }

    SECTION("all strata of the all-ones dimension vector") {
        DimVector gamma(8, 1);
        auto parts = enumerate_partitions(rl, gamma);
        REQUIRE(parts.size() == 32);
        for (const auto& m : parts) {
            REQUIRE(euler_class(f.quiver, rl, m).degree() == codim(f.quiver, rl, m));
            REQUIRE(codim_is_block_additive(f.quiver, f.partition, rl, m));
            REQUIRE(orbit_classes_product(f.quiver, f.partition, rl, m) ==
                    stratum_class(f.quiver, rl, m));
        }
    }
}

TEST_CASE("type E strata", "[integration]") {
    // type E outputs are computed unconditionally; the algebraic coherence
    // checks still apply
    Quiver e6(6, {{2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 3}});
    SubquiverPartition whole = validate_partition(e6, {{1, 2, 3, 4, 5, 6}});
    RootList rl = combined_reineke_order(e6, whole);
    REQUIRE(rl.size() == 36);
    DimVector gamma(6, 1);
    auto parts = enumerate_partitions(rl, gamma);
    REQUIRE(parts.size() == 32);
    for (const auto& m : parts)
        REQUIRE(euler_class(e6, rl, m).degree() == codim(e6, rl, m));
    REQUIRE(verify_factorization(e6, whole, DimVector(6, 1)).ok);
}

TEST_CASE("structure verification across block shapes", "[integration]") {
    SECTION("D4 cut into A2 + A1 + A1") {
        Quiver d4(4, {{2, 1}, {3, 1}, {4, 1}});
        SubquiverPartition p = validate_partition(d4, {{1, 2}, {3}, {4}});
        for (const auto& r : verify_structure_iso(d4, p, {1, 1, 1, 1}, 3)) REQUIRE(r.verified);
    }

    SECTION("Kronecker admits only the singleton partition") {
        Quiver kr(2, {{2, 1}, {2, 1}});
        REQUIRE_THROWS_AS(validate_partition(kr, {{1, 2}}), Error);
        for (const auto& r : verify_structure_iso(kr, singleton_partition(kr), {1, 1}, 4))
            REQUIRE(r.verified);
    }

    SECTION("whole-A3 partition at gamma (1,1,1)") {
        Quiver a3(3, {{2, 1}, {3, 2}});
        SubquiverPartition whole = validate_partition(a3, {{1, 2, 3}});
        for (const auto& r : verify_structure_iso(a3, whole, {1, 1, 1}, 3)) REQUIRE(r.verified);
    }
}
