#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "resonance.hpp"

using namespace linideal;
using namespace lt;

namespace {
DiagonalFamily hyperbolic() { return DiagonalFamily({{q(2), q(1, 2)}}); }
} // namespace

TEST_CASE("delta values") {
    DiagonalFamily D = hyperbolic();
    auto d1 = delta(D, mi({2, 0}), 0);
    CHECK(d1.deltas[0].equals(q(2)));  // 4 - 2
    auto d2 = delta(D, mi({2, 1}), 0);
    CHECK(d2.deltas[0].is_zero());  // 4*(1/2) - 2

    DiagonalFamily Id({{q(1), q(1)}});
    for_each_in_degrees(2, 2, 4, [&](const Multiindex& Q) {
        for (int j = 0; j < 2; ++j) CHECK(delta(Id, Q, j).max_mag.is_zero());
    });
}

TEST_CASE("delta argmax breaks ties at smallest index") {
    DiagonalFamily D({{q(2), q(1, 2)}, {qi(0, 1, 2, 1), qi(0, 1, 1, 2)}});  // D2 = i*D1
    // |Q| = 5: delta^2 = i * delta^1, moduli tie for every (Q,j)
    auto d = delta(D, mi({5, 0}), 0);
    CHECK(d.tied.size() == 2);
    CHECK(d.argmax_i == 0);
}

TEST_CASE("mu_pow is multiplicative") {
    std::mt19937 rng(31);
    DiagonalFamily D({{qi(2, 3, 1, 5), q(-7, 2)}, {q(1, 4), qi(0, 1, 1, 1)}});
    std::uniform_int_distribution<uint32_t> e(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Multiindex a({e(rng), e(rng)}), b({e(rng), e(rng)});
        for (int i = 0; i < 2; ++i)
            CHECK(D.mu_pow(i, a + b).equals(D.mu_pow(i, a) * D.mu_pow(i, b)));
    }
}

TEST_CASE("invariant generators by exhaustive enumeration") {
    // D = diag(2, 1/2): solutions of mu^R = 1 are r1 = r2, generator (1,1)
    auto gens = invariant_generators(hyperbolic(), 10);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == mi({1, 1}));

    // D = diag(4, 2): no solutions at all
    DiagonalFamily D42({{q(4), q(2)}});
    CHECK(invariant_generators(D42, 10).empty());

    // D = Id: all unit multiindices
    DiagonalFamily Id({{q(1), q(1), q(1)}});
    auto ug = invariant_generators(Id, 3);
    REQUIRE(ug.size() == 3);
    for (int a = 0; a < 3; ++a)
        CHECK(std::count(ug.begin(), ug.end(), Multiindex::unit(3, a)) == 1);
}

TEST_CASE("cutoff flag fires when a minimal generator sits at the cutoff") {
    // diag(i): mu^4 = 1 first at degree 4
    DiagonalFamily D({{qi(0, 1, 1, 1)}});
    bool limited = false;
    auto gens = invariant_generators(D, 4, &limited);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == mi({4}));
    CHECK(limited);
    invariant_generators(D, 5, &limited);
    CHECK(!limited);
}

TEST_CASE("centralizer report for diag(2,1/2)") {
    ResonanceReport rep = centralizer_report(hyperbolic(), 8);
    // resonant pairs are ((k+1,k),1) and ((k,k+1),2), k >= 1
    for (const auto& [Q, j] : rep.resonant_pairs) {
        if (j == 0)
            CHECK(Q.e[0] == Q.e[1] + 1);
        else
            CHECK(Q.e[1] == Q.e[0] + 1);
    }
    // exhaustive cross-check against the definition
    std::size_t count = 0;
    for_each_in_degrees(2, 2, 8, [&](const Multiindex& Q) {
        for (int j = 0; j < 2; ++j)
            if (is_resonant(hyperbolic(), Q, j)) ++count;
    });
    CHECK(count == rep.resonant_pairs.size());
    REQUIRE(rep.res_ideal.generators().size() == 1);
    CHECK(rep.res_ideal.generators()[0] == mi({1, 1}));
    CHECK(rep.centralizer_generated);
}

TEST_CASE("centralizer not generated for diag(4,2)") {
    DiagonalFamily D({{q(4), q(2)}});
    ResonanceReport rep = centralizer_report(D, 8);
    REQUIRE(rep.resonant_pairs.size() == 1);
    CHECK(rep.resonant_pairs[0].first == mi({0, 2}));
    CHECK(rep.resonant_pairs[0].second == 0);
    CHECK(rep.res_ideal.is_zero_ideal());
    CHECK(!rep.centralizer_generated);
}

TEST_CASE("two-member family resonates like its members") {
    DiagonalFamily D({{q(2), q(1, 2)}, {q(3), q(1, 3)}});
    ResonanceReport pair = centralizer_report(D, 8);
    ResonanceReport single = centralizer_report(hyperbolic(), 8);
    CHECK(pair.resonant_pairs == single.resonant_pairs);
    CHECK(pair.centralizer_generated);
}

TEST_CASE("generators induce resonant pairs") {
    ResonanceReport rep = centralizer_report(hyperbolic(), 8);
    for (const auto& R : rep.invariant_gens)
        for (int j = 0; j < 2; ++j) {
            Multiindex Q = R + Multiindex::unit(2, j);
            if (Q.degree() < 2 || Q.degree() > 8) continue;
            CHECK(std::count(rep.resonant_pairs.begin(), rep.resonant_pairs.end(),
                             std::make_pair(Q, j)) == 1);
        }
}

TEST_CASE("centralizer_generated implies membership") {
    DiagonalFamily D({{q(2), q(1, 2)}, {qi(0, 1, 2, 1), qi(0, 1, 1, 2)}});
    ResonanceReport rep = centralizer_report(D, 9);
    if (rep.centralizer_generated)
        for (const auto& [Q, j] : rep.resonant_pairs) CHECK(rep.res_ideal.member(Q));
}

TEST_CASE("zero eigenvalue is rejected") {
    CHECK_THROWS_AS(DiagonalFamily({{q(0), q(1)}}), Error);
}
