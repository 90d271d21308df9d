#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "series.hpp"

using namespace linideal;
using namespace lt;

TEST_CASE("coeff and monomial products") {
    // x1*x2 series
    Series s = Series::monomial(2, 4, mi({1, 1}), q(1));
    CHECK(s.coeff(mi({1, 1})).equals(q(1)));
    CHECK(s.coeff(mi({2, 0})).is_zero());

    Series x1 = Series::monomial(2, 2, mi({1, 0}), q(1));
    Series x2 = Series::monomial(2, 2, mi({0, 1}), q(1));
    CHECK((x1 * x2).coeff(mi({1, 1})).equals(q(1)));

    // degree-3 product truncated away at N=2
    Series x1sq = Series::monomial(2, 2, mi({2, 0}), q(1));
    CHECK((x1sq * x2).is_zero());
}

TEST_CASE("coeff query beyond truncation is an error") {
    Series s(2, 3, Mode::exact, 128);
    CHECK_THROWS_AS(s.coeff(mi({4, 0})), Error);
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        PolyMap A = random_map(rng, 2, 6, 4, false);
        PolyMap B = random_map(rng, 2, 6, 4, false);
        PolyMap C = random_map(rng, 2, 6, 4, false);
        const Series &a = A.comp(0), &b = B.comp(0), &c = C.comp(1);
        CHECK(((a * b) * c - a * (b * c)).is_zero());
        CHECK((a * (b + c) - (a * b + a * c)).is_zero());
        CHECK((a * b - b * a).is_zero());
    }
}

TEST_CASE("spec composition example") {
    PolyMap F = map2(2, {{{1, 0}, q(2)}, {{0, 2}, q(-7, 4)}}, {{{0, 1}, q(1, 2)}});
    PolyMap G = map2(2, {{{1, 0}, q(1)}, {{0, 2}, q(1)}}, {{{0, 1}, q(1)}});
    PolyMap R = compose(F, G);
    CHECK(R.coeff(0, mi({1, 0})).equals(q(2)));
    CHECK(R.coeff(0, mi({0, 2})).equals(q(1, 4)));
    CHECK(R.coeff(1, mi({0, 1})).equals(q(1, 2)));
    CHECK((R - compose_oracle(F, G)).is_zero());
}

TEST_CASE("identity composes trivially") {
    std::mt19937 rng(3);
    PolyMap G = random_map(rng, 2, 5, 5, true);
    PolyMap id = PolyMap::identity(2, 5, Mode::exact, 128);
    CHECK((compose(id, G) - G).is_zero());
    CHECK((compose(G, id) - G).is_zero());
}

TEST_CASE("compose matches oracle and is associative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMap F = random_map(rng, 2, 4, 4, false);
        PolyMap G = random_map(rng, 2, 4, 4, true);
        PolyMap H = random_map(rng, 2, 4, 4, true);
        CHECK((compose(F, G) - compose_oracle(F, G)).is_zero());
        CHECK((compose(F, compose(G, H)) - compose(compose(F, G), H)).is_zero());
    }
}

TEST_CASE("compose is degree filtered") {
    std::mt19937 rng(13);
    PolyMap F = random_map(rng, 2, 6, 6, false);
    PolyMap G = random_map(rng, 2, 6, 6, true);
    uint32_t d = 3;
    PolyMap full = compose(F, G);
    PolyMap Fd(2, 6, Mode::exact, 128), Gd(2, 6, Mode::exact, 128);
    for (int j = 0; j < 2; ++j) {
        Fd.comp(j) = F.comp(j).truncated_to(d);
        Gd.comp(j) = G.comp(j).truncated_to(d);
    }
    PolyMap low = compose(Fd, Gd);
    for (int j = 0; j < 2; ++j)
        CHECK((full.comp(j).truncated_to(d) - low.comp(j).truncated_to(d)).is_zero());
}

TEST_CASE("compose rejects nonzero constant term") {
    PolyMap F = PolyMap::identity(2, 3, Mode::exact, 128);
    PolyMap G = PolyMap::identity(2, 3, Mode::exact, 128);
    G.set_coeff(0, mi({0, 0}), q(1));
    CHECK_THROWS_AS(compose(F, G), NonzeroConstantTerm);
}

TEST_CASE("invert: linear, hand example, roundtrip") {
    // diagonal linear map
    Mat D = Mat::diagonal({q(2), q(1, 2)});
    PolyMap F = PolyMap::from_linear(D, 3);
    PolyMap Finv = invert(F);
    CHECK(Finv.coeff(0, mi({1, 0})).equals(q(1, 2)));
    CHECK(Finv.coeff(1, mi({0, 1})).equals(q(2)));

    // F = (x1 + x2^2, x2) -> inverse (x1 - x2^2, x2)
    PolyMap G = map2(3, {{{1, 0}, q(1)}, {{0, 2}, q(1)}}, {{{0, 1}, q(1)}});
    PolyMap Ginv = invert(G);
    CHECK(Ginv.coeff(0, mi({0, 2})).equals(q(-1)));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        PolyMap H = random_map(rng, 2, 6, 6, true);
        PolyMap Hinv = invert(H);
        PolyMap id = PolyMap::identity(2, 6, Mode::exact, 128);
        CHECK((compose(H, Hinv) - id).is_zero());
        CHECK((compose(Hinv, H) - id).is_zero());
        // invert is an involution on maps
        CHECK((invert(Hinv) - H).is_zero());
    }
}

TEST_CASE("invert rejects singular linear part") {
    PolyMap F(2, 3, Mode::exact, 128);
    F.set_coeff(0, mi({1, 0}), q(1));  // second row zero
    CHECK_THROWS_AS(invert(F), SingularLinearPart);
}

TEST_CASE("conjugate_coefficients") {
    Series f = Series::monomial(2, 3, mi({1, 0}), qi(0, 1, 1, 1));  // i*x1
    CHECK(f.conj_coeffs().coeff(mi({1, 0})).equals(qi(0, 1, -1, 1)));
    std::mt19937 rng(23);
    PolyMap A = random_map(rng, 2, 5, 4, false);
    PolyMap B = random_map(rng, 2, 5, 4, false);
    const Series &a = A.comp(0), &b = B.comp(0);
    // involution
    CHECK((a.conj_coeffs().conj_coeffs() - a).is_zero());
    // multiplicative
    CHECK(((a * b).conj_coeffs() - a.conj_coeffs() * b.conj_coeffs()).is_zero());
}

TEST_CASE("project") {
    PolyMap id = PolyMap::identity(2, 3, Mode::exact, 128);
    CHECK(project(id, CoeffSet::everything()).is_zero());

    PolyMap F = map2(3, {{{1, 0}, q(1)}, {{0, 2}, q(1)}}, {{{0, 1}, q(1)}});
    CoeffSet t;
    t.insert(mi({0, 2}), 0);
    PolyMap P = project(F, t);
    CHECK(P.coeff(0, mi({0, 2})).equals(q(1)));
    CHECK(P.comp(1).is_zero());

    // I^n union C_D target for D = diag(2,1/2), I = (x1 x2):
    // y2^2 is neither in the ideal nor resonant, y1 y2 is in the ideal
    DiagonalFamily D({{q(2), q(1, 2)}});
    MonomialIdeal I = MonomialIdeal::make(2, {mi({1, 1})});
    ResonanceReport rep = centralizer_report(D, 3);
    CoeffSet target = normalization_set(I, rep.resonant_pairs, 3);
    PolyMap G = map2(3, {{{1, 0}, q(1)}, {{0, 2}, q(1)}, {{1, 1}, q(1)}}, {{{0, 1}, q(1)}});
    PolyMap PG = project(G, target);
    CHECK(PG.coeff(0, mi({1, 1})).equals(q(1)));
    CHECK(PG.coeff(0, mi({0, 2})).is_zero());
    CHECK(PG.comp(1).is_zero());
}
