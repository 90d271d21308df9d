#include <doctest.h>

#include "helpers.hpp"
#include "smalldivisors.hpp"

using namespace linideal;
using namespace lt;

namespace {

DiagonalFamily hyperbolic() { return DiagonalFamily({{q(2), q(1, 2)}}); }
MonomialIdeal cross2() { return MonomialIdeal::make(2, {mi({1, 1})}); }

Magnitude sq(long num, long den = 1) { return Magnitude::from_sq(mpq_class(num, den)); }

// Recurrence oracle for eta: enumerate every decomposition of Q into parts of
// degree >= 1 and < |Q| (plus a free remainder) without memoization, scoring
// with the table values of strictly smaller indices. With the table verified
// at lower degrees this checks each entry straight from its definition.
Magnitude best_product_oracle(const std::map<Multiindex, Magnitude>& eta, const Multiindex& Q,
                              const Multiindex& rem, const Multiindex& min_part, bool have_part,
                              const Magnitude& acc) {
    Magnitude best = acc;
    bool found = have_part;
    for_each_below(rem, [&](const Multiindex& t) {
        if (t.degree() < 1 || t.degree() >= Q.degree()) return;
        if (t < min_part) return;  // parts in nondecreasing order, no duplicates
        Magnitude v =
            best_product_oracle(eta, Q, rem - t, t, true, acc * eta.at(t));
        if (!found || best < v) {
            best = v;
            found = true;
        }
    });
    return best;
}

long best_sum_oracle(const std::map<std::tuple<int, int, Multiindex>, long>& phi, int k, int j,
                     const Multiindex& Q, const Multiindex& rem, const Multiindex& min_part,
                     bool have_part, long acc) {
    long best = have_part ? acc : -1;
    for_each_below(rem, [&](const Multiindex& t) {
        if (t.degree() < 1 || t.degree() >= Q.degree()) return;
        if (t < min_part) return;
        long part = t.degree() == 1 ? 0 : phi.at({k, j, t});
        long v = best_sum_oracle(phi, k, j, Q, rem - t, t, true, acc + part);
        best = std::max(best, v);
    });
    return best;
}

} // namespace

TEST_CASE("omega by exhaustive enumeration") {
    OmegaSequence seq = omega(hyperbolic(), cross2(), 5);
    REQUIRE(seq.K == 5);
    for (int k = 0; k < 5; ++k) CHECK(seq.entries[k] == sq(1, 16));  // 1/4 at Q=(0,2), j=2
    CHECK(!seq.tail_certified);

    OmegaSequence zero = omega(hyperbolic(), MonomialIdeal::zero(2), 3);
    for (int k = 0; k < 3; ++k) CHECK(zero.entries[k] == sq(1, 16));
}

TEST_CASE("omega is an infimum over nonzero values only") {
    // resonant pairs of diag(2,1/2) contribute zeros which must be skipped
    DiagonalFamily D = hyperbolic();
    MonomialIdeal Z = MonomialIdeal::zero(2);
    OmegaSequence seq = omega(D, Z, 4);
    for (const auto& e : seq.entries) CHECK(!e.is_zero());
}

TEST_CASE("omega errors when every divisor vanishes") {
    DiagonalFamily Id({{q(1), q(1)}});
    CHECK_THROWS_AS(omega(Id, MonomialIdeal::zero(2), 2), AllDivisorsVanish);
}

TEST_CASE("omega monotonicity and ideal comparison") {
    DiagonalFamily D({{q(3), q(1, 3)}, {q(2), q(1, 2)}});
    OmegaSequence with_ideal = omega(D, cross2(), 5);
    OmegaSequence without = omega(D, MonomialIdeal::zero(2), 5);
    for (int k = 1; k < 5; ++k) {
        CHECK(with_ideal.entries[k] <= with_ideal.entries[k - 1]);
        CHECK(without.entries[k] <= without.entries[k - 1]);
    }
    // fewer candidates off the ideal, so the infimum can only grow
    for (int k = 0; k < 5; ++k) CHECK(without.entries[k] <= with_ideal.entries[k]);
}

TEST_CASE("tail certificate matches plain enumeration") {
    OmegaOptions small;
    small.enum_cap = 8;
    OmegaSequence certified = omega(hyperbolic(), cross2(), 6, small);
    CHECK(certified.tail_certified);
    OmegaSequence plain = omega(hyperbolic(), cross2(), 6);  // 2^6 = 64 enumerated
    REQUIRE(!plain.tail_certified);
    for (int k = 0; k < 6; ++k) CHECK(certified.entries[k] == plain.entries[k]);
}

TEST_CASE("deep omega via the tail certificate") {
    OmegaOptions small;
    small.enum_cap = 32;
    OmegaSequence seq = omega(hyperbolic(), cross2(), 40, small);
    REQUIRE(seq.K == 40);
    CHECK(seq.tail_certified);
    for (int k = 0; k < 40; ++k) CHECK(seq.entries[k] == sq(1, 16));
}

TEST_CASE("tail certificate refuses the zero ideal of diag(2,1/2)") {
    // mu^Q is constant along the diagonal Q = (t,t), so no growth direction
    // covers the full variable set and deep depths cannot be certified
    OmegaOptions small;
    small.enum_cap = 8;
    CHECK_THROWS_AS(omega(hyperbolic(), MonomialIdeal::zero(2), 6, small), BudgetExceeded);
}

TEST_CASE("brjuno partial sums") {
    mpfr_prec_t P = 128;
    BigFloat ln4 = BigFloat::from_si(4, P).log();

    BigFloat one_term = brjuno_partial(hyperbolic(), cross2(), 1, P);
    CHECK((one_term - ln4 * BigFloat::from_mpq(mpq_class(1, 2), P)).abs() < BigFloat::pow2(-100, P));

    // omega_k = 1/4 for every k, so the K-term sum is ln4 * (1 - 2^-K)
    BigFloat many = brjuno_partial(hyperbolic(), cross2(), 20, P);
    BigFloat expect = ln4 * (BigFloat::from_si(1, P) - BigFloat::pow2(-20, P));
    CHECK((many - expect).abs() < BigFloat::pow2(-100, P));

    OmegaSequence flat;
    flat.K = 7;
    for (int k = 0; k < 7; ++k) flat.entries.push_back(sq(1));
    CHECK(brjuno_partial(flat, P).is_zero());
}

TEST_CASE("theta over all variables and over the embedded set") {
    ThetaResult t = theta(hyperbolic(), MonomialIdeal::zero(2));
    CHECK(t.four_theta == sq(1, 4));  // 1/2
    CHECK(t.theta == sq(1, 64));      // 1/8
    CHECK(t.satisfied);
    CHECK(t.S_used == std::vector<int>{0, 1});

    DiagonalFamily big({{q(2), q(3)}});
    ThetaResult bad = theta(big, MonomialIdeal::zero(2));
    CHECK(bad.four_theta == sq(4));
    CHECK(!bad.satisfied);
    CHECK(!bad.warning.empty());

    DiagonalFamily D3({{q(2), q(1, 2), q(1)}});
    MonomialIdeal I3 = MonomialIdeal::make(3, {mi({1, 1, 0})});
    ThetaResult emb = theta(D3, I3);
    CHECK(emb.S_used == std::vector<int>{2});
    CHECK(emb.four_theta == sq(1));
    CHECK(emb.theta == sq(1, 16));  // 1/4
    CHECK(emb.satisfied);
}

TEST_CASE("diagnostics on the quadratic perturbation of diag(2,1/2)") {
    PolyMap F = map2(6, {{{1, 0}, q(2)}, {{0, 2}, q(-7, 4)}}, {{{0, 1}, q(1, 2)}});
    MajorantDiagnostics diag = majorant_diagnostics({F}, hyperbolic(), cross2(), 6, 3);

    // delta_Q = min over j of max_i |mu^Q - mu_j|, hand-unrolled
    CHECK(diag.delta.at(mi({0, 2})) == sq(1, 16));   // 1/4
    CHECK(diag.delta.at(mi({2, 0})) == sq(4));       // 2
    CHECK(diag.delta.at(mi({0, 3})) == sq(9, 64));   // 3/8
    CHECK(diag.delta.at(mi({3, 0})) == sq(36));      // 6
    CHECK(diag.delta.find(mi({1, 1})) == diag.delta.end());  // inside the ideal

    CHECK(diag.eta.at(mi({1, 0})) == sq(1));
    CHECK(diag.eta.at(mi({0, 2})) == sq(16));        // 4
    CHECK(diag.eta.at(mi({2, 0})) == sq(1, 4));      // 1/2
    CHECK(diag.eta.at(mi({0, 3})) == sq(1024, 9));   // 32/3
    CHECK(diag.eta.at(mi({3, 0})) == sq(1, 36));     // 1/6
    CHECK(diag.eta.at(mi({0, 4})) == sq(65536, 49)); // 256/7

    // a = 7/4 up to the safety margin (single stored coefficient, b = 1)
    mpfr_prec_t P = diag.a.prec();
    CHECK((diag.a - BigFloat::from_mpq(mpq_class(7, 4), P)).abs() < BigFloat::pow2(-50, P));

    // sigma_{(0,2)} = a, sigma_{(0,3)} = a(2a + 1)
    CHECK((diag.sigma.at(mi({0, 2})) - BigFloat::from_mpq(mpq_class(7, 4), P)).abs() <
          BigFloat::pow2(-40, P));
    CHECK((diag.sigma.at(mi({0, 3})) - BigFloat::from_mpq(mpq_class(63, 8), P)).abs() <
          BigFloat::pow2(-40, P));

    // theta*omega_1 = 1/32 is below every delta, so all counts vanish
    CHECK(diag.phi.at({1, mi({0, 2})}) == 0);
    for (const auto& [key, v] : diag.psi) CHECK(v == 0);
    for (const auto& [key, v] : diag.phi) CHECK(v == 0);

    for (const auto& chk : diag.checks) CHECK(chk.pass);
    CHECK(diag.c_estimate <= diag.c_bound);
}

TEST_CASE("eta and phi recurrences against exhaustive decomposition search") {
    PolyMap F = map2(6, {{{1, 0}, q(2)}, {{0, 2}, q(-7, 4)}}, {{{0, 1}, q(1, 2)}});
    MajorantDiagnostics diag = majorant_diagnostics({F}, hyperbolic(), cross2(), 6, 3);
    Magnitude one = Magnitude::one(Mode::exact);
    for (const auto& [Q, e] : diag.eta) {
        if (Q.degree() < 2) continue;
        const Magnitude& d = diag.delta.at(Q);
        if (d.is_zero()) {
            CHECK(e.is_zero());
            continue;
        }
        Magnitude rhs = best_product_oracle(diag.eta, Q, Q, Multiindex::zero(2), false, one);
        CHECK(e * d == rhs);
    }
    for (const auto& [key, v] : diag.phi_j) {
        auto [k, j, Q] = key;
        long rhs = best_sum_oracle(diag.phi_j, k, j, Q, Q, Multiindex::zero(2), false, 0);
        CHECK(v == diag.psi.at(key) + std::max<long>(rhs, 0));
    }
}

TEST_CASE("nonzero small-divisor counts for a unimodular eigenvalue") {
    // lambda = (3+4i)/5 has modulus 1 and infinite order; |lambda^7 - lambda|
    // dips below theta*omega_1 so the depth-1 count fires at degree 8
    DiagonalFamily D({{qi(3, 5, 4, 5)}});
    MonomialIdeal Z = MonomialIdeal::zero(1);
    PolyMap F(1, 10, Mode::exact, 128);
    F.set_coeff(0, mi({1}), qi(3, 5, 4, 5));
    MajorantDiagnostics diag = majorant_diagnostics({F}, D, Z, 10, 4);

    CHECK(diag.theta.four_theta == sq(1));
    CHECK(diag.omegas.entries[0] == sq(4, 5));           // |lambda - 1|, q = 2
    CHECK(diag.omegas.entries[1] == sq(4, 5));
    CHECK(diag.omegas.entries[2] == sq(3364, 78125));    // |lambda^7 - lambda|, q = 8
    CHECK(diag.omegas.entries[3] == sq(3364, 78125));

    CHECK(diag.psi.at({1, 0, mi({8})}) == 1);
    CHECK(diag.psi.at({2, 0, mi({8})}) == 1);
    CHECK(diag.psi.at({3, 0, mi({8})}) == 0);  // omega_3 already reflects the dip
    for (uint32_t d = 2; d <= 7; ++d) CHECK(diag.phi.at({1, mi({d})}) == 0);
    CHECK(diag.phi.at({1, mi({8})}) == 1);
    CHECK(diag.phi.at({1, mi({9})}) == 1);
    CHECK(diag.phi.at({1, mi({10})}) == 1);
    CHECK(diag.phi.at({2, mi({8})}) == 1);

    for (const auto& chk : diag.checks) CHECK(chk.pass);
}

TEST_CASE("linear family gives a = 0 and zero sigma") {
    PolyMap F = PolyMap::from_linear(Mat::diagonal({q(2), q(1, 2)}), 5);
    MajorantDiagnostics diag = majorant_diagnostics({F}, hyperbolic(), cross2(), 5, 2);
    CHECK(diag.a.is_zero());
    for (const auto& [Q, s] : diag.sigma) CHECK(s.is_zero());
    for (const auto& chk : diag.checks) CHECK(chk.pass);
}

TEST_CASE("phi_tilde bound checking") {
    PolyMap F = map2(6, {{{1, 0}, q(2)}, {{0, 2}, q(-7, 4)}}, {{{0, 1}, q(1, 2)}});
    MajorantDiagnostics diag = majorant_diagnostics({F}, hyperbolic(), cross2(), 6, 3);

    // Phi = id + x2^2 e1 linearizes F off (x1 x2): phi_tilde_{(0,2)} = 1
    PolyMap Phi = PolyMap::identity(2, 6, Mode::exact, 128);
    Phi.set_coeff(0, mi({0, 2}), q(1));
    auto table = phi_tilde_table(Phi, cross2());
    REQUIRE(table.size() == 1);
    CHECK(check_phi_tilde(diag, table).pass);  // 1 <= sigma * eta = 7/4 * 4

    std::map<Multiindex, BigFloat> bogus;
    bogus.emplace(mi({0, 2}), BigFloat::from_si(100, 128));
    BoundCheck bad = check_phi_tilde(diag, bogus);
    CHECK(!bad.pass);
    CHECK(!bad.witness.empty());
}

TEST_CASE("diagnostics budget guards") {
    PolyMap F = PolyMap::from_linear(Mat::diagonal({q(2), q(1, 2)}), 12);
    CHECK_THROWS_AS(majorant_diagnostics({F}, hyperbolic(), cross2(), 12, 2), BudgetExceeded);

    DiagonalFamily D4({{q(2), q(3), q(4), q(5)}});
    PolyMap F4 = PolyMap::from_linear(Mat::diagonal({q(2), q(3), q(4), q(5)}), 4);
    CHECK_THROWS_AS(majorant_diagnostics({F4}, D4, MonomialIdeal::zero(4), 4, 2), BudgetExceeded);
}

TEST_CASE("float mode omega agrees with exact mode") {
    mpfr_prec_t P = 128;
    auto f = [&](long n, long d) {
        return Scalar::floating(BigFloat::from_mpq(mpq_class(n, d), P), BigFloat(P));
    };
    DiagonalFamily Df({{f(2, 1), f(1, 2)}});
    BigFloat eps = BigFloat::pow2(-64, P);
    OmegaOptions opts;
    opts.eps = &eps;
    OmegaSequence seq = omega(Df, cross2(), 4, opts);
    for (const auto& e : seq.entries)
        CHECK((e.value(P) - BigFloat::from_mpq(mpq_class(1, 4), P)).abs() < BigFloat::pow2(-60, P));
}
