#include "realmanifolds.hpp"

#include "errors.hpp"

namespace linideal {

namespace {

Scalar spow(const Scalar& s, uint32_t e, Mode mode, mpfr_prec_t prec) {
    Scalar r = Scalar::one(mode, prec);
    for (uint32_t k = 0; k < e; ++k) r = r * s;
    return r;
}

PolyMap rep_at(const AntiInvolution& rho, uint32_t N) {
    PolyMap H = PolyMap::from_linear(rho.B, N);
    for (int j = 0; j < rho.n(); ++j)
        for (const auto& [Q, c] : rho.R.comp(j).terms())
            if (Q.degree() <= N) H.comp(j).add_to_coeff(Q, c);
    return H;
}

Magnitude zero_mag(Mode mode, mpfr_prec_t prec) {
    return Magnitude::one(mode, prec).scaled(0);
}

} // namespace

AntiInvolution AntiInvolution::make(Mat B, PolyMap R) {
    if (B.n != R.n()) throw DimensionMismatch("involution matrix/remainder dimension mismatch");
    for (int j = 0; j < R.n(); ++j)
        for (const auto& [Q, c] : R.comp(j).terms())
            if (Q.degree() < 2)
                throw Error(ErrorKind::bad_input,
                            "involution remainder must have order two or higher");
    return AntiInvolution{std::move(B), std::move(R)};
}

AntiInvolution AntiInvolution::linear(Mat B, uint32_t N) {
    PolyMap R(B.n, N, B.mode, B.prec);
    return AntiInvolution{std::move(B), std::move(R)};
}

AntiInvolution AntiInvolution::from_rep(const PolyMap& H) {
    for (int j = 0; j < H.n(); ++j)
        if (!H.coeff(j, Multiindex::zero(H.n())).is_zero())
            throw NonzeroConstantTerm("involution representative has a constant term");
    return make(H.linear_part(), H.nonlinear_part());
}

PolyMap AntiInvolution::rep() const { return rep_at(*this, R.trunc()); }

InvolutionCheck validate_involution(const AntiInvolution& rho, uint32_t N, const BigFloat* eps) {
    InvolutionCheck c;
    Mat prod = rho.B * rho.B.conj();
    c.linear_ok = prod.is_identity(eps);
    c.linear_residual = prod.max_entry_mag(Mat::identity(rho.n(), rho.B.mode, rho.B.prec)).str();
    PolyMap H = rep_at(rho, N);
    PolyMap r = compose(H, H.conj_coeffs()) - PolyMap::identity(rho.n(), N, H.mode(), H.prec());
    c.involutive = r.is_zero(eps);
    c.composition_residual = r.max_coeff_mag().str();
    return c;
}

AntiInvolution transport_involution(const AntiInvolution& rho, const PolyMap& h) {
    uint32_t N = h.trunc();
    PolyMap H = rep_at(rho, N);
    return AntiInvolution::from_rep(compose(compose(h, H), invert(h).conj_coeffs()));
}

PairFamily pair_maps(const std::vector<AntiInvolution>& rhos, uint32_t N, const BigFloat* eps) {
    if (rhos.empty()) throw Error(ErrorKind::bad_input, "empty involution family");
    int n = rhos[0].n();
    Mode mode = rhos[0].R.mode();
    for (const auto& r : rhos) {
        if (r.n() != n) throw DimensionMismatch("involution family dimension mismatch");
        if (r.R.mode() != mode) throw ModeMismatch("involution family mode mismatch");
        if (r.trunc() < N)
            throw Error(ErrorKind::bad_input, "involution truncation below requested degree");
        InvolutionCheck c = validate_involution(r, N, eps);
        if (!c.valid())
            throw HypothesisFailed("not an involution: linear residual " + c.linear_residual +
                                   ", composition residual " + c.composition_residual);
    }

    PairFamily P;
    P.m = static_cast<int>(rhos.size());
    P.n = n;
    P.N = N;
    std::vector<PolyMap> reps;
    for (const auto& r : rhos) reps.push_back(rep_at(r, N));

    P.all_diagonal = true;
    std::vector<PolyMap> flat;
    for (int i = 0; i < P.m; ++i) {
        P.F.emplace_back();
        P.D.emplace_back();
        for (int j = 0; j < P.m; ++j) {
            P.F[i].push_back(compose(reps[i], reps[j].conj_coeffs()));
            P.D[i].push_back(rhos[i].B * rhos[j].B.conj());
            if (!P.D[i][j].is_diagonal(eps)) P.all_diagonal = false;
            flat.push_back(P.F[i][j]);
        }
    }
    P.commuting = check_commuting(flat, N, eps);
    if (P.all_diagonal)
        for (int i = 0; i < P.m; ++i) {
            P.mu.emplace_back();
            for (int j = 0; j < P.m; ++j) P.mu[i].push_back(P.D[i][j].diagonal_entries());
        }
    return P;
}

NonresonanceReport nonresonance_check(const PairFamily& pairs, const MonomialIdeal& I,
                                      uint32_t N, const BigFloat* eps) {
    if (!pairs.all_diagonal) throw NonDiagonalLinearPart("pair linear parts are not diagonal");
    if (I.n() != pairs.n) throw DimensionMismatch("ideal dimension mismatch");
    NonresonanceReport rep;
    Mode mode = pairs.mu[0][0][0].mode();
    mpfr_prec_t prec = pairs.mu[0][0][0].prec();
    for (int i = 0; i < pairs.m; ++i)
        for (int k = 0; k < pairs.n; ++k)
            for_each_in_degrees(pairs.n, 2, N, [&](const Multiindex& Q) {
                for (int j = 0; j < pairs.m; ++j) {
                    Scalar p = Scalar::one(mode, prec);
                    for (int a = 0; a < pairs.n; ++a)
                        p = p * spow(pairs.mu[i][j][a].conj(), Q.e[a], mode, prec);
                    if (!p.equals(pairs.mu[i][j][k].inverse(), eps)) return;
                }
                rep.nonresonant = false;
                if (!I.member(Q)) rep.nonresonant_on_ideal = false;
                rep.violations.emplace_back(i, k, Q);
            });
    return rep;
}

std::string VarietyDescription::str() const {
    if (unions.empty()) return "C^n";
    std::string s = "{ z : ";
    for (std::size_t g = 0; g < unions.size(); ++g) {
        if (g > 0) s += " and ";
        s += "(";
        for (std::size_t a = 0; a < unions[g].size(); ++a) {
            if (a > 0) s += " or ";
            s += "z_" + std::to_string(unions[g][a] + 1) + " = 0";
        }
        s += ")";
    }
    return s + " }";
}

VarietyDescription variety_of(const MonomialIdeal& I) {
    VarietyDescription v;
    for (const auto& g : I.generators()) {
        std::vector<int> vars;
        for (int a = 0; a < I.n(); ++a)
            if (g.e[a] > 0) vars.push_back(a);
        v.unions.push_back(std::move(vars));
    }
    return v;
}

StraighteningReport straighten(const std::vector<AntiInvolution>& rhos, const MonomialIdeal& I,
                               uint32_t N, const BigFloat* eps) {
    if (N < 2) throw Error(ErrorKind::bad_input, "straighten needs N >= 2");
    std::vector<InvolutionCheck> inv_checks;
    for (const auto& r : rhos) inv_checks.push_back(validate_involution(r, N, eps));
    PairFamily P = pair_maps(rhos, N, eps);
    if (!P.commuting) throw NotCommuting("pair maps do not commute");
    if (!P.all_diagonal) throw NonDiagonalLinearPart("pair linear parts are not diagonal");
    Mode mode = P.F[0][0].mode();
    mpfr_prec_t prec = P.F[0][0].prec();

    std::vector<IdealMapCheck> ideal_checks;
    for (int i = 0; i < P.m; ++i) {
        ideal_checks.push_back(invariance_and_compatibility(I, rhos[i].B, N));
        const IdealMapCheck& c = ideal_checks.back();
        if (!c.linear_invariance)
            throw HypothesisFailed("ideal not invariant under involution " +
                                   std::to_string(i + 1) + ": " + c.witness);
        if (!c.rho_compatibility)
            throw HypothesisFailed("ideal not compatible with involution " +
                                   std::to_string(i + 1) + ": " + c.witness);
    }

    NonresonanceReport nonres = nonresonance_check(P, I, N, eps);
    if (!nonres.nonresonant_on_ideal)
        for (const auto& [i, k, Q] : nonres.violations)
            if (!I.member(Q))
                throw HypothesisFailed("resonant pair eigenvalues off the ideal at i = " +
                                       std::to_string(i + 1) + ", k = " + std::to_string(k + 1) +
                                       ", Q = " + Q.str());

    // ordered pair maps with i != j generate the group; m = 1 leaves only Id
    std::vector<PolyMap> family;
    std::vector<std::pair<int, int>> pairs_used;
    for (int i = 0; i < P.m; ++i)
        for (int j = 0; j < P.m; ++j)
            if (i != j || P.m == 1) {
                family.push_back(P.F[i][j]);
                pairs_used.emplace_back(i, j);
            }
    StraighteningReport rep(linearize_on_ideal(family, I, N));
    rep.involution_checks = std::move(inv_checks);
    rep.ideal_checks = std::move(ideal_checks);
    rep.nonres = std::move(nonres);

    PolyMap Phi_inv = invert(rep.lin.Phi);
    for (const auto& r : rhos) rep.transported.push_back(transport_involution(r, Phi_inv));
    for (int i = 0; i < P.m && rep.transported_in_ideal; ++i)
        for (int k = 0; k < P.n && rep.transported_in_ideal; ++k)
            for (const auto& [Q, c] : rep.transported[i].R.comp(k).terms())
                if (!I.member(Q) && !c.is_zero(eps)) {
                    rep.transported_in_ideal = false;
                    rep.transported_witness = "rho_" + std::to_string(i + 1) + ", component " +
                                              std::to_string(k + 1) + ", " + Q.str();
                    break;
                }

    // input-sanity identity:
    // R_i = D_ij R_i(conj F_ij) + D_ij B_i conj(f_ij) + f_ij o rho_j,
    // all read as holomorphic series in w = conj z
    rep.conj_residual = zero_mag(mode, prec);
    std::vector<PolyMap> reps;
    for (const auto& r : rhos) reps.push_back(rep_at(r, N));
    for (int i = 0; i < P.m; ++i) {
        PolyMap Ri = rep_at(rhos[i], N).nonlinear_part();
        for (int j = 0; j < P.m; ++j) {
            PolyMap fij = P.F[i][j].nonlinear_part();
            PolyMap r = Ri - apply_linear(P.D[i][j], compose(Ri, P.F[i][j].conj_coeffs())) -
                        apply_linear(P.D[i][j] * rhos[i].B, fij.conj_coeffs()) -
                        compose(fij, reps[j]);
            Magnitude m = r.max_coeff_mag();
            if (rep.conj_residual < m) rep.conj_residual = m;
        }
    }

    rep.normalizability_residual = zero_mag(mode, prec);
    rep.group_residual = zero_mag(mode, prec);
    for (int i = 0; i < P.m; ++i) {
        PolyMap Rti(P.n, N, mode, prec);
        for (int k = 0; k < P.n; ++k)
            for (const auto& [Q, c] : rep.transported[i].R.comp(k).terms())
                if (Q.degree() <= N) Rti.set_coeff(k, Q, c);
        for (int j = 0; j < P.m; ++j) {
            PolyMap r = Rti - apply_linear(P.D[i][j],
                                           compose(Rti, PolyMap::from_linear(P.D[i][j].conj(), N)));
            Magnitude m = r.max_coeff_mag();
            if (rep.normalizability_residual < m) rep.normalizability_residual = m;

            PolyMap g = compose(reps[i], compose(P.F[i][j], reps[i]).conj_coeffs()) - P.F[j][i];
            Magnitude gm = g.max_coeff_mag();
            if (rep.group_residual < gm) rep.group_residual = gm;
        }
    }

    rep.variety = variety_of(I);
    for (int k = 0; k < P.m; ++k)
        rep.manifold_descriptions.push_back("M_" + std::to_string(k + 1) + " cap S = { z in " +
                                            rep.variety.str() + " : B_" + std::to_string(k + 1) +
                                            " conj(z) = z }");

    std::vector<Mat> lins;
    for (const auto& [i, j] : pairs_used) lins.push_back(P.D[i][j]);
    DiagonalFamily Dfam = DiagonalFamily::from_linear_parts(lins, eps);
    std::vector<PolyMap> straight_reps;
    for (const auto& t : rep.transported)
        straight_reps.push_back(PolyMap::from_linear(t.B, N));
    rep.verification = verify(rep.lin, family, I, centralizer_report(Dfam, N, eps), &reps,
                              &straight_reps, eps);
    rep.pairs = std::move(P);
    return rep;
}

} // namespace linideal
