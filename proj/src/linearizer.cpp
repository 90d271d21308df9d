#include "linearizer.hpp"

#include "errors.hpp"

namespace linideal {

namespace {

PolyMap truncate_map(const PolyMap& F, uint32_t N) {
    PolyMap out(F.n(), N, F.mode(), F.prec());
    for (int j = 0; j < F.n(); ++j)
        for (const auto& [Q, c] : F.comp(j).terms())
            if (Q.degree() <= N) out.set_coeff(j, Q, c);
    return out;
}

std::string scalar_str(const Scalar& s) {
    auto [re, im] = s.str_pair();
    return "(" + re + ", " + im + ")";
}

} // namespace

bool check_commuting(const std::vector<PolyMap>& F, uint32_t N, const BigFloat* eps) {
    for (std::size_t a = 0; a < F.size(); ++a)
        for (std::size_t b = a + 1; b < F.size(); ++b) {
            PolyMap A = truncate_map(F[a], N), B = truncate_map(F[b], N);
            if (!(compose(A, B) - compose(B, A)).is_zero(eps)) return false;
        }
    return true;
}

LinearizationResult linearize_on_ideal(const std::vector<PolyMap>& F, const MonomialIdeal& I,
                                       uint32_t N, const LinearizeOptions& opts) {
    if (F.empty()) throw Error(ErrorKind::bad_input, "empty family");
    int n = F[0].n();
    int l = static_cast<int>(F.size());
    if (I.n() != n) throw DimensionMismatch("ideal dimension mismatch");
    if (N < 1) throw Error(ErrorKind::bad_input, "truncation degree must be >= 1");
    Mode mode = F[0].mode();
    mpfr_prec_t prec = F[0].prec();
    for (const auto& Fi : F) {
        if (Fi.n() != n) throw DimensionMismatch("family dimension mismatch");
        if (Fi.mode() != mode) throw ModeMismatch("family mode mismatch");
        if (Fi.trunc() < N) throw Error(ErrorKind::bad_input, "truncation below requested degree");
    }
    BigFloat eps_store;
    const BigFloat* eps = opts.eps;
    if (mode == Mode::floating && eps == nullptr) {
        eps_store = BigFloat::pow2(-static_cast<long>(prec / 2), prec);
        eps = &eps_store;
    }

    std::vector<PolyMap> Fw;
    std::vector<Mat> lin;
    for (const auto& Fi : F) {
        Fw.push_back(truncate_map(Fi, N));
        lin.push_back(Fw.back().linear_part());
    }
    DiagonalFamily D = DiagonalFamily::from_linear_parts(lin, eps);
    if (!check_commuting(Fw, N, eps)) throw NotCommuting();

    std::vector<PolyMap> f, Dlin;
    for (int i = 0; i < l; ++i) {
        f.push_back(Fw[i].nonlinear_part());
        Dlin.push_back(PolyMap::from_linear(lin[i], N));
    }

    LinearizationResult res{PolyMap::identity(n, N, mode, prec), Dlin, {}, {}, opts.mode, N};
    bool g_off_ideal = false;
    Scalar zero = Scalar::zero(mode, prec);

    for (uint32_t d = 2; d <= N; ++d) {
        // With f of order two, the degree-d coefficients of every right hand
        // side only involve phi and g coefficients of degree < d: the
        // degree-d contributions of phi through the linear part of G_i
        // cancel against phi(D_i y).
        PolyMap phi = res.Phi.nonlinear_part();
        std::vector<PolyMap> rhs, diff;
        for (int i = 0; i < l; ++i) {
            diff.push_back(compose(phi, res.G[i]) - compose(phi, Dlin[i]));
            rhs.push_back(compose(f[i], res.Phi) - diff.back());
        }

        for_each_in_shell(n, d, [&](const Multiindex& Q) {
            bool inI = I.member(Q);
            for (int j = 0; j < n; ++j) {
                if (!inI && !g_off_ideal)
                    for (int i = 0; i < l; ++i)
                        if (!diff[i].coeff(j, Q).is_zero(eps))
                            throw Error(ErrorKind::internal,
                                        "normal-form terms leaked off the ideal at " + Q.str());
                TraceEntry entry;
                entry.Q = Q;
                entry.j = j;
                entry.divisor = zero;
                if (inI) {
                    entry.fired = TraceEntry::Case::ideal;
                    for (int i = 0; i < l; ++i) {
                        Scalar v = rhs[i].coeff(j, Q);
                        if (!v.is_zero(eps)) res.G[i].set_coeff(j, Q, v);
                    }
                    res.trace.push_back(std::move(entry));
                    continue;
                }
                DeltaResult dr = delta(D, Q, j);
                bool vanish = mode == Mode::exact ? dr.max_mag.is_zero()
                                                  : dr.max_mag.value(prec) < *eps;
                if (!vanish) {
                    entry.fired = TraceEntry::Case::removable;
                    entry.i0 = dr.argmax_i;
                    entry.divisor = dr.deltas[dr.argmax_i];
                    entry.tied = dr.tied;
                    Scalar val = rhs[dr.argmax_i].coeff(j, Q) / entry.divisor;
                    if (!val.is_zero(eps)) res.Phi.set_coeff(j, Q, val);
                } else {
                    entry.fired = TraceEntry::Case::resonant_off_ideal;
                    ObstructionRecord rec;
                    rec.Q = Q;
                    rec.j = j;
                    bool nonzero = false;
                    for (int i = 0; i < l; ++i) {
                        rec.values.push_back(rhs[i].coeff(j, Q));
                        if (!rec.values.back().is_zero(eps)) nonzero = true;
                    }
                    if (nonzero) {
                        if (opts.mode == LinMode::strict) {
                            std::string v;
                            for (const auto& s : rec.values)
                                if (!s.is_zero(eps)) {
                                    v = scalar_str(s);
                                    break;
                                }
                            throw ObstructionFound("obstruction at Q = " + Q.str() + ", j = " +
                                                   std::to_string(j + 1) + ", value " + v);
                        }
                        for (int i = 0; i < l; ++i)
                            if (!rec.values[i].is_zero(eps))
                                res.G[i].set_coeff(j, Q, rec.values[i]);
                        g_off_ideal = true;
                        res.obstructions.push_back(std::move(rec));
                    }
                }
                res.trace.push_back(std::move(entry));
            }
        });
    }
    return res;
}

VerificationReport verify(const LinearizationResult& res, const std::vector<PolyMap>& F,
                          const MonomialIdeal& I, const ResonanceReport& resonance,
                          const std::vector<PolyMap>* rho_reps,
                          const std::vector<PolyMap>* rho_inner_reps, const BigFloat* eps) {
    VerificationReport rep;
    auto add = [&](VerifyCheck c) {
        rep.all_pass = rep.all_pass && c.pass;
        rep.checks.push_back(std::move(c));
    };
    int n = res.Phi.n();
    int l = static_cast<int>(res.G.size());
    uint32_t N = res.N;
    Mode mode = res.Phi.mode();
    mpfr_prec_t prec = res.Phi.prec();
    BigFloat eps_store;
    if (mode == Mode::floating && eps == nullptr) {
        eps_store = BigFloat::pow2(-static_cast<long>(prec / 2), prec);
        eps = &eps_store;
    }

    std::vector<PolyMap> Fw;
    for (const auto& Fi : F) Fw.push_back(truncate_map(Fi, N));

    {
        VerifyCheck c{"conjugacy", true, ""};
        Magnitude worst = Magnitude::one(mode, prec).scaled(0);
        for (int i = 0; i < l; ++i) {
            PolyMap r = compose(Fw[i], res.Phi) - compose(res.Phi, res.G[i]);
            if (!r.is_zero(eps)) c.pass = false;
            Magnitude m = r.max_coeff_mag();
            if (worst < m) worst = m;
        }
        c.residual = worst.str();
        add(std::move(c));
    }
    {
        VerifyCheck c{"ideal_support", true, "0"};
        for (int i = 0; i < l && c.pass; ++i) {
            PolyMap g = res.G[i] - PolyMap::from_linear(Fw[i].linear_part(), N);
            for (int j = 0; j < n && c.pass; ++j)
                for (const auto& [Q, v] : g.comp(j).terms())
                    if (!I.member(Q) && !v.is_zero(eps)) {
                        c.pass = false;
                        c.residual = "g_" + std::to_string(i + 1) + " has " + Q.str() +
                                     " off the ideal";
                        break;
                    }
        }
        add(std::move(c));
    }
    {
        VerifyCheck c{"normalization", true, ""};
        CoeffSet target = normalization_set(I, resonance.resonant_pairs, N);
        PolyMap proj = project(res.Phi, target);
        c.pass = proj.is_zero(eps);
        c.residual = proj.max_coeff_mag().str();
        add(std::move(c));
    }
    {
        // the quotient RHS_i / delta^i must not depend on the admissible i;
        // in particular argmax ties are harmless
        VerifyCheck c{"divisor_independence", true, "0"};
        std::vector<Mat> lin;
        std::vector<PolyMap> f, Dlin;
        for (int i = 0; i < l; ++i) {
            lin.push_back(Fw[i].linear_part());
            f.push_back(Fw[i].nonlinear_part());
            Dlin.push_back(PolyMap::from_linear(lin.back(), N));
        }
        DiagonalFamily D = DiagonalFamily::from_linear_parts(lin, eps);
        PolyMap phi = res.Phi.nonlinear_part();
        std::vector<PolyMap> rhs;
        for (int i = 0; i < l; ++i)
            rhs.push_back(compose(f[i], res.Phi) -
                          (compose(phi, res.G[i]) - compose(phi, Dlin[i])));
        for (const auto& e : res.trace) {
            if (e.fired != TraceEntry::Case::removable) continue;
            DeltaResult dr = delta(D, e.Q, e.j);
            Scalar chosen = res.Phi.coeff(e.j, e.Q);
            for (int i = 0; i < l; ++i) {
                bool zero = mode == Mode::exact ? Magnitude::of(dr.deltas[i]).is_zero()
                                                : dr.deltas[i].is_zero(eps);
                if (zero) continue;
                Scalar alt = rhs[i].coeff(e.j, e.Q) / dr.deltas[i];
                if (!alt.equals(chosen, eps)) {
                    c.pass = false;
                    c.residual = "Q = " + e.Q.str() + ", j = " + std::to_string(e.j + 1) +
                                 ", i = " + std::to_string(i + 1);
                    break;
                }
            }
            if (!c.pass) break;
        }
        add(std::move(c));
    }
    if (rho_reps != nullptr) {
        VerifyCheck c{"involution_symmetry", true, ""};
        Magnitude worst = Magnitude::one(mode, prec).scaled(0);
        for (std::size_t a = 0; a < rho_reps->size(); ++a) {
            PolyMap Hw = truncate_map((*rho_reps)[a], N);
            PolyMap Hin = rho_inner_reps == nullptr ? Hw
                                                    : truncate_map((*rho_inner_reps)[a], N);
            // rho o Phi o rho' with rho(z) = H(conj z), as a holomorphic map
            PolyMap r = compose(Hw, compose(res.Phi, Hin).conj_coeffs()) - res.Phi;
            if (!r.is_zero(eps)) c.pass = false;
            Magnitude m = r.max_coeff_mag();
            if (worst < m) worst = m;
        }
        c.residual = worst.str();
        add(std::move(c));
    }
    return rep;
}

} // namespace linideal
