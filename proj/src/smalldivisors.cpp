#include "smalldivisors.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "errors.hpp"

namespace linideal {

namespace {

bool mag_is_zero(const Magnitude& m, const BigFloat* eps) {
    if (m.mode() == Mode::exact || eps == nullptr) return m.is_zero();
    return m.value(eps->prec()) < *eps;
}

mpq_class mpq_pow_si(const mpq_class& q, long e) {
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), q.get_num().get_mpz_t(), a);
    mpz_pow_ui(pd.get_mpz_t(), q.get_den().get_mpz_t(), a);
    mpq_class r = e < 0 ? mpq_class(pd, pn) : mpq_class(pn, pd);
    r.canonicalize();
    return r;
}

// Divisor values past the enumerated range are bounded below by showing that
// some |mu_i^Q| grows (or shrinks) geometrically in |Q|. Outside the ideal
// the large exponents of Q concentrate on an admissible variable set T (one
// containing no generator support); an integer combination y of the family
// with prod_i |mu_{i,a}|^{2 y_i} > 1 for all a in T forces max_i |ln|mu_i^Q||
// to grow linearly in |Q|, so beyond an explicit degree every
// max_i |mu_i^Q - mu_{i,j}| stays above the enumerated infimum.
struct TailCertificate {
    bool ok = false;
    uint32_t degree_bound = 0;
    std::string reason;
};

TailCertificate certify_tail(const DiagonalFamily& D, const MonomialIdeal& I,
                             const Magnitude& inf_seen) {
    TailCertificate cert;
    if (D.mode() != Mode::exact) {
        cert.reason = "tail certification needs exact eigenvalues";
        return cert;
    }
    int n = D.n(), l = D.l();
    if (n > 16 || l > 6) {
        cert.reason = "family too large for the tail search";
        return cert;
    }

    std::vector<std::vector<mpq_class>> beta(l, std::vector<mpq_class>(n));
    for (int i = 0; i < l; ++i)
        for (int a = 0; a < n; ++a) beta[i][a] = D.mu(i, a).abs_sq_exact();

    // Per-variable exponent thresholds: q_a >= cap[a] puts a into T(Q).
    std::vector<uint32_t> cap(n, 0);
    for (const auto& g : I.generators())
        for (int a = 0; a < n; ++a) cap[a] = std::max(cap[a], g.e[a]);
    uint32_t cap_total = 0;
    for (int a = 0; a < n; ++a) cap_total += cap[a];

    const mpfr_prec_t P = 256;
    BigFloat up = BigFloat::from_si(1, P) + BigFloat::pow2(-64, P);
    BigFloat dn = BigFloat::from_si(1, P) - BigFloat::pow2(-64, P);
    BigFloat w = inf_seen.value(P) * up;

    BigFloat mu_min(P), mu_max(P);
    bool first = true;
    for (int i = 0; i < l; ++i)
        for (int a = 0; a < n; ++a) {
            BigFloat v = Magnitude::of(D.mu(i, a)).value(P);
            if (first || v < mu_min) mu_min = v;
            if (first || mu_max < v) mu_max = v;
            first = false;
        }
    mu_min *= dn;
    mu_max *= up;
    if (!(w < mu_min)) {
        cert.reason = "enumerated infimum is not below the eigenvalue magnitudes";
        return cert;
    }

    uint32_t bound = cap_total;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool admissible = true;
        for (const auto& g : I.generators()) {
            bool contained = true;
            for (int a = 0; a < n; ++a)
                if (g.e[a] > 0 && !(mask & (1u << a))) contained = false;
            if (contained) {
                admissible = false;
                break;
            }
        }
        if (!admissible) continue;

        // growth direction: all products > 1 on T, exactly
        std::vector<long> y(l, 0), found;
        for (long radius = 1; radius <= 3 && found.empty(); ++radius) {
            std::function<void(int)> walk = [&](int i) {
                if (!found.empty()) return;
                if (i == l) {
                    long amax = 0;
                    for (long v : y) amax = std::max(amax, std::labs(v));
                    if (amax != radius) return;
                    for (int a = 0; a < n; ++a) {
                        if (!(mask & (1u << a))) continue;
                        mpq_class r = 1;
                        for (int ii = 0; ii < l; ++ii)
                            if (y[ii] != 0) r *= mpq_pow_si(beta[ii][a], y[ii]);
                        if (!(r > 1)) return;
                    }
                    found = y;
                    return;
                }
                for (long v = -radius; v <= radius; ++v) {
                    y[i] = v;
                    walk(i + 1);
                }
            };
            walk(0);
        }
        if (found.empty()) {
            std::ostringstream os;
            os << "no growth direction for variable set {";
            for (int a = 0; a < n; ++a)
                if (mask & (1u << a)) os << " " << (a + 1);
            os << " }";
            cert.reason = os.str();
            return cert;
        }

        BigFloat smin(P), cross(P);
        bool smin_set = false;
        long ysum = 0;
        for (long v : found) ysum += std::labs(v);
        for (int a = 0; a < n; ++a) {
            BigFloat s(P);
            for (int i = 0; i < l; ++i)
                if (found[i] != 0)
                    s += BigFloat::from_si(found[i], P) *
                         BigFloat::from_mpq(beta[i][a], P).log();
            if (mask & (1u << a)) {
                BigFloat sd = s * dn;
                if (!smin_set || sd < smin) smin = sd;
                smin_set = true;
            } else {
                BigFloat su = s.abs() * up;
                if (cross < su) cross = su;
            }
        }

        BigFloat btot = BigFloat::from_si(cap_total, P);
        BigFloat two_ysum = BigFloat::from_si(2 * ysum, P);
        uint32_t d = cap_total + 1;
        for (;; ++d) {
            if (d > 1000000) {
                cert.reason = "growth too slow to certify";
                return cert;
            }
            // lower bound on max_i |ln |mu_i^Q|| at |Q| = d
            BigFloat g = (smin * (BigFloat::from_si(d, P) - btot) - btot * cross) / two_ysum;
            if (g.sgn() <= 0) continue;
            BigFloat E = g.exp() * dn;
            if (w <= E - mu_max && w <= mu_min - BigFloat::from_si(1, P) / E) break;
        }
        bound = std::max(bound, d);
    }
    cert.ok = true;
    cert.degree_bound = std::max<uint32_t>(bound, 2);
    return cert;
}

} // namespace

OmegaSequence omega(const DiagonalFamily& D, const MonomialIdeal& I, int K,
                    const OmegaOptions& opts) {
    if (K < 1) throw Error(ErrorKind::bad_input, "divisor depth K must be >= 1");
    if (I.n() != D.n()) throw DimensionMismatch("ideal dimension mismatch");
    int n = D.n();

    uint64_t full = K < 62 ? (uint64_t{1} << K) : (uint64_t{1} << 62);
    uint32_t d0 = full <= opts.enum_cap ? static_cast<uint32_t>(full) : opts.enum_cap;

    std::optional<Magnitude> best;
    std::vector<std::optional<Magnitude>> at_pow(K);
    auto run_shells = [&](uint32_t lo, uint32_t hi) {
        for (uint32_t d = lo; d <= hi; ++d) {
            for_each_in_shell(n, d, [&](const Multiindex& Q) {
                if (I.member(Q)) return;
                for (int j = 0; j < n; ++j) {
                    DeltaResult r = delta(D, Q, j);
                    if (mag_is_zero(r.max_mag, opts.eps)) continue;
                    if (!best || r.max_mag < *best) best = r.max_mag;
                }
            });
            for (int k = 1; k <= K && k < 62; ++k)
                if ((uint64_t{1} << k) == d) at_pow[k - 1] = best;
        }
    };

    run_shells(2, d0);
    uint32_t enum_deg = d0;
    bool certified = false;
    if (full > d0) {
        if (!best) throw AllDivisorsVanish();
        TailCertificate cert = certify_tail(D, I, *best);
        if (!cert.ok)
            throw BudgetExceeded("cannot certify the divisor infimum beyond degree " +
                                 std::to_string(enum_deg) + ": " + cert.reason);
        if (cert.degree_bound > enum_deg) {
            run_shells(enum_deg + 1, cert.degree_bound);
            enum_deg = cert.degree_bound;
        }
        certified = true;
    }

    OmegaSequence seq;
    seq.K = K;
    seq.enumerated_degree = enum_deg;
    seq.tail_certified = certified;
    for (int k = 1; k <= K; ++k) {
        uint64_t top = k < 62 ? (uint64_t{1} << k) : (uint64_t{1} << 62);
        const std::optional<Magnitude>& v = top <= enum_deg ? at_pow[k - 1] : best;
        if (!v) throw AllDivisorsVanish();
        seq.entries.push_back(*v);
    }
    return seq;
}

BigFloat brjuno_partial(const OmegaSequence& seq, mpfr_prec_t prec) {
    BigFloat s(prec);
    for (int k = 1; k <= seq.K; ++k)
        s += seq.entries[k - 1].ln(prec) * BigFloat::pow2(-k, prec);
    return -s;
}

BigFloat brjuno_partial(const DiagonalFamily& D, const MonomialIdeal& I, int K,
                        mpfr_prec_t prec, const OmegaOptions& opts) {
    return brjuno_partial(omega(D, I, K, opts), prec);
}

ThetaResult theta(const DiagonalFamily& D, const MonomialIdeal& I) {
    if (I.n() != D.n()) throw DimensionMismatch("ideal dimension mismatch");
    ThetaResult out;
    auto S = I.properly_embedded();
    if (S.has_value())
        out.S_used = *S;
    else
        for (int j = 0; j < D.n(); ++j) out.S_used.push_back(j);

    bool first = true;
    for (int j : out.S_used) {
        Magnitude col = Magnitude::of(D.mu(0, j));
        for (int i = 1; i < D.l(); ++i) {
            Magnitude m = Magnitude::of(D.mu(i, j));
            if (col < m) col = m;
        }
        if (first || col < out.four_theta) out.four_theta = col;
        first = false;
    }
    out.theta = out.four_theta.scaled(mpq_class(1, 4));
    out.satisfied = out.four_theta <= Magnitude::one(out.four_theta.mode(), D.prec());
    if (!out.satisfied) {
        std::ostringstream os;
        os << "4*theta > 1; |mu_{i,j}| > 1 at (i,j):";
        for (int j : out.S_used)
            for (int i = 0; i < D.l(); ++i)
                if (Magnitude::one(out.four_theta.mode(), D.prec()) < Magnitude::of(D.mu(i, j)))
                    os << " (" << i + 1 << "," << j + 1 << ")";
        out.warning = os.str();
    }
    return out;
}

namespace {

// Shared state of the decomposition dynamic programs. Decompositions of Q
// are Q = Q_1 + ... + Q_p + S with |Q_m| >= 1 and |Q_m| < |Q|; every part of
// a multiindex outside the ideal is itself outside the ideal.
struct DecompDP {
    const std::map<Multiindex, Magnitude>* delta = nullptr;
    std::map<Multiindex, Magnitude> eta;
    std::map<Multiindex, Magnitude> cprod;  // best part product for a remainder

    Magnitude one;

    const Magnitude& eta_of(const Multiindex& Q) {
        auto it = eta.find(Q);
        if (it != eta.end()) return it->second;
        Magnitude d = delta->at(Q);
        Magnitude v = d.is_zero() ? one.scaled(0) : best_product(Q, true) / d;
        return eta.emplace(Q, v).first->second;
    }

    // max over decompositions of R into parts (p >= 1 when forced) of the
    // product of the parts' eta values; the empty decomposition scores 1.
    Magnitude best_product(const Multiindex& R, bool force_part) {
        if (!force_part) {
            auto it = cprod.find(R);
            if (it != cprod.end()) return it->second;
        }
        Magnitude bst = one;
        bool have = !force_part;
        uint32_t top = R.degree();
        for_each_below(R, [&](const Multiindex& t) {
            uint32_t dt = t.degree();
            if (dt < 1 || (force_part && dt >= top)) return;
            Magnitude e = dt == 1 ? one : eta_of(t);
            Magnitude v = e * best_product(R - t, false);
            if (!have || bst < v) {
                bst = v;
                have = true;
            }
        });
        if (force_part && !have) bst = one.scaled(0);  // no admissible split
        if (!force_part) cprod.emplace(R, bst);
        return bst;
    }
};

struct CountDP {
    // per fixed (k, j)
    std::function<int(const Multiindex&)> psi;
    std::map<Multiindex, long> phi;
    std::map<Multiindex, long> csum;

    long phi_of(const Multiindex& Q) {
        if (Q.degree() <= 1) return 0;
        auto it = phi.find(Q);
        if (it != phi.end()) return it->second;
        long best = 0;
        bool have = false;
        uint32_t top = Q.degree();
        for_each_below(Q, [&](const Multiindex& t) {
            uint32_t dt = t.degree();
            if (dt < 1 || dt >= top) return;
            long v = phi_of(t) + best_sum(Q - t);
            if (!have || v > best) {
                best = v;
                have = true;
            }
        });
        long r = psi(Q) + (have ? best : 0);
        phi.emplace(Q, r);
        return r;
    }

    long best_sum(const Multiindex& R) {
        auto it = csum.find(R);
        if (it != csum.end()) return it->second;
        long best = 0;  // the empty decomposition
        for_each_below(R, [&](const Multiindex& t) {
            if (t.degree() < 1) return;
            long v = phi_of(t) + best_sum(R - t);
            best = std::max(best, v);
        });
        csum.emplace(R, best);
        return best;
    }
};

} // namespace

MajorantDiagnostics majorant_diagnostics(const std::vector<PolyMap>& F,
                                         const DiagonalFamily& D, const MonomialIdeal& I,
                                         uint32_t N, int K, const MajorantOptions& opts) {
    int n = D.n(), l = D.l();
    if (F.size() != static_cast<std::size_t>(l))
        throw DimensionMismatch("family size does not match the diagonal family");
    for (const auto& Fi : F) {
        if (Fi.n() != n) throw DimensionMismatch("map dimension mismatch");
        if (Fi.trunc() < N) throw Error(ErrorKind::bad_input, "truncation below requested degree");
        if (Fi.mode() != D.mode()) throw ModeMismatch("family mode mismatch");
    }
    if (N > opts.degree_cap || n > opts.dim_cap)
        throw BudgetExceeded("diagnostics budget exceeded (degree cap " +
                             std::to_string(opts.degree_cap) + ", dimension cap " +
                             std::to_string(opts.dim_cap) + ")");
    if (sgn(opts.b) <= 0) throw Error(ErrorKind::bad_input, "majorant constant b must be positive");

    const mpfr_prec_t prec = opts.sum_prec;
    MajorantDiagnostics diag;
    diag.n = n;
    diag.l = l;
    diag.N = N;
    diag.b = opts.b;
    diag.theta = theta(D, I);
    diag.omegas = omega(D, I, K, opts.omega_opts);

    // a: the aggregated series sum_{i,j} |f_{i,j,Q}| x^Q must be dominated
    // coefficientwise by a (sum x_j)^2 / (1 - b sum x_j).
    std::map<Multiindex, BigFloat> fsum;
    for (const auto& Fi : F) {
        PolyMap f = Fi.nonlinear_part();
        for (int j = 0; j < n; ++j)
            for (const auto& [Q, c] : f.comp(j).terms()) {
                auto it = fsum.emplace(Q, BigFloat(prec)).first;
                it->second += Magnitude::of(c).value(prec);
            }
    }
    BigFloat a(prec);
    BigFloat margin = BigFloat::from_si(1, prec) + BigFloat::pow2(-60, prec);
    for (const auto& [Q, s] : fsum) {
        mpq_class denom = mpq_pow_si(opts.b, static_cast<long>(Q.degree()) - 2) *
                          mpq_class(multinomial(Q));
        BigFloat cand = s * margin / BigFloat::from_mpq(denom, prec);
        if (a < cand) a = cand;
    }
    diag.a = a;

    Mode mode = D.mode();
    Magnitude one = Magnitude::one(mode, D.prec());

    // delta_Q = min over j with max_i |delta^i_{Q,j}| != 0; zero when every
    // column vanishes (the min would otherwise range over an empty set).
    std::map<std::pair<Multiindex, int>, Magnitude> dqj;
    for_each_in_degrees(n, 2, N, [&](const Multiindex& Q) {
        if (I.member(Q)) return;
        Magnitude dq;
        bool have = false;
        for (int j = 0; j < n; ++j) {
            Magnitude m = delta(D, Q, j).max_mag;
            dqj.emplace(std::make_pair(Q, j), m);
            if (mag_is_zero(m, opts.eps)) continue;
            if (!have || m < dq) dq = m;
            have = true;
        }
        diag.delta.emplace(Q, have ? dq : Magnitude::one(mode, D.prec()).scaled(0));
    });

    DecompDP dp;
    dp.delta = &diag.delta;
    dp.one = one;
    for_each_in_degrees(n, 1, 1, [&](const Multiindex& P) {
        if (!I.member(P)) diag.eta.emplace(P, one);
    });
    for_each_in_degrees(n, 2, N, [&](const Multiindex& Q) {
        if (I.member(Q)) return;
        diag.eta.emplace(Q, dp.eta_of(Q));
    });

    // sigma by its implicit recursion, one degree at a time; the degree-d
    // coefficients of the right hand side only involve lower-degree sigma's.
    Scalar af = Scalar::floating(a, BigFloat(prec));
    Scalar bf = Scalar::floating(BigFloat::from_mpq(opts.b, prec), BigFloat(prec));
    Series sum_y(n, N, Mode::floating, prec);
    for (int j = 0; j < n; ++j)
        sum_y.set_coeff(Multiindex::unit(n, j), Scalar::one(Mode::floating, prec));
    Series sigma(n, N, Mode::floating, prec);
    for (uint32_t d = 2; d <= N; ++d) {
        Series u = sum_y + sigma;
        Series geom = Series::monomial(n, N, Multiindex::zero(n), Scalar::one(Mode::floating, prec));
        Series bu = u.scaled(bf);
        Series pw = Series::monomial(n, N, Multiindex::zero(n), Scalar::one(Mode::floating, prec));
        for (uint32_t m = 1; m <= N; ++m) {
            pw = pw * bu;
            geom = geom + pw;
        }
        Series rhs = (u * u * geom).scaled(af);
        for_each_in_shell(n, d, [&](const Multiindex& Q) {
            if (I.member(Q)) return;
            sigma.set_coeff(Q, rhs.coeff(Q));
        });
    }
    for (const auto& [Q, c] : sigma.terms()) diag.sigma.emplace(Q, c.fl().re);
    for (const auto& [Q, m] : diag.delta)
        if (diag.sigma.find(Q) == diag.sigma.end()) diag.sigma.emplace(Q, BigFloat(prec));

    // psi and the small-divisor counts, for depths up to the first k with
    // 2^k >= N (the counts vanish identically beyond it).
    int k_max = 1;
    while (k_max < K && (uint64_t{1} << k_max) < N) ++k_max;
    diag.k_max = k_max;
    for (int k = 1; k <= k_max; ++k) {
        Magnitude thr = diag.theta.theta * diag.omegas.entries[k - 1];
        for (int j = 0; j < n; ++j) {
            CountDP cdp;
            cdp.psi = [&](const Multiindex& Q) {
                const Magnitude& dq = diag.delta.at(Q);
                const Magnitude& dj = dqj.at({Q, j});
                int v = (!mag_is_zero(dq, opts.eps) && dq == dj && dj < thr) ? 1 : 0;
                return v;
            };
            for (const auto& [Q, m] : diag.delta) {
                int p = cdp.psi(Q);
                diag.psi.emplace(std::make_tuple(k, j, Q), p);
                diag.phi_j.emplace(std::make_tuple(k, j, Q), cdp.phi_of(Q));
            }
        }
        for (const auto& [Q, m] : diag.delta) {
            long total = 0;
            for (int j = 0; j < n; ++j) total += diag.phi_j.at(std::make_tuple(k, j, Q));
            diag.phi.emplace(std::make_pair(k, Q), total);
        }
    }

    // c = exp(-2n sum_{k=0}^{K-1} ln omega_{k+1}/2^k + 4n ln theta^{-1})
    BigFloat s(prec);
    for (int k = 0; k < K; ++k)
        s += diag.omegas.entries[k].ln(prec) * BigFloat::pow2(-k, prec);
    BigFloat nn = BigFloat::from_si(n, prec);
    diag.c_bound = (-(nn + nn) * s - (nn + nn + nn + nn) * diag.theta.theta.ln(prec)).exp();

    diag.c_estimate = BigFloat(prec);
    for (const auto& [Q, e] : diag.eta) {
        if (Q.degree() < 2 || e.is_zero()) continue;
        BigFloat est = (e.ln(prec) / BigFloat::from_si(Q.degree(), prec)).exp();
        if (diag.c_estimate < est) diag.c_estimate = est;
    }

    BigFloat eps64 = BigFloat::pow2(-64, prec);
    BoundCheck geo{"eta_geometric", true, ""};
    // the geometric bound is a consequence of the theta condition; outside it
    // the c formula leaves its domain of validity
    if (!diag.theta.satisfied) geo.witness = "skipped: 4*theta > 1";
    for (const auto& [Q, e] : diag.eta) {
        if (!diag.theta.satisfied) break;
        if (Q.degree() < 2) continue;
        BigFloat lhs = e.value(prec);
        BigFloat rhs = diag.c_bound.pow_ui(Q.degree());
        BigFloat tol = (BigFloat::from_si(1, prec) < rhs ? rhs : BigFloat::from_si(1, prec)) * eps64;
        if (!(lhs <= rhs + tol)) {
            geo.pass = false;
            geo.witness = "Q = " + Q.str();
            break;
        }
    }
    diag.checks.push_back(geo);

    BoundCheck cnt{"divisor_count", true, ""};
    for (const auto& [key, v] : diag.phi) {
        auto [k, Q] = key;
        long d = Q.degree();
        bool ok = d <= (long{1} << k) ? v == 0 : v * (long{1} << k) <= 2 * n * d;
        if (!ok) {
            cnt.pass = false;
            cnt.witness = "k = " + std::to_string(k) + ", Q = " + Q.str();
            break;
        }
    }
    diag.checks.push_back(cnt);

    BoundCheck split{"split_vanishing", true, ""};
    if (!diag.theta.satisfied) {
        split.witness = "skipped: 4*theta > 1";
    } else {
        for (const auto& [key, v] : diag.psi) {
            if (v != 1) continue;
            auto [k, j, Q] = key;
            bool bad = false;
            for_each_below(Q, [&](const Multiindex& P) {
                if (bad) return;
                uint32_t dp_ = P.degree();
                Multiindex Pp = Q - P;
                if (dp_ < 1 || Pp.degree() < 2) return;
                if (dp_ > (uint32_t{1} << k) - 1) return;
                if (I.member(P) || I.member(Pp) ||
                    diag.psi.at(std::make_tuple(k, j, Pp)) != 0)
                    bad = true;
            });
            if (bad) {
                split.pass = false;
                split.witness = "k = " + std::to_string(k) + ", j = " + std::to_string(j + 1) +
                                ", Q = " + Q.str();
                break;
            }
        }
    }
    diag.checks.push_back(split);

    return diag;
}

std::map<Multiindex, BigFloat> phi_tilde_table(const PolyMap& Phi, const MonomialIdeal& I,
                                               mpfr_prec_t prec) {
    std::map<Multiindex, BigFloat> out;
    PolyMap nl = Phi.nonlinear_part();
    for (int j = 0; j < Phi.n(); ++j)
        for (const auto& [Q, c] : nl.comp(j).terms()) {
            if (I.member(Q)) continue;
            auto it = out.emplace(Q, BigFloat(prec)).first;
            it->second += Magnitude::of(c).value(prec);
        }
    return out;
}

BoundCheck check_phi_tilde(const MajorantDiagnostics& diag,
                           const std::map<Multiindex, BigFloat>& phi_tilde) {
    BoundCheck chk{"phi_majorant", true, ""};
    for (const auto& [Q, lhs] : phi_tilde) {
        if (Q.degree() < 2 || Q.degree() > diag.N) continue;
        mpfr_prec_t prec = lhs.prec();
        auto si = diag.sigma.find(Q);
        auto ei = diag.eta.find(Q);
        if (si == diag.sigma.end() || ei == diag.eta.end()) {
            chk.pass = false;
            chk.witness = "no table entry at Q = " + Q.str();
            break;
        }
        BigFloat rhs = si->second * ei->second.value(prec);
        BigFloat tol = (BigFloat::from_si(1, prec) < rhs ? rhs : BigFloat::from_si(1, prec)) *
                       BigFloat::pow2(-64, prec);
        if (!(lhs <= rhs + tol)) {
            chk.pass = false;
            chk.witness = "Q = " + Q.str();
            break;
        }
    }
    return chk;
}

} // namespace linideal
