#include "resonance.hpp"

#include "errors.hpp"

namespace linideal {

DiagonalFamily::DiagonalFamily(std::vector<std::vector<Scalar>> mu) : mu_(std::move(mu)) {
    if (mu_.empty() || mu_[0].empty()) throw DimensionMismatch("empty eigenvalue family");
    for (const auto& row : mu_) {
        if (row.size() != mu_[0].size()) throw DimensionMismatch("ragged eigenvalue family");
        for (const auto& s : row) {
            if (s.mode() != mu_[0][0].mode()) throw ModeMismatch();
            if (s.is_zero())
                throw Error(ErrorKind::bad_input, "eigenvalue mu_{i,j} = 0 (D_i not invertible)");
        }
    }
}

DiagonalFamily DiagonalFamily::from_linear_parts(const std::vector<Mat>& parts,
                                                 const BigFloat* eps) {
    std::vector<std::vector<Scalar>> mu;
    for (const auto& m : parts) {
        if (!m.is_diagonal(eps)) throw NonDiagonalLinearPart();
        mu.push_back(m.diagonal_entries());
    }
    return DiagonalFamily(std::move(mu));
}

Scalar DiagonalFamily::mu_pow(int i, const Multiindex& q) const {
    if (q.n() != n()) throw DimensionMismatch("multiindex dimension mismatch");
    Scalar r = Scalar::one(mode(), prec());
    for (int a = 0; a < n(); ++a) {
        Scalar p = mu_[i][a];
        uint32_t e = q.e[a];
        while (e > 0) {  // square-and-multiply
            if (e & 1u) r = r * p;
            e >>= 1u;
            if (e) p = p * p;
        }
    }
    return r;
}

DeltaResult delta(const DiagonalFamily& D, const Multiindex& Q, int j) {
    if (j < 0 || j >= D.n()) throw DimensionMismatch("component index out of range");
    DeltaResult out;
    out.max_mag = Magnitude::of(Scalar::zero(D.mode(), D.prec()));
    for (int i = 0; i < D.l(); ++i) {
        Scalar d = D.mu_pow(i, Q) - D.mu(i, j);
        Magnitude m = Magnitude::of(d);
        if (i == 0 || out.max_mag < m) {
            out.max_mag = m;
            out.argmax_i = i;
        }
        out.deltas.push_back(std::move(d));
    }
    for (int i = 0; i < D.l(); ++i)
        if (Magnitude::of(out.deltas[i]) == out.max_mag) out.tied.push_back(i);
    return out;
}

bool is_resonant(const DiagonalFamily& D, const Multiindex& Q, int j, const BigFloat* eps) {
    for (int i = 0; i < D.l(); ++i)
        if (!(D.mu_pow(i, Q) - D.mu(i, j)).is_zero(eps)) return false;
    return true;
}

namespace {
bool is_invariant_solution(const DiagonalFamily& D, const Multiindex& q, const BigFloat* eps) {
    Scalar one = Scalar::one(D.mode(), D.prec());
    for (int i = 0; i < D.l(); ++i)
        if (!(D.mu_pow(i, q) - one).is_zero(eps)) return false;
    return true;
}
} // namespace

std::vector<Multiindex> invariant_generators(const DiagonalFamily& D, uint32_t N,
                                             bool* cutoff_limited, const BigFloat* eps) {
    if (N < 1) throw Error(ErrorKind::bad_input, "invariant_generators needs N >= 1");
    std::vector<Multiindex> solutions;
    for_each_in_degrees(D.n(), 1, N, [&](const Multiindex& q) {
        if (is_invariant_solution(D, q, eps)) solutions.push_back(q);
    });
    // a solution is a generator of the solution monoid iff no smaller
    // solution divides it (the quotient of two solutions is a solution)
    std::vector<Multiindex> gens;
    bool limited = false;
    for (const auto& s : solutions) {
        bool minimal = true;
        for (const auto& t : solutions)
            if (!(t == s) && t.divides(s)) {
                minimal = false;
                break;
            }
        if (minimal) {
            gens.push_back(s);
            if (s.degree() == N) limited = true;
        }
    }
    if (cutoff_limited) *cutoff_limited = limited;
    return gens;
}

ResonanceReport centralizer_report(const DiagonalFamily& D, uint32_t N, const BigFloat* eps) {
    if (N < 2) throw Error(ErrorKind::bad_input, "centralizer_report needs N >= 2");
    ResonanceReport rep;
    rep.N = N;
    rep.invariant_gens = invariant_generators(D, N, &rep.cutoff_limited, eps);
    rep.res_ideal = MonomialIdeal::make(D.n(), rep.invariant_gens);
    for_each_in_degrees(D.n(), 2, N, [&](const Multiindex& q) {
        for (int j = 0; j < D.n(); ++j) {
            bool exact_res = is_resonant(D, q, j, nullptr);
            if (!exact_res && eps != nullptr && D.mode() == Mode::floating &&
                is_resonant(D, q, j, eps)) {
                rep.float_warnings.push_back("pair (" + q.str() + "," + std::to_string(j + 1) +
                                             ") resonant within tolerance");
                exact_res = true;
            }
            if (exact_res) rep.resonant_pairs.push_back({q, j});
        }
    });
    rep.centralizer_generated = true;
    for (const auto& [q, j] : rep.resonant_pairs)
        if (!rep.res_ideal.member(q)) {
            rep.centralizer_generated = false;
            break;
        }
    return rep;
}

CoeffSet normalization_set(const MonomialIdeal& ideal,
                           const std::vector<std::pair<Multiindex, int>>& resonant_pairs,
                           uint32_t N) {
    CoeffSet set;
    for_each_in_degrees(ideal.n(), 2, N, [&](const Multiindex& q) {
        if (ideal.member(q))
            for (int j = 0; j < ideal.n(); ++j) set.insert(q, j);
    });
    for (const auto& [q, j] : resonant_pairs)
        if (q.degree() <= N) set.insert(q, j);
    return set;
}

} // namespace linideal
