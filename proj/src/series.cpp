#include "series.hpp"

#include "errors.hpp"
#include "runtime.hpp"

namespace linideal {

Series Series::monomial(int n, uint32_t N, const Multiindex& q, const Scalar& c) {
    Series s(n, N, c.mode(), c.prec());
    s.set_coeff(q, c);
    return s;
}

void Series::require_compatible(const Series& o) const {
    if (n_ != o.n_ || N_ != o.N_) throw DimensionMismatch("series n/N mismatch");
    if (mode_ != o.mode_) throw ModeMismatch();
}

Scalar Series::coeff(const Multiindex& q) const {
    if (q.n() != n_) throw DimensionMismatch("multiindex dimension mismatch");
    if (q.degree() > N_)
        throw Error(ErrorKind::bad_input, "coefficient query beyond truncation degree");
    auto it = terms_.find(q);
    if (it == terms_.end()) return Scalar::zero(mode_, prec_);
    return it->second;
}

void Series::set_coeff(const Multiindex& q, const Scalar& c) {
    if (q.n() != n_) throw DimensionMismatch("multiindex dimension mismatch");
    if (c.mode() != mode_) throw ModeMismatch();
    if (q.degree() > N_) return;
    if (c.is_zero())
        terms_.erase(q);
    else
        terms_[q] = c;
}

void Series::add_to_coeff(const Multiindex& q, const Scalar& c) {
    if (q.degree() > N_) return;
    auto it = terms_.find(q);
    if (it == terms_.end()) {
        set_coeff(q, c);
        return;
    }
    Scalar s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

Series Series::operator+(const Series& o) const {
    require_compatible(o);
    Series r = *this;
    for (const auto& [q, c] : o.terms_) r.add_to_coeff(q, c);
    return r;
}

Series Series::operator-(const Series& o) const {
    require_compatible(o);
    Series r = *this;
    for (const auto& [q, c] : o.terms_) r.add_to_coeff(q, -c);
    return r;
}

Series Series::operator*(const Series& o) const {
    require_compatible(o);
    Series r(n_, N_, mode_, prec_);
    for (const auto& [qa, ca] : terms_) {
        uint32_t da = qa.degree();
        for (const auto& [qb, cb] : o.terms_) {
            if (da + qb.degree() > N_) continue;
            r.add_to_coeff(qa + qb, ca * cb);
        }
    }
    return r;
}

Series Series::scaled(const Scalar& c) const {
    Series r(n_, N_, mode_, prec_);
    if (c.is_zero()) return r;
    for (const auto& [q, v] : terms_) r.set_coeff(q, v * c);
    return r;
}

Series Series::conj_coeffs() const {
    Series r(n_, N_, mode_, prec_);
    for (const auto& [q, v] : terms_) r.set_coeff(q, v.conj());
    return r;
}

Series Series::truncated_to(uint32_t d) const {
    Series r(n_, N_, mode_, prec_);
    for (const auto& [q, v] : terms_)
        if (q.degree() <= d) r.set_coeff(q, v);
    return r;
}

bool Series::is_zero(const BigFloat* eps) const {
    for (const auto& [q, v] : terms_)
        if (!v.is_zero(eps)) return false;
    return true;
}

Magnitude Series::max_coeff_mag() const {
    Magnitude best = Magnitude::of(Scalar::zero(mode_, prec_));
    for (const auto& [q, v] : terms_) {
        Magnitude m = Magnitude::of(v);
        if (best < m) best = m;
    }
    return best;
}

PolyMap PolyMap::identity(int n, uint32_t N, Mode mode, mpfr_prec_t prec) {
    PolyMap r(n, N, mode, prec);
    for (int j = 0; j < n; ++j)
        r.set_coeff(j, Multiindex::unit(n, j), Scalar::one(mode, prec));
    return r;
}

PolyMap PolyMap::from_linear(const Mat& m, uint32_t N) {
    PolyMap r(m.n, N, m.mode, m.prec);
    for (int j = 0; j < m.n; ++j)
        for (int a = 0; a < m.n; ++a)
            r.set_coeff(j, Multiindex::unit(m.n, a), m.at(j, a));
    return r;
}

Mat PolyMap::linear_part() const {
    Mat m(n(), mode(), prec());
    for (int j = 0; j < n(); ++j)
        for (int a = 0; a < n(); ++a) m.at(j, a) = coeff(j, Multiindex::unit(n(), a));
    return m;
}

PolyMap PolyMap::nonlinear_part() const {
    PolyMap r(n(), trunc(), mode(), prec());
    for (int j = 0; j < n(); ++j)
        for (const auto& [q, c] : comp_[j].terms())
            if (q.degree() >= 2) r.set_coeff(j, q, c);
    return r;
}

PolyMap PolyMap::operator+(const PolyMap& o) const {
    PolyMap r = *this;
    for (int j = 0; j < n(); ++j) r.comp_[j] = comp_[j] + o.comp_[j];
    return r;
}

PolyMap PolyMap::operator-(const PolyMap& o) const {
    PolyMap r = *this;
    for (int j = 0; j < n(); ++j) r.comp_[j] = comp_[j] - o.comp_[j];
    return r;
}

PolyMap PolyMap::conj_coeffs() const {
    PolyMap r = *this;
    for (int j = 0; j < n(); ++j) r.comp_[j] = comp_[j].conj_coeffs();
    return r;
}

bool PolyMap::is_zero(const BigFloat* eps) const {
    for (const auto& s : comp_)
        if (!s.is_zero(eps)) return false;
    return true;
}

Magnitude PolyMap::max_coeff_mag() const {
    Magnitude best = Magnitude::of(Scalar::zero(mode(), prec()));
    for (const auto& s : comp_) {
        Magnitude m = s.max_coeff_mag();
        if (best < m) best = m;
    }
    return best;
}

namespace {

// Powers of each component of G, grown on demand.
struct PowerCache {
    const PolyMap& G;
    std::vector<std::vector<Series>> pow;

    explicit PowerCache(const PolyMap& g) : G(g), pow(g.n()) {
        for (int a = 0; a < g.n(); ++a)
            pow[a].push_back(Series::monomial(g.n(), g.trunc(), Multiindex::zero(g.n()),
                                              Scalar::one(g.mode(), g.prec())));
    }
    const Series& get(int a, uint32_t k) {
        while (pow[a].size() <= k) pow[a].push_back(pow[a].back() * G.comp(a));
        return pow[a][k];
    }
};

} // namespace

Series compose(const Series& f, const PolyMap& G) {
    if (f.n() != G.n() || f.trunc() != G.trunc()) throw DimensionMismatch("compose n/N mismatch");
    if (f.mode() != G.mode()) throw ModeMismatch();
    for (int a = 0; a < G.n(); ++a)
        if (!G.coeff(a, Multiindex::zero(G.n())).is_zero()) throw NonzeroConstantTerm();
    PowerCache cache(G);
    Series r(f.n(), f.trunc(), f.mode(), f.prec());
    for (const auto& [q, c] : f.terms()) {
        Series term = Series::monomial(f.n(), f.trunc(), Multiindex::zero(f.n()), c);
        for (int a = 0; a < f.n(); ++a)
            if (q.e[a] > 0) term = term * cache.get(a, q.e[a]);
        r = r + term;
    }
    return r;
}

PolyMap compose(const PolyMap& F, const PolyMap& G) {
    if (F.n() != G.n() || F.trunc() != G.trunc()) throw DimensionMismatch("compose n/N mismatch");
    if (F.mode() != G.mode()) throw ModeMismatch();
    for (int a = 0; a < G.n(); ++a)
        if (!G.coeff(a, Multiindex::zero(G.n())).is_zero()) throw NonzeroConstantTerm();
    PolyMap r(F.n(), F.trunc(), F.mode(), F.prec());
    // components are independent; the shared cache would race, so each
    // worker owns one
    parallel_for(static_cast<std::size_t>(F.n()),
                 [&](std::size_t j) { r.comp(static_cast<int>(j)) = compose(F.comp(static_cast<int>(j)), G); });
    return r;
}

PolyMap apply_linear(const Mat& m, const PolyMap& F) {
    if (m.n != F.n()) throw DimensionMismatch("apply_linear size mismatch");
    PolyMap r(F.n(), F.trunc(), F.mode(), F.prec());
    for (int j = 0; j < F.n(); ++j) {
        Series s(F.n(), F.trunc(), F.mode(), F.prec());
        for (int k = 0; k < F.n(); ++k) s = s + F.comp(k).scaled(m.at(j, k));
        r.comp(j) = s;
    }
    return r;
}

PolyMap invert(const PolyMap& F) {
    Mat L = F.linear_part();
    Mat M = L.inverse();
    PolyMap f = F.nonlinear_part();
    PolyMap id = PolyMap::identity(F.n(), F.trunc(), F.mode(), F.prec());
    PolyMap H = PolyMap::from_linear(M, F.trunc());
    // Each pass fixes one more degree of H = M (Id - f o H).
    for (uint32_t d = 2; d <= F.trunc(); ++d) H = apply_linear(M, id - compose(f, H));
    return H;
}

PolyMap project(const PolyMap& F, const CoeffSet& target) {
    PolyMap nl = F.nonlinear_part();
    PolyMap r(F.n(), F.trunc(), F.mode(), F.prec());
    for (int j = 0; j < F.n(); ++j)
        for (const auto& [q, c] : nl.comp(j).terms())
            if (target.contains(q, j)) r.set_coeff(j, q, c);
    return r;
}

} // namespace linideal
