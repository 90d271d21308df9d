#include "ideal.hpp"

#include <algorithm>

#include "errors.hpp"
#include "series.hpp"

namespace linideal {

MonomialIdeal MonomialIdeal::make(int n, std::vector<Multiindex> gens) {
    for (const auto& g : gens)
        if (g.n() != n) throw DimensionMismatch("generator dimension mismatch");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal ideal(n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (k != i && gens[k].divides(gens[i])) {
                redundant = true;
                break;
            }
        if (!redundant) ideal.gens_.push_back(gens[i]);
    }
    return ideal;
}

bool MonomialIdeal::member(const Multiindex& q) const {
    if (q.n() != n_) throw DimensionMismatch("multiindex dimension mismatch");
    for (const auto& g : gens_)
        if (g.divides(q)) return true;
    return false;
}

std::vector<int> MonomialIdeal::absent_variables() const {
    std::vector<int> absent;
    for (int a = 0; a < n_; ++a) {
        bool involved = false;
        for (const auto& g : gens_)
            if (g.e[a] > 0) {
                involved = true;
                break;
            }
        if (!involved) absent.push_back(a);
    }
    return absent;
}

std::optional<std::vector<int>> MonomialIdeal::properly_embedded() const {
    auto s = absent_variables();
    if (s.empty()) return std::nullopt;
    return s;
}

IdealMapCheck invariance_and_compatibility(const MonomialIdeal& ideal, const Mat& B, uint32_t N) {
    if (B.n != ideal.n()) throw DimensionMismatch("matrix dimension mismatch");
    B.inverse();  // rejects singular B
    IdealMapCheck out;
    int n = ideal.n();
    PolyMap lin = PolyMap::from_linear(B, N);

    auto expansion_support = [&](const Multiindex& q) {
        // monomials of (Bz)^Q (homogeneous of degree |Q|)
        Series s = Series::monomial(n, N, Multiindex::zero(n), Scalar::one(B.mode, B.prec));
        for (int a = 0; a < n; ++a)
            for (uint32_t k = 0; k < q.e[a]; ++k) s = s * lin.comp(a);
        return s;
    };

    for (const auto& g : ideal.generators()) {
        if (g.degree() > N) continue;
        Series exp = expansion_support(g);
        for (const auto& [m, c] : exp.terms())
            if (!ideal.member(m)) {
                out.linear_invariance = false;
                if (out.witness.empty())
                    out.witness = "generator " + g.str() + " maps onto " + m.str();
                break;
            }
        if (!out.linear_invariance) break;
    }

    // The pullback of z^Q along rho(z) = B zbar is (B w)^Q evaluated at
    // w = zbar; membership is a support condition, so checking the
    // holomorphic expansion per degree shell is exact for degrees <= N.
    bool done = false;
    for_each_in_degrees(n, 1, N, [&](const Multiindex& q) {
        if (done) return;
        bool in_ideal = ideal.member(q);
        Series exp = expansion_support(q);
        for (const auto& [m, c] : exp.terms()) {
            if (ideal.member(m) != in_ideal) {
                out.rho_compatibility = false;
                if (out.witness.empty())
                    out.witness = "pullback of " + q.str() + " meets " + m.str();
                done = true;
                break;
            }
        }
    });
    return out;
}

} // namespace linideal
