#ifndef LINIDEAL_TEST_HELPERS_HPP
#define LINIDEAL_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "resonance.hpp"
#include "series.hpp"

namespace lt {

using namespace linideal;

inline Scalar q(long num, long den = 1) { return Scalar::exact(mpq_class(num, den), 0); }
inline Scalar qi(long rn, long rd, long in, long id) {
    return Scalar::exact(mpq_class(rn, rd), mpq_class(in, id));
}
inline Multiindex mi(std::initializer_list<uint32_t> e) {
    return Multiindex(std::vector<uint32_t>(e));
}

// Map literal: per component, a list of (exponents, coefficient) pairs.
inline PolyMap map2(uint32_t N,
                    std::vector<std::pair<std::vector<uint32_t>, Scalar>> c1,
                    std::vector<std::pair<std::vector<uint32_t>, Scalar>> c2) {
    PolyMap m(2, N, Mode::exact, 128);
    for (auto& [e, s] : c1) m.set_coeff(0, Multiindex(e), s);
    for (auto& [e, s] : c2) m.set_coeff(1, Multiindex(e), s);
    return m;
}

// Independent composition oracle: substitute G into every monomial of F by
// naive repeated multiplication, accumulating term-by-term. Mirrors the
// definition rather than the production path.
inline PolyMap compose_oracle(const PolyMap& F, const PolyMap& G) {
    int n = F.n();
    uint32_t N = F.trunc();
    PolyMap out(n, N, F.mode(), F.prec());
    for (int j = 0; j < n; ++j) {
        for (const auto& [Q, c] : F.comp(j).terms()) {
            Series t = Series::monomial(n, N, Multiindex::zero(n), c);
            for (int a = 0; a < n; ++a)
                for (uint32_t k = 0; k < Q.e[a]; ++k) t = t * G.comp(a);
            out.comp(j) = out.comp(j) + t;
        }
    }
    return out;
}

inline Scalar random_rational(std::mt19937& rng, bool complex_part = true) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    mpq_class re(num(rng), den(rng));
    re.canonicalize();
    mpq_class im(0);
    if (complex_part) {
        im = mpq_class(num(rng), den(rng));
        im.canonicalize();
    }
    return Scalar::exact(re, im);
}

inline PolyMap random_map(std::mt19937& rng, int n, uint32_t N, uint32_t maxdeg,
                          bool tangent_to_identity) {
    PolyMap m = tangent_to_identity
                    ? PolyMap::identity(n, N, Mode::exact, 128)
                    : PolyMap(n, N, Mode::exact, 128);
    std::uniform_int_distribution<int> keep(0, 2);
    for_each_in_degrees(n, tangent_to_identity ? 2 : 1, maxdeg, [&](const Multiindex& Q) {
        for (int j = 0; j < n; ++j)
            if (keep(rng) == 0) m.set_coeff(j, Q, random_rational(rng));
    });
    return m;
}

} // namespace lt

#endif
