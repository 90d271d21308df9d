#ifndef LINIDEAL_RESONANCE_HPP
#define LINIDEAL_RESONANCE_HPP

#include <string>
#include <vector>

#include "ideal.hpp"
#include "matrix.hpp"
#include "multiindex.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace linideal {

// The family of diagonal linear parts D_i = diag(mu_{i,1},...,mu_{i,n}).
class DiagonalFamily {
public:
    DiagonalFamily(std::vector<std::vector<Scalar>> mu);
    static DiagonalFamily from_linear_parts(const std::vector<Mat>& parts,
                                            const BigFloat* eps = nullptr);

    int l() const { return static_cast<int>(mu_.size()); }
    int n() const { return static_cast<int>(mu_[0].size()); }
    Mode mode() const { return mu_[0][0].mode(); }
    mpfr_prec_t prec() const { return mu_[0][0].prec(); }

    const Scalar& mu(int i, int a) const { return mu_[i][a]; }
    // mu_i^Q
    Scalar mu_pow(int i, const Multiindex& q) const;

private:
    std::vector<std::vector<Scalar>> mu_;
};

struct DeltaResult {
    std::vector<Scalar> deltas;  // delta^i_{Q,j}, i = 1..l
    Magnitude max_mag;           // max_i |delta^i_{Q,j}|
    int argmax_i = 0;            // ties broken by smallest i
    std::vector<int> tied;       // all indices attaining the max
};

// delta^i_{Q,j} = mu_i^Q - mu_{i,j} for every family member.
DeltaResult delta(const DiagonalFamily& D, const Multiindex& Q, int j);

// True iff every delta^i_{Q,j} vanishes (within eps in float mode).
bool is_resonant(const DiagonalFamily& D, const Multiindex& Q, int j,
                 const BigFloat* eps = nullptr);

// Divisibility-minimal R with 1 <= |R| <= N and mu_i^R = 1 for all i.
std::vector<Multiindex> invariant_generators(const DiagonalFamily& D, uint32_t N,
                                             bool* cutoff_limited = nullptr,
                                             const BigFloat* eps = nullptr);

struct ResonanceReport {
    uint32_t N = 0;
    std::vector<std::pair<Multiindex, int>> resonant_pairs;  // (Q, j), j 0-based
    std::vector<Multiindex> invariant_gens;
    MonomialIdeal res_ideal{0};
    bool centralizer_generated = false;
    bool cutoff_limited = false;
    // float mode only: resonances detected within eps, never treated as exact
    std::vector<std::string> float_warnings;
};

ResonanceReport centralizer_report(const DiagonalFamily& D, uint32_t N,
                                   const BigFloat* eps = nullptr);

// Coefficient slots of I^n together with the resonant pairs (the centralizer
// support), for degrees 2..N: the normalization target of the linearizer.
CoeffSet normalization_set(const MonomialIdeal& ideal,
                           const std::vector<std::pair<Multiindex, int>>& resonant_pairs,
                           uint32_t N);

} // namespace linideal

#endif
