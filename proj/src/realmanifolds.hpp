#ifndef LINIDEAL_REALMANIFOLDS_HPP
#define LINIDEAL_REALMANIFOLDS_HPP

#include <string>
#include <tuple>
#include <vector>

#include "ideal.hpp"
#include "linearizer.hpp"
#include "resonance.hpp"
#include "series.hpp"

namespace linideal {

// Anti-holomorphic involution rho(z) = B conj(z) + R(conj(z)), stored through
// its holomorphic representative H(w) = Bw + R(w) so every composition stays
// in the holomorphic series kernel: rho1 o rho2 = H1 o conj_coeffs(H2).
struct AntiInvolution {
    Mat B;
    PolyMap R;  // zero constant and linear part

    static AntiInvolution make(Mat B, PolyMap R);
    static AntiInvolution linear(Mat B, uint32_t N);
    // Splits a representative H into linear part and remainder.
    static AntiInvolution from_rep(const PolyMap& H);

    int n() const { return B.n; }
    uint32_t trunc() const { return R.trunc(); }
    PolyMap rep() const;  // H(w) = Bw + R(w)
};

struct InvolutionCheck {
    bool linear_ok = true;   // B conj(B) = Id
    bool involutive = true;  // rho o rho = Id modulo degree N
    std::string linear_residual;
    std::string composition_residual;
    bool valid() const { return linear_ok && involutive; }
};

InvolutionCheck validate_involution(const AntiInvolution& rho, uint32_t N,
                                    const BigFloat* eps = nullptr);

// Conjugation by a holomorphic tangent-to-identity map h: rho -> h o rho o h^{-1};
// on representatives H -> h o H o conj_coeffs(h^{-1}).
AntiInvolution transport_involution(const AntiInvolution& rho, const PolyMap& h);

// The ordered pair maps F_{i,j} = rho_i o rho_j and their linear parts
// D_{i,j} = B_i conj(B_j).
struct PairFamily {
    int m = 0;
    int n = 0;
    uint32_t N = 0;
    std::vector<std::vector<PolyMap>> F;
    std::vector<std::vector<Mat>> D;
    bool all_diagonal = false;
    bool commuting = false;  // ordered pair maps pairwise commute mod N
    // mu[i][j][k], filled when all D_{i,j} are diagonal
    std::vector<std::vector<std::vector<Scalar>>> mu;
};

PairFamily pair_maps(const std::vector<AntiInvolution>& rhos, uint32_t N,
                     const BigFloat* eps = nullptr);

// Non-resonance of the pair eigenvalues: for every (i, k) and every exponent
// Q with 2 <= |Q| <= N there must be some j with
// conj(mu_{i,j})^Q != mu_{i,j,k}^{-1}. The on-ideal variant only quantifies
// over x^Q outside I.
struct NonresonanceReport {
    bool nonresonant = true;
    bool nonresonant_on_ideal = true;
    // violating (i, k, Q) triples, 0-based, plain variant
    std::vector<std::tuple<int, int, Multiindex>> violations;
};

NonresonanceReport nonresonance_check(const PairFamily& pairs, const MonomialIdeal& I,
                                      uint32_t N, const BigFloat* eps = nullptr);

// Intersection of unions of coordinate hyperplanes: one union (list of
// 0-based variable indices) per ideal generator. An empty list of unions is
// the whole space (zero ideal).
struct VarietyDescription {
    std::vector<std::vector<int>> unions;
    std::string str() const;
};

VarietyDescription variety_of(const MonomialIdeal& I);

struct StraighteningReport {
    explicit StraighteningReport(LinearizationResult l) : lin(std::move(l)) {}

    PairFamily pairs;
    std::vector<InvolutionCheck> involution_checks;
    std::vector<IdealMapCheck> ideal_checks;  // per involution, z -> B_i conj(z)
    NonresonanceReport nonres;
    LinearizationResult lin;
    std::vector<AntiInvolution> transported;  // Phi^{-1} o rho_i o Phi
    bool transported_in_ideal = true;  // transported R_i supported in conj(I)
    std::string transported_witness;
    Magnitude conj_residual;             // input identity, max over (i, j)
    Magnitude normalizability_residual;  // transported R_i - D_ij R_i(conj(D_ij) w)
    Magnitude group_residual;            // rho_i o F_{i,j} o rho_i - F_{j,i}
    VarietyDescription variety;
    std::vector<std::string> manifold_descriptions;  // M_k cap S
    VerificationReport verification;
};

// Straightening pipeline: build the pair family (commuting, diagonal), check
// the ideal is compatible with every z -> B_i conj(z), check non-resonance on
// the ideal, linearize {F_{i,j}} strictly over I, transport the involutions
// by the resulting Phi and certify they became linear modulo the ideal.
// Throws NotCommuting / NonDiagonalLinearPart / HypothesisFailed /
// ObstructionFound.
StraighteningReport straighten(const std::vector<AntiInvolution>& rhos, const MonomialIdeal& I,
                               uint32_t N, const BigFloat* eps = nullptr);

} // namespace linideal

#endif
