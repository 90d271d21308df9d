#ifndef LINIDEAL_LINEARIZER_HPP
#define LINIDEAL_LINEARIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ideal.hpp"
#include "resonance.hpp"
#include "series.hpp"

namespace linideal {

// True iff F_a o F_b = F_b o F_a modulo degree N for every pair.
bool check_commuting(const std::vector<PolyMap>& F, uint32_t N, const BigFloat* eps = nullptr);

enum class LinMode { strict, normalform };

struct TraceEntry {
    enum class Case { removable, resonant_off_ideal, ideal };
    Multiindex Q;
    int j = 0;  // 0-based component
    Case fired = Case::removable;
    int i0 = -1;         // chosen family index in the removable case
    Scalar divisor;      // delta^{i0}_{Q,j}
    std::vector<int> tied;  // every index attaining max_i |delta^i_{Q,j}|
};

struct ObstructionRecord {
    Multiindex Q;
    int j = 0;  // 0-based
    // right hand side coefficient per family member
    std::vector<Scalar> values;
};

struct LinearizationResult {
    PolyMap Phi;              // tangent to identity
    std::vector<PolyMap> G;   // G_i = D_i y + g_i
    std::vector<TraceEntry> trace;
    std::vector<ObstructionRecord> obstructions;  // nonzero resonant off-ideal slots
    LinMode mode = LinMode::strict;
    uint32_t N = 0;
};

struct LinearizeOptions {
    LinMode mode = LinMode::strict;
    // float-mode zero threshold; defaults to 2^(-prec/2)
    const BigFloat* eps = nullptr;
};

// Degree-by-degree solution of F_i o Phi = Phi o G_i with g_i supported in
// the ideal. Per coefficient slot (Q, j), |Q| >= 2: with
// RHS_i = {f_{i,j}(Phi) - (phi_j(G_i) - phi_j(D_i y))}_Q,
//  (a) x^Q outside I, some delta^i_{Q,j} != 0: phi_{j,Q} = RHS_{i0}/delta^{i0},
//      i0 the largest |delta^i| (smallest i on ties), g_{i,j,Q} = 0;
//  (b) x^Q outside I, all delta^i_{Q,j} = 0: RHS must vanish; a nonzero RHS
//      is an obstruction (strict mode throws, normalform mode absorbs it
//      into g as a resonant normal-form term);
//  (c) x^Q in I: phi_{j,Q} = 0, g_{i,j,Q} = RHS_i.
LinearizationResult linearize_on_ideal(const std::vector<PolyMap>& F, const MonomialIdeal& I,
                                       uint32_t N, const LinearizeOptions& opts = {});

struct VerifyCheck {
    std::string name;
    bool pass = true;
    std::string residual;  // max residual magnitude, or a witness slot
};

struct VerificationReport {
    std::vector<VerifyCheck> checks;
    bool all_pass = true;
};

// Full post-hoc verification: (1) conjugacy residual, (2) g supported in the
// ideal, (3) zero projection of Phi - Id on the normalization set,
// (4) divisor-choice independence (the quotient RHS_i/delta^i agrees for
// every i with a nonzero divisor), (5) rho o Phi o rho' = Phi for each given
// anti-involution, passed by its holomorphic representative H (rho = H o conj).
// rho' defaults to rho itself; passing the straightened involutions there
// instead turns the check into "Phi intertwines the input involutions with
// their linear models".
VerificationReport verify(const LinearizationResult& res, const std::vector<PolyMap>& F,
                          const MonomialIdeal& I, const ResonanceReport& resonance,
                          const std::vector<PolyMap>* rho_reps = nullptr,
                          const std::vector<PolyMap>* rho_inner_reps = nullptr,
                          const BigFloat* eps = nullptr);

} // namespace linideal

#endif
