#ifndef LINIDEAL_SMALLDIVISORS_HPP
#define LINIDEAL_SMALLDIVISORS_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ideal.hpp"
#include "resonance.hpp"
#include "series.hpp"

namespace linideal {

// omega_k = inf over {(Q,j) : 2 <= |Q| <= 2^k, x^Q not in I} of
// max_i |mu_i^Q - mu_{i,j}|, restricted to nonzero values.
struct OmegaSequence {
    int K = 0;
    std::vector<Magnitude> entries;  // entries[k-1] = omega_k

    // Shells 2..enumerated_degree were enumerated exhaustively. When
    // tail_certified is set, every divisor value at degrees beyond
    // enumerated_degree was proved >= the enumerated infimum by an exact
    // eigenvalue-growth argument, so the larger entries are exact too.
    uint32_t enumerated_degree = 0;
    bool tail_certified = false;
};

struct OmegaOptions {
    // Largest total degree enumerated exhaustively before switching to the
    // tail certificate.
    uint32_t enum_cap = 256;
    const BigFloat* eps = nullptr;  // float-mode zero threshold
};

OmegaSequence omega(const DiagonalFamily& D, const MonomialIdeal& I, int K,
                    const OmegaOptions& opts = {});

// -sum_{k=1..K} ln omega_k / 2^k
BigFloat brjuno_partial(const OmegaSequence& seq, mpfr_prec_t prec = 128);
BigFloat brjuno_partial(const DiagonalFamily& D, const MonomialIdeal& I, int K,
                        mpfr_prec_t prec = 128, const OmegaOptions& opts = {});

struct ThetaResult {
    Magnitude four_theta;
    Magnitude theta;        // four_theta / 4
    bool satisfied = true;  // 4*theta <= 1
    std::vector<int> S_used;  // variables ranged over; all of them unless the
                              // ideal is properly embedded
    std::string warning;    // names the violating indices when unsatisfied
};

ThetaResult theta(const DiagonalFamily& D, const MonomialIdeal& I);

struct BoundCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // first failing slot, or a note when skipped
};

struct MajorantOptions {
    mpq_class b = 1;
    // The decomposition searches are exponential; these caps guard them.
    uint32_t degree_cap = 10;
    int dim_cap = 3;
    mpfr_prec_t sum_prec = 128;
    const BigFloat* eps = nullptr;
    OmegaOptions omega_opts = {};
};

struct MajorantDiagnostics {
    int n = 0, l = 0;
    uint32_t N = 0;
    ThetaResult theta;
    mpq_class b;
    BigFloat a;  // sum_{i,j} |f_{i,j,Q}| <= a * b^{|Q|-2} * multinomial(Q)
    OmegaSequence omegas;

    // All tables range over x^Q outside the ideal, 2 <= |Q| <= N
    // (eta also holds the degree-one entries, which equal 1).
    std::map<Multiindex, Magnitude> delta;  // delta_Q
    std::map<Multiindex, Magnitude> eta;
    std::map<Multiindex, BigFloat> sigma;
    // psi[(k,j,Q)] and phi_j[(k,j,Q)]; phi[(k,Q)] = sum_j phi_j[(k,j,Q)]
    std::map<std::tuple<int, int, Multiindex>, int> psi;
    std::map<std::tuple<int, int, Multiindex>, long> phi_j;
    std::map<std::pair<int, Multiindex>, long> phi;
    int k_max = 0;  // tables cover 1 <= k <= k_max

    BigFloat c_estimate;  // max over computed Q of eta_Q^{1/|Q|}
    BigFloat c_bound;     // exp(-2n sum_{k<K} ln omega_{k+1}/2^k + 4n ln 1/theta)
    std::vector<BoundCheck> checks;
};

// Diagnostic tables and their certified bounds for the family F_i = D_i x + f_i,
// checked on the truncation at degree N with divisor depth K.
MajorantDiagnostics majorant_diagnostics(const std::vector<PolyMap>& F,
                                         const DiagonalFamily& D, const MonomialIdeal& I,
                                         uint32_t N, int K,
                                         const MajorantOptions& opts = {});

// phi_tilde_Q = sum_j |phi_{j,Q}| for the nonlinear coefficients of Phi,
// over x^Q outside the ideal.
std::map<Multiindex, BigFloat> phi_tilde_table(const PolyMap& Phi, const MonomialIdeal& I,
                                               mpfr_prec_t prec = 128);

// Checks phi_tilde_Q <= sigma_Q * eta_Q on the slots shared by both tables.
BoundCheck check_phi_tilde(const MajorantDiagnostics& diag,
                           const std::map<Multiindex, BigFloat>& phi_tilde);

} // namespace linideal

#endif
