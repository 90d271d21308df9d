#ifndef LINIDEAL_IDEAL_HPP
#define LINIDEAL_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "multiindex.hpp"

namespace linideal {

// Monomial ideal given by its minimal generators; the empty list is the
// zero ideal (contains no monomial).
class MonomialIdeal {
public:
    explicit MonomialIdeal(int n) : n_(n) {}
    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    // Minimalizes the generator list under divisibility.
    static MonomialIdeal make(int n, std::vector<Multiindex> gens);

    int n() const { return n_; }
    const std::vector<Multiindex>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool member(const Multiindex& q) const;

    // Variables absent from every generator (0-based); the zero ideal yields
    // all variables. Empty result means "not properly embedded".
    std::vector<int> absent_variables() const;
    std::optional<std::vector<int>> properly_embedded() const;

private:
    int n_;
    std::vector<Multiindex> gens_;
};

struct IdealMapCheck {
    bool linear_invariance = true;
    bool rho_compatibility = true;
    std::string witness;  // first violating monomial, for the report
};

// linear_invariance: every monomial of (Bz)^R stays in the ideal, for each
// generator R. rho_compatibility: the pullback by rho(z) = B zbar maps the
// degree-<=N monomial basis of the ideal into (the conjugate of) itself and
// the complement basis into the complement.
IdealMapCheck invariance_and_compatibility(const MonomialIdeal& ideal, const Mat& B, uint32_t N);

} // namespace linideal

#endif
