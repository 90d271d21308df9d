#ifndef LINIDEAL_SERIES_HPP
#define LINIDEAL_SERIES_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "multiindex.hpp"
#include "scalar.hpp"

namespace linideal {

// Sparse truncated power series in n variables, all stored degrees <= N,
// no stored zero coefficients. Iteration order over terms is lexicographic
// on the exponent vector.
class Series {
public:
    Series(int n, uint32_t N, Mode mode, mpfr_prec_t prec)
        : n_(n), N_(N), mode_(mode), prec_(prec) {}

    static Series monomial(int n, uint32_t N, const Multiindex& q, const Scalar& c);

    int n() const { return n_; }
    uint32_t trunc() const { return N_; }
    Mode mode() const { return mode_; }
    mpfr_prec_t prec() const { return prec_; }

    const std::map<Multiindex, Scalar>& terms() const { return terms_; }

    Scalar coeff(const Multiindex& q) const;
    void set_coeff(const Multiindex& q, const Scalar& c);
    void add_to_coeff(const Multiindex& q, const Scalar& c);

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series scaled(const Scalar& c) const;
    Series conj_coeffs() const;
    // Drops all terms of degree > d.
    Series truncated_to(uint32_t d) const;

    bool is_zero(const BigFloat* eps = nullptr) const;
    Magnitude max_coeff_mag() const;

private:
    void require_compatible(const Series& o) const;
    int n_;
    uint32_t N_;
    Mode mode_;
    mpfr_prec_t prec_;
    std::map<Multiindex, Scalar> terms_;
};

// Set of (Q, j) coefficient slots used by project() and the normalization
// checks; `all` selects every nonlinear slot.
struct CoeffSet {
    bool all = false;
    std::set<std::pair<Multiindex, int>> entries;

    static CoeffSet everything() {
        CoeffSet s;
        s.all = true;
        return s;
    }
    void insert(const Multiindex& q, int j) { entries.insert({q, j}); }
    bool contains(const Multiindex& q, int j) const {
        return all || entries.count({q, j}) > 0;
    }
};

// n-tuple of truncated series: a polynomial self-map germ of (C^n, 0).
class PolyMap {
public:
    PolyMap(int n, uint32_t N, Mode mode, mpfr_prec_t prec)
        : comp_(n, Series(n, N, mode, prec)) {}

    static PolyMap identity(int n, uint32_t N, Mode mode, mpfr_prec_t prec);
    static PolyMap from_linear(const Mat& m, uint32_t N);

    int n() const { return static_cast<int>(comp_.size()); }
    uint32_t trunc() const { return comp_[0].trunc(); }
    Mode mode() const { return comp_[0].mode(); }
    mpfr_prec_t prec() const { return comp_[0].prec(); }

    Series& comp(int j) { return comp_[j]; }
    const Series& comp(int j) const { return comp_[j]; }

    Scalar coeff(int j, const Multiindex& q) const { return comp_[j].coeff(q); }
    void set_coeff(int j, const Multiindex& q, const Scalar& c) { comp_[j].set_coeff(q, c); }

    Mat linear_part() const;
    // Map minus its linear part (and constant, which germs never carry).
    PolyMap nonlinear_part() const;

    PolyMap operator+(const PolyMap& o) const;
    PolyMap operator-(const PolyMap& o) const;
    PolyMap conj_coeffs() const;

    bool is_zero(const BigFloat* eps = nullptr) const;
    Magnitude max_coeff_mag() const;

private:
    std::vector<Series> comp_;
};

// Substitutes G into f; G must have zero constant term.
Series compose(const Series& f, const PolyMap& G);
// (F o G), truncated to the shared degree N.
PolyMap compose(const PolyMap& F, const PolyMap& G);
// Matrix applied on the left: (M F)_j = sum_k M_jk F_k.
PolyMap apply_linear(const Mat& m, const PolyMap& F);
// Compositional inverse; linear part must be invertible.
PolyMap invert(const PolyMap& F);
// Keeps exactly the listed nonlinear coefficient slots of F - (linear part).
PolyMap project(const PolyMap& F, const CoeffSet& target);

} // namespace linideal

#endif
