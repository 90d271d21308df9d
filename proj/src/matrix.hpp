#ifndef LINIDEAL_MATRIX_HPP
#define LINIDEAL_MATRIX_HPP

#include <vector>

#include "scalar.hpp"

namespace linideal {

// Dense n x n scalar matrix; just enough linear algebra for linear parts
// and involution matrices.
struct Mat {
    int n = 0;
    Mode mode = Mode::exact;
    mpfr_prec_t prec = 128;
    std::vector<Scalar> a;  // row-major

    Mat() = default;
    Mat(int n_, Mode m, mpfr_prec_t p)
        : n(n_), mode(m), prec(p), a(static_cast<std::size_t>(n_) * n_, Scalar::zero(m, p)) {}

    static Mat identity(int n, Mode m, mpfr_prec_t p) {
        Mat r(n, m, p);
        for (int i = 0; i < n; ++i) r.at(i, i) = Scalar::one(m, p);
        return r;
    }
    static Mat diagonal(const std::vector<Scalar>& d);

    Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat conj() const;
    // Gauss-Jordan; throws SingularLinearPart.
    Mat inverse() const;

    bool is_diagonal(const BigFloat* eps = nullptr) const;
    bool is_identity(const BigFloat* eps = nullptr) const;
    std::vector<Scalar> diagonal_entries() const;
    Magnitude max_entry_mag(const Mat& reference) const;  // max |a_ij - ref_ij|
};

} // namespace linideal

#endif
