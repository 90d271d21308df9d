#include "matrix.hpp"

#include "errors.hpp"

namespace linideal {

Mat Mat::diagonal(const std::vector<Scalar>& d) {
    if (d.empty()) throw DimensionMismatch("empty diagonal");
    Mat r(static_cast<int>(d.size()), d[0].mode(), d[0].prec());
    for (int i = 0; i < r.n; ++i) r.at(i, i) = d[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (n != o.n) throw DimensionMismatch("matrix size mismatch");
    Mat r(n, mode, prec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar s = Scalar::zero(mode, prec);
            for (int k = 0; k < n; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (n != o.n) throw DimensionMismatch("matrix size mismatch");
    Mat r(n, mode, prec);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

Mat Mat::conj() const {
    Mat r = *this;
    for (auto& s : r.a) s = s.conj();
    return r;
}

Mat Mat::inverse() const {
    Mat m = *this;
    Mat inv = identity(n, mode, prec);
    for (int col = 0; col < n; ++col) {
        // pivot: first structurally nonzero entry in exact mode, largest
        // modulus in float mode
        int piv = -1;
        if (mode == Mode::exact) {
            for (int r = col; r < n; ++r)
                if (!m.at(r, col).is_zero()) {
                    piv = r;
                    break;
                }
        } else {
            Magnitude best = Magnitude::from_float(BigFloat(prec));
            for (int r = col; r < n; ++r) {
                Magnitude mg = Magnitude::of(m.at(r, col));
                if (piv < 0 || best < mg) {
                    piv = r;
                    best = mg;
                }
            }
            if (piv >= 0 && Magnitude::of(m.at(piv, col)).is_zero()) piv = -1;
        }
        if (piv < 0) throw SingularLinearPart();
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar d = m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) = m.at(col, j) / d;
            inv.at(col, j) = inv.at(col, j) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Scalar f = m.at(r, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                m.at(r, j) = m.at(r, j) - f * m.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Mat::is_diagonal(const BigFloat* eps) const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !at(i, j).is_zero(eps)) return false;
    return true;
}

bool Mat::is_identity(const BigFloat* eps) const {
    Mat d = *this - identity(n, mode, prec);
    for (const auto& s : d.a)
        if (!s.is_zero(eps)) return false;
    return true;
}

std::vector<Scalar> Mat::diagonal_entries() const {
    std::vector<Scalar> r;
    r.reserve(n);
    for (int i = 0; i < n; ++i) r.push_back(at(i, i));
    return r;
}

Magnitude Mat::max_entry_mag(const Mat& reference) const {
    Mat d = *this - reference;
    Magnitude best = Magnitude::of(Scalar::zero(mode, prec));
    for (const auto& s : d.a) {
        Magnitude mg = Magnitude::of(s);
        if (best < mg) best = mg;
    }
    return best;
}

} // namespace linideal
