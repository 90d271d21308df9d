#include "scalar.hpp"

namespace linideal {

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    if (mode() == Mode::exact) return exact(ex().re + o.ex().re, ex().im + o.ex().im);
    return floating(fl().re + o.fl().re, fl().im + o.fl().im);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same(o);
    if (mode() == Mode::exact) return exact(ex().re - o.ex().re, ex().im - o.ex().im);
    return floating(fl().re - o.fl().re, fl().im - o.fl().im);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    if (mode() == Mode::exact) {
        const Exact &a = ex(), &b = o.ex();
        return exact(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    const Float &a = fl(), &b = o.fl();
    return floating(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same(o);
    if (mode() == Mode::exact) {
        const Exact &a = ex(), &b = o.ex();
        mpq_class d = b.re * b.re + b.im * b.im;
        if (sgn(d) == 0) throw Error(ErrorKind::bad_input, "exact division by zero");
        return exact((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    const Float &a = fl(), &b = o.fl();
    BigFloat d = b.re * b.re + b.im * b.im;
    return floating((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Scalar Scalar::operator-() const {
    if (mode() == Mode::exact) return exact(-ex().re, -ex().im);
    return floating(-fl().re, -fl().im);
}

Scalar Scalar::conj() const {
    if (mode() == Mode::exact) return exact(ex().re, -ex().im);
    return floating(fl().re, -fl().im);
}

bool Scalar::is_zero(const BigFloat* eps) const {
    if (mode() == Mode::exact) return sgn(ex().re) == 0 && sgn(ex().im) == 0;
    if (eps == nullptr) return fl().re.is_zero() && fl().im.is_zero();
    return abs_float() < *eps;
}

bool Scalar::equals(const Scalar& o, const BigFloat* eps) const {
    return (*this - o).is_zero(eps);
}

mpq_class Scalar::abs_sq_exact() const {
    if (mode() != Mode::exact) throw ModeMismatch("abs_sq_exact on float scalar");
    return ex().re * ex().re + ex().im * ex().im;
}

BigFloat Scalar::abs_float() const {
    if (mode() != Mode::floating) throw ModeMismatch("abs_float on exact scalar");
    return (fl().re * fl().re + fl().im * fl().im).sqrt();
}

std::pair<std::string, std::string> Scalar::str_pair() const {
    if (mode() == Mode::exact) return {ex().re.get_str(), ex().im.get_str()};
    return {fl().re.str(), fl().im.str()};
}

Magnitude Magnitude::scaled(const mpq_class& factor) const {
    if (sgn(factor) < 0) throw Error(ErrorKind::internal, "negative magnitude scale");
    if (mode_ == Mode::exact) return from_sq(sq_ * factor * factor);
    return from_float(val_ * BigFloat::from_mpq(factor, val_.prec()));
}

namespace {
// Integer square root test; returns true and sets r when x = r^2.
bool perfect_square(const mpz_class& x, mpz_class& r) {
    if (sgn(x) < 0) return false;
    r = sqrt(x);
    return r * r == x;
}
} // namespace

std::string Magnitude::str() const {
    if (mode_ == Mode::floating) return val_.str();
    mpz_class rn, rd;
    if (perfect_square(sq_.get_num(), rn) && perfect_square(sq_.get_den(), rd)) {
        mpq_class v(rn, rd);
        v.canonicalize();
        return v.get_str();
    }
    return "sqrt(" + sq_.get_str() + ")";
}

} // namespace linideal
