#ifndef LINIDEAL_SCALAR_HPP
#define LINIDEAL_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <variant>

#include "bigfloat.hpp"
#include "errors.hpp"

namespace linideal {

enum class Mode { exact, floating };

// Complex number in one of two carriers: exact Gaussian rational, or a pair
// of arbitrary-precision binary floats. Arithmetic never switches carriers;
// mixing modes throws ModeMismatch.
class Scalar {
public:
    struct Exact {
        mpq_class re, im;
    };
    struct Float {
        BigFloat re, im;
    };

    Scalar() : v_(Exact{0, 0}) {}
    static Scalar exact(mpq_class re, mpq_class im) {
        Scalar s;
        s.v_ = Exact{std::move(re), std::move(im)};
        return s;
    }
    static Scalar floating(BigFloat re, BigFloat im) {
        Scalar s;
        s.v_ = Float{std::move(re), std::move(im)};
        return s;
    }
    static Scalar zero(Mode m, mpfr_prec_t prec) {
        if (m == Mode::exact) return exact(0, 0);
        return floating(BigFloat(prec), BigFloat(prec));
    }
    static Scalar one(Mode m, mpfr_prec_t prec) {
        if (m == Mode::exact) return exact(1, 0);
        return floating(BigFloat::from_si(1, prec), BigFloat(prec));
    }
    static Scalar from_int(long x, Mode m, mpfr_prec_t prec) {
        if (m == Mode::exact) return exact(mpq_class(x), 0);
        return floating(BigFloat::from_si(x, prec), BigFloat(prec));
    }

    Mode mode() const { return std::holds_alternative<Exact>(v_) ? Mode::exact : Mode::floating; }
    mpfr_prec_t prec() const {
        return mode() == Mode::exact ? 128 : std::get<Float>(v_).re.prec();
    }

    const Exact& ex() const { return std::get<Exact>(v_); }
    const Float& fl() const { return std::get<Float>(v_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on exact division by zero
    Scalar operator-() const;
    Scalar conj() const;
    Scalar inverse() const { return one(mode(), prec()) / *this; }

    // Structural zero test: exact equality, or |z| < eps in float mode.
    bool is_zero(const BigFloat* eps = nullptr) const;
    // Decidable equality (exact mode only; float mode compares difference to eps).
    bool equals(const Scalar& o, const BigFloat* eps = nullptr) const;

    // Squared modulus as a same-mode nonnegative real quantity.
    mpq_class abs_sq_exact() const;
    BigFloat abs_float() const;

    std::pair<std::string, std::string> str_pair() const;

private:
    void require_same(const Scalar& o) const {
        if (mode() != o.mode()) throw ModeMismatch();
    }
    std::variant<Exact, Float> v_;
};

// Nonnegative real magnitude |z|. In exact mode it is carried as the exact
// rational |z|^2 so that comparisons, products and quotients stay decidable;
// in float mode it is the modulus itself.
class Magnitude {
public:
    Magnitude() : mode_(Mode::exact), sq_(0), val_(2) {}

    static Magnitude from_sq(mpq_class sq) {
        Magnitude m;
        m.mode_ = Mode::exact;
        m.sq_ = std::move(sq);
        return m;
    }
    static Magnitude from_float(BigFloat v) {
        Magnitude m;
        m.mode_ = Mode::floating;
        m.val_ = std::move(v);
        return m;
    }
    static Magnitude of(const Scalar& s) {
        if (s.mode() == Mode::exact) return from_sq(s.abs_sq_exact());
        return from_float(s.abs_float());
    }
    static Magnitude one(Mode m, mpfr_prec_t prec = 128) {
        if (m == Mode::exact) return from_sq(1);
        return from_float(BigFloat::from_si(1, prec));
    }

    Mode mode() const { return mode_; }
    bool is_zero() const {
        return mode_ == Mode::exact ? sgn(sq_) == 0 : val_.is_zero();
    }

    int cmp(const Magnitude& o) const {
        if (mode_ != o.mode_) throw ModeMismatch("magnitude mode mismatch");
        if (mode_ == Mode::exact) return ::cmp(sq_, o.sq_);
        return val_.cmp(o.val_);
    }
    bool operator<(const Magnitude& o) const { return cmp(o) < 0; }
    bool operator<=(const Magnitude& o) const { return cmp(o) <= 0; }
    bool operator==(const Magnitude& o) const { return cmp(o) == 0; }

    Magnitude operator*(const Magnitude& o) const {
        if (mode_ != o.mode_) throw ModeMismatch("magnitude mode mismatch");
        if (mode_ == Mode::exact) return from_sq(sq_ * o.sq_);
        return from_float(val_ * o.val_);
    }
    Magnitude operator/(const Magnitude& o) const {
        if (mode_ != o.mode_) throw ModeMismatch("magnitude mode mismatch");
        if (mode_ == Mode::exact) {
            if (sgn(o.sq_) == 0) throw Error(ErrorKind::internal, "magnitude division by zero");
            return from_sq(sq_ / o.sq_);
        }
        return from_float(val_ / o.val_);
    }
    Magnitude inverse() const {
        return one(mode_, mode_ == Mode::floating ? val_.prec() : 128) / *this;
    }
    // Scale by an exact rational factor (exact mode only).
    Magnitude scaled(const mpq_class& factor) const;

    const mpq_class& sq() const { return sq_; }

    BigFloat value(mpfr_prec_t prec) const {
        if (mode_ == Mode::floating) return val_;
        return BigFloat::from_mpq(sq_, prec).sqrt();
    }
    BigFloat ln(mpfr_prec_t prec) const {
        if (mode_ == Mode::floating) return val_.log();
        BigFloat half = BigFloat::from_mpq(mpq_class(1, 2), prec);
        return BigFloat::from_mpq(sq_, prec).log() * half;
    }

    // Renders "p/q" when |z| is rational, "sqrt(p/q)" otherwise.
    std::string str() const;

private:
    Mode mode_;
    mpq_class sq_;
    BigFloat val_;
};

} // namespace linideal

#endif
