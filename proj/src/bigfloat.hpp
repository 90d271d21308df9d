#ifndef LINIDEAL_BIGFLOAT_HPP
#define LINIDEAL_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace linideal {

// RAII wrapper around mpfr_t. All derived results round to nearest at the
// precision of the left operand (operands in one computation share one
// precision by construction).
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_si(long x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_mpq(const mpq_class& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    // Parses a decimal (or rational "p/q") literal.
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);

    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    BigFloat operator+(const BigFloat& o) const { return bin(mpfr_add, o); }
    BigFloat operator-(const BigFloat& o) const { return bin(mpfr_sub, o); }
    BigFloat operator*(const BigFloat& o) const { return bin(mpfr_mul, o); }
    BigFloat operator/(const BigFloat& o) const { return bin(mpfr_div, o); }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {
        BigFloat r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat exp() const {
        BigFloat r(prec());
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat pow_ui(unsigned long e) const {
        BigFloat r(prec());
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator==(const BigFloat& o) const { return mpfr_equal_p(v_, o.v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Deterministic decimal rendering (round-trips at the stored precision).
    std::string str() const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    BigFloat bin(BinFn fn, const BigFloat& o) const {
        BigFloat r(prec());
        fn(r.v_, v_, o.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

} // namespace linideal

#endif
