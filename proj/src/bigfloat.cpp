#include "bigfloat.hpp"

#include <cstdio>
#include <vector>

#include "errors.hpp"

namespace linideal {

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
        q.canonicalize();
        return from_mpq(q, prec);
    }
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("bad decimal literal: " + s);
    return r;
}

std::string BigFloat::str() const {
    // Enough digits to round-trip: prec * log10(2) + 2.
    int digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 2;
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRNg", digits);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

} // namespace linideal
