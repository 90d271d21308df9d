#include "multiindex.hpp"

#include <string>

namespace linideal {

std::string Multiindex::str() const {
    std::string s = "(";
    for (int a = 0; a < n(); ++a) {
        if (a) s += ",";
        s += std::to_string(e[a]);
    }
    return s + ")";
}

namespace {
void shell_rec(Multiindex& q, int pos, uint32_t rem,
               const std::function<void(const Multiindex&)>& fn) {
    if (pos == q.n() - 1) {
        q.e[pos] = rem;
        fn(q);
        return;
    }
    for (uint32_t v = 0; v <= rem; ++v) {
        q.e[pos] = v;
        shell_rec(q, pos + 1, rem - v, fn);
    }
}
} // namespace

void for_each_in_shell(int n, uint32_t d, const std::function<void(const Multiindex&)>& fn) {
    if (n == 0) return;
    Multiindex q = Multiindex::zero(n);
    shell_rec(q, 0, d, fn);
}

void for_each_in_degrees(int n, uint32_t lo, uint32_t hi,
                         const std::function<void(const Multiindex&)>& fn) {
    for (uint32_t d = lo; d <= hi; ++d) for_each_in_shell(n, d, fn);
}

void for_each_below(const Multiindex& bound, const std::function<void(const Multiindex&)>& fn) {
    Multiindex q = Multiindex::zero(bound.n());
    int n = bound.n();
    while (true) {
        fn(q);
        int a = n - 1;
        while (a >= 0 && q.e[a] == bound.e[a]) {
            q.e[a] = 0;
            --a;
        }
        if (a < 0) break;
        ++q.e[a];
    }
}

mpz_class multinomial(const Multiindex& q) {
    mpz_class r = 1;
    uint32_t acc = 0;
    for (int a = 0; a < q.n(); ++a) {
        for (uint32_t i = 1; i <= q.e[a]; ++i) {
            ++acc;
            r *= acc;
            r /= i;
        }
    }
    return r;
}

} // namespace linideal
