#ifndef LINIDEAL_MULTIINDEX_HPP
#define LINIDEAL_MULTIINDEX_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace linideal {

// Exponent vector Q = (q_1,...,q_n). Ordering is lexicographic, which fixes
// the iteration order of every sparse table in the project.
struct Multiindex {
    std::vector<uint32_t> e;

    Multiindex() = default;
    explicit Multiindex(std::vector<uint32_t> exps) : e(std::move(exps)) {}
    static Multiindex zero(int n) { return Multiindex(std::vector<uint32_t>(n, 0)); }
    static Multiindex unit(int n, int a) {
        Multiindex q = zero(n);
        q.e[a] = 1;
        return q;
    }

    int n() const { return static_cast<int>(e.size()); }
    uint32_t degree() const {
        uint32_t d = 0;
        for (uint32_t q : e) d += q;
        return d;
    }

    bool operator==(const Multiindex& o) const { return e == o.e; }
    bool operator<(const Multiindex& o) const { return e < o.e; }

    Multiindex operator+(const Multiindex& o) const {
        Multiindex r = *this;
        for (int a = 0; a < n(); ++a) r.e[a] += o.e[a];
        return r;
    }
    // Componentwise difference; caller guarantees o <= *this.
    Multiindex operator-(const Multiindex& o) const {
        Multiindex r = *this;
        for (int a = 0; a < n(); ++a) r.e[a] -= o.e[a];
        return r;
    }

    // Componentwise q <= q' (divisibility of x^Q into x^Q').
    bool divides(const Multiindex& o) const {
        for (int a = 0; a < n(); ++a)
            if (e[a] > o.e[a]) return false;
        return true;
    }

    std::string str() const;
};

// Calls fn for every Q with |Q| = d, in lexicographic order.
void for_each_in_shell(int n, uint32_t d, const std::function<void(const Multiindex&)>& fn);

// Calls fn for every Q with lo <= |Q| <= hi, by increasing degree.
void for_each_in_degrees(int n, uint32_t lo, uint32_t hi,
                         const std::function<void(const Multiindex&)>& fn);

// Calls fn for every 0 <= Q <= bound componentwise (lexicographic order).
void for_each_below(const Multiindex& bound, const std::function<void(const Multiindex&)>& fn);

// |Q|! / (q_1! ... q_n!)
mpz_class multinomial(const Multiindex& q);

} // namespace linideal

#endif
