#pragma once

#include <gmpxx.h>
#include <string>

namespace theta {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// rising factorial (c)_k = c(c+1)...(c+k-1)
inline Int pochhammer(const Int& c, long k) {
    Int r = 1;
    for (long i = 0; i < k; ++i) r *= c + i;
    return r;
}

inline std::string rat_to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// a + b*i with exact rational components
struct GaussRat {
    Rat re, im;

    GaussRat() = default;
    GaussRat(long r) : re(r) {}
    GaussRat(const Rat& r) : re(r) {}
    GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

inline std::string to_string(const GaussRat& z) {
    if (z.im == 0) return rat_to_string(z.re);
    if (z.re == 0) return rat_to_string(z.im) + "i";
    std::string s = rat_to_string(z.re);
    if (z.im > 0) s += "+";
    return s + rat_to_string(z.im) + "i";
}

} // namespace theta
