/**
 * @file numeric.hpp
 * @brief Exact integer/rational scalars and combinatorial number sequences.
 *
 * All arithmetic is arbitrary precision via GMP. Rationals are kept
 * canonical (lowest terms, positive denominator) by construction.
 */
#ifndef EHRHART_NUMERIC_HPP
#define EHRHART_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ehrhart {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws std::domain_error on zero denominator.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Int floor_to_int(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_to_int(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// "num/den" with the denominator always spelled out ("1/1", "-7/3").
inline std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "num/den" or a bare integer.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(s));
        return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Binomial coefficient with the falling-factorial convention
/// binomial(n,k) = n(n-1)...(n-k+1)/k!, valid for any integer n and k >= 0.
inline Int binomial(const Int& n, long k) {
    if (k < 0)
        throw std::domain_error("binomial: negative k");
    if (n >= 0 && n.fits_ulong_p()) {
        Int r;
        mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), static_cast<unsigned long>(k));
        return r;
    }
    Int num = 1;
    for (long i = 0; i < k; ++i)
        num *= n - i;
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                factorial(static_cast<unsigned long>(k)).get_mpz_t());
    // a product of k consecutive integers is divisible by k!
    if (rem != 0)
        throw std::logic_error("binomial: falling factorial not divisible by k!");
    return q;
}

inline Int binomial(long n, long k) { return binomial(Int(n), k); }

/// Unsigned Stirling numbers of the first kind:
/// c(n+1,k) = n*c(n,k) + c(n,k-1), c(0,0) = 1, c(n,0) = 0 for n > 0.
inline Int stirling1_unsigned(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    std::vector<Int> row(n + 1, 0);
    row[0] = 1;  // row for n = 0
    for (unsigned m = 1; m <= n; ++m) {
        for (unsigned j = std::min(m, n); j >= 1; --j)
            row[j] = Int(m - 1) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

/// Exact harmonic number H_d = 1 + 1/2 + ... + 1/d, d >= 1.
inline Rational harmonic(unsigned d) {
    if (d < 1)
        throw std::domain_error("harmonic: d must be >= 1");
    Rational h = 0;
    for (unsigned k = 1; k <= d; ++k)
        h += make_rational(1, k);
    return h;
}

}  // namespace ehrhart

#endif  // EHRHART_NUMERIC_HPP
