#ifndef QSPLIT_ARITH_HPP
#define QSPLIT_ARITH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsplit {

using i64 = long; // 64-bit on the supported platforms; matches the GMP C++ API

/* A place of Q: either a finite prime or the archimedean place. */
struct Place {
    bool infinite = false;
    i64 p = 0;

    static Place at(i64 p) { return Place{false, p}; }
    static Place infinity() { return Place{true, 0}; }
};

/* Finite and infinite ramification data of a quaternion algebra over Q.
 * The finite places are kept strictly ascending; the total number of
 * ramified places is even. */
struct RamifiedSet {
    std::vector<i64> finite_places;
    bool infinite_ramified = false;

    /* Product of the finite ramified primes, the usual "discriminant". */
    i64 discriminant() const;
    bool split() const { return finite_places.empty() && !infinite_ramified; }
    bool operator==(const RamifiedSet&) const = default;
};

bool is_prime(i64 n);
i64 isqrt(i64 n);
bool is_square(i64 n, i64* root = nullptr);

/* Trial division; adequate for the desk-scale inputs of this project. */
std::vector<std::pair<i64, int>> factorize(i64 n);

/* Kronecker symbol (a|n), n != 0. */
int kronecker_symbol(i64 a, i64 n);

/* Unique squarefree s with r/s a rational square; sign preserved. */
i64 squarefree_part(i64 r);
i64 squarefree_part(const mpq_class& r);

/* Hilbert symbol (a,b)_v over the completion of Q at v.  At odd p the
 * standard valuation/Legendre formula is used; at 2 solvability of
 * z^2 = a x^2 + b y^2 is decided by exhaustive search modulo 64 with a
 * unit coordinate, which lifts 2-adically by Hensel's lemma. */
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v);
int hilbert_symbol(i64 a, i64 b, const Place& v);

/* All ramified places of the quaternion algebra (a,b/Q), a,b squarefree. */
RamifiedSet quaternion_ramification(i64 a, i64 b);

/* Smallest-y nonnegative solution of x^2 + d y^2 = m (or = 4m). */
std::optional<std::pair<i64, i64>> cornacchia(i64 d, i64 m, bool four_m = false);

bool is_fundamental_discriminant(i64 D);

/* Factorization of a fundamental discriminant into prime discriminants
 * (-4, 8, -8, p = 1 mod 4, -q with q = 3 mod 4), ascending by |d|. */
std::vector<i64> prime_discriminant_factorization(i64 D);

} // namespace qsplit

#endif
