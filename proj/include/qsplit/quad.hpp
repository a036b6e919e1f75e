#ifndef QSPLIT_QUAD_HPP
#define QSPLIT_QUAD_HPP

#include <array>
#include <optional>
#include <utility>

#include "qsplit/arith.hpp"

namespace qsplit {

/* Element x + y*sqrt(D) of M = Q(sqrt(D)) with rational coordinates. */
struct QElement {
    i64 D = 0;
    mpq_class x, y;

    QElement() = default;
    QElement(i64 D_, mpq_class x_, mpq_class y_)
        : D(D_), x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }
    QElement conj() const { return {D, x, -y}; }
    mpq_class trace() const { return 2 * x; }
    mpq_class norm() const { return x * x - D * y * y; }
    bool is_integral() const;

    bool operator==(const QElement&) const = default;
};

QElement qadd(const QElement& a, const QElement& b);
QElement qsub(const QElement& a, const QElement& b);
QElement qmul(const QElement& a, const QElement& b);
QElement qmul(const QElement& a, const mpq_class& r);
QElement qinv(const QElement& a);
QElement qneg(const QElement& a);

/* Exact square root in M, if one exists. */
std::optional<QElement> qsqrt(const QElement& beta);

/* Integral ideal content*(a Z + (b + w) Z) of the maximal order Z[w],
 * w = (D + sqrt(D))/2, with 0 <= b < a and a | N(b + w). */
struct QIdeal {
    i64 D = 0;
    mpz_class content = 1, a = 1, b = 0;

    mpz_class norm() const { return content * content * a; }
    bool operator==(const QIdeal&) const = default;
};

enum class SplittingType { Split, Inert, Ramified };

SplittingType splitting_type(i64 D, i64 p);

/* The prime ideal(s) of residue characteristic p.  For split p the
 * conjugate is distinct; for ramified p primary == conjugate; for inert p
 * both are the principal ideal (p) of norm p^2. */
struct PrimeAbove {
    SplittingType type;
    QIdeal primary;
    QIdeal conjugate;
};

PrimeAbove prime_above(i64 D, i64 p);

QIdeal ideal_mul(const QIdeal& I, const QIdeal& J);
QIdeal ideal_conj(const QIdeal& I);
QIdeal ideal_of(const QElement& alpha);
QIdeal ideal_pow(const QIdeal& I, int e);
bool ideal_contains(const QIdeal& I, const QElement& alpha);

/* Generator of I when I is principal, found by enumerating the norm form
 * 4 N(I) = t^2 + |D| s^2 by ascending s and verifying membership;
 * normalized to y >= 0, and x > 0 when y = 0. */
std::optional<QElement> principal_generator(const QIdeal& I);

/* Whether alpha * target (or, with allow_sign, +-alpha * target) is a
 * square in M^x; this is the square-class comparison of alpha and target. */
bool square_class_test(const QElement& alpha, const mpq_class& target, bool allow_sign);

/* Artin sign vector of an unramified degree-1 prime. */
std::array<int, 3> frobenius_class(i64 D, const QIdeal& p);

/* Coordinates of an integral element over (1, sqrt(m)), m = D/4 (D even). */
std::pair<mpz_class, mpz_class> coords_over_sqrt_m(const QElement& alpha);

/* Residue of an integral element at the ramified prime over odd p | D. */
i64 residue_at_ramified(const QElement& alpha, i64 p);

/* Class-group form attached to an ideal (for class identification). */
struct QuadForm;

} // namespace qsplit

#endif
