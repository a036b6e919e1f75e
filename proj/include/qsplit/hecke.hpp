#ifndef QSPLIT_HECKE_HPP
#define QSPLIT_HECKE_HPP

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsplit/quad.hpp"

namespace qsplit {

/* One local factor of a finite character on the unit groups of M.
 * EtaP lives at a ramified odd p | D and is the Legendre character of the
 * residue field; the 2-adic kinds live at the ramified prime over 2 and
 * are defined by their kernels on U_2/U_2^2. */
struct LocalCharacter {
    enum class Kind { EtaP, EtaMinus4, Eta8, EtaMinus8 };
    Kind kind;
    i64 p = 0; // the rational prime of the factor (2 for the 2-adic kinds)

    bool operator==(const LocalCharacter&) const = default;
    auto operator<=>(const LocalCharacter&) const = default;
};

/* A product of local factors, reduced modulo squares (each kind appears at
 * most once). */
struct FiniteCharacter {
    i64 D = 0;
    std::vector<LocalCharacter> factors; // sorted, canonical

    bool operator==(const FiniteCharacter&) const = default;
};

FiniteCharacter eta_p(i64 D, i64 p);
FiniteCharacter eta_minus4(i64 D);
FiniteCharacter eta_8(i64 D);
FiniteCharacter eta_minus8(i64 D);
FiniteCharacter character_mul(const FiniteCharacter& a, const FiniteCharacter& b);

/* Value at an integral element whose norm is coprime to the support. */
int character_eval(const FiniteCharacter& chi, const QElement& alpha);
int character_eval(const FiniteCharacter& chi, i64 n);

/* Value at -1; the finite characters extending to Gross-curve Hecke
 * characters have parity -1, the W-generators have parity +1. */
int character_parity(const FiniteCharacter& chi);

std::set<i64> character_support(const FiniteCharacter& chi);

/* Evaluation of a single local factor (the eta2 basis machinery). */
int eta_p_eval(i64 D, i64 p, const QElement& alpha);
int eta2_eval(i64 D, LocalCharacter::Kind kind, const QElement& alpha);

/* eta_0: eta_q for the smallest q = 3 mod 4 dividing D, otherwise
 * eta_{-8}.  Always parity -1 for the discriminants in scope. */
FiniteCharacter eta0(i64 D);

/* The two generators of W/W_0 per the six-case dispatch on the prime
 * discriminant factorization; both have parity +1. */
std::pair<FiniteCharacter, FiniteCharacter> w_generators(i64 D);

/* phi((alpha)) = eta(alpha) * alpha for a principal ideal coprime to the
 * support; generator-independent when eta has parity -1. */
QElement phi_principal(const FiniteCharacter& eta, const QElement& alpha);

struct DegenerateNValue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* The squarefree n with Q(sqrt(n)) generated by phi(p) + phi(conj p):
 * n = squarefree part of eta(alpha) Tr(alpha) + 2 eta(p) p, where
 * (alpha) = p^2.  Throws DegenerateNValue when the bracket is zero or a
 * perfect square. */
i64 n_value(const FiniteCharacter& eta, i64 p, const QElement& alpha);

/* Selection of the eight Hecke-character classes: the finite part is
 * eta0 * w1^a * w2^b, optionally twisted by the character of k/H. */
struct HeckeSpec {
    i64 D = 0;
    int a = 0, b = 0;
    bool twist = false;
};

std::vector<HeckeSpec> all_hecke_specs(i64 D);

} // namespace qsplit

#endif
