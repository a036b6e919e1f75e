#ifndef QSPLIT_MULTIQUAD_HPP
#define QSPLIT_MULTIQUAD_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsplit/arith.hpp"

namespace qsplit {

/* Multiquadratic field Q(sqrt(m_1), ..., sqrt(m_r)), r <= 3, with the m_i
 * squarefree and multiplicatively independent modulo squares.  The basis
 * is indexed by subset masks S, b_S = prod_{i in S} sqrt(m_i), and
 * b_S b_T = (prod_{i in S and T} m_i) b_{S xor T}. */
struct MQField {
    int rank = 0;
    std::array<i64, 3> radicands{};

    int dim() const { return 1 << rank; }
    /* Squarefree class of prod_{i in S} m_i. */
    i64 subset_class(int mask) const;
    /* All 2^rank rational square classes represented in the field. */
    std::vector<i64> rational_classes() const;
    /* Mask with subset_class(mask) == squarefree class of m, if any. */
    std::optional<int> mask_of_class(i64 m) const;

    bool operator==(const MQField&) const = default;
};

MQField make_mq_field(const std::vector<i64>& radicands);

struct MQElement {
    MQField field;
    std::array<mpq_class, 8> coords{};

    bool is_zero() const;
    bool is_rational() const;
    bool operator==(const MQElement&) const = default;
};

MQElement mq_zero(const MQField& F);
MQElement mq_rational(const MQField& F, const mpq_class& r);
/* sqrt(m) for a represented square class m, as rational * b_S. */
MQElement mq_sqrt_radicand(const MQField& F, i64 m);

MQElement mq_add(const MQElement& a, const MQElement& b);
MQElement mq_sub(const MQElement& a, const MQElement& b);
MQElement mq_mul(const MQElement& a, const MQElement& b);
MQElement mq_mul(const MQElement& a, const mpq_class& r);
MQElement mq_neg(const MQElement& a);
/* Inverse through the product of the nontrivial Galois conjugates divided
 * by the rational full norm. */
MQElement mq_inv(const MQElement& a);
MQElement mq_div(const MQElement& a, const MQElement& b);

/* Galois action of the sign character given by flip mask eps. */
MQElement mq_galois(const MQElement& a, int eps);
/* Product of all Galois conjugates; always rational. */
mpq_class mq_full_norm(const MQElement& a);

/* Exact square root by descent through the subfield tower; the result has
 * its first nonzero coordinate positive. */
std::optional<MQElement> mq_sqrt(const MQElement& beta);

/* Quadratic extension k = H(sqrt(delta)) with k/Q Galois, described by the
 * gamma table sigma(delta) = delta * gamma_sigma^2 and the {+-1}-valued
 * 2-cocycle c(sigma, tau) = gamma_sigma sigma(gamma_tau) / gamma_{sigma tau}. */
struct RelQuadExt {
    MQField H;
    MQElement delta;
    std::array<MQElement, 8> gamma;
    std::array<int8_t, 64> cocycle{}; // [sigma * 8 + tau]

    // provenance when delta = u + v sqrt(m) came from a quadratic subfield
    i64 delta_subfield = 0;
    mpq_class delta_u, delta_v;

    int c(int sigma, int tau) const { return cocycle[sigma * 8 + tau]; }
};

/* Builds the gamma table and cocycle; absent when some sigma(delta)/delta
 * is not a square (i.e. H(sqrt(delta))/Q is not Galois). */
std::optional<RelQuadExt> make_rel_quad_ext(const MQField& H, const MQElement& delta);

struct DeltaSearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Deterministic search for delta in a quadratic subfield of H such that
 * k = H(sqrt(delta)) is Galois over Q and non-abelian over the quadratic
 * field M fixed by {sigma : |sigma & M_mask| even}.  Subfields are scanned
 * ascending by (|m|, m) and candidates by (|u|+|v|, u, v); `skip` asks for
 * a later hit (used by choice-independence checks). */
RelQuadExt find_delta(const MQField& H, int M_mask, i64 bound, int skip = 0);

enum class GalQuartic { C4, C2xC2 };

/* Structure of Gal(k/L) for L the fixed field of an order-2 sigma: C4 when
 * the lift of sigma squares to the generator of Gal(k/H), i.e. c(sigma,
 * sigma) = -1. */
GalQuartic gal_structure_over_L(const RelQuadExt& k, int sigma);

/* Whether k/F is abelian, for F the subfield fixed by the subgroup
 * {sigma : sigma fixes b_{S_F}}: holds iff the cocycle is symmetric there. */
bool is_abelian_over_F(const RelQuadExt& k, int S_F);

/* Primes dividing 2 * D * num/den of the full norm of delta; a safe
 * superset of the ramification of k/H used to steer prime choices. */
std::vector<i64> k_support(const RelQuadExt& k, i64 D);

} // namespace qsplit

#endif
