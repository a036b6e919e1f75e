#ifndef QSPLIT_FORMS_HPP
#define QSPLIT_FORMS_HPP

#include <array>
#include <vector>

#include "qsplit/arith.hpp"

namespace qsplit {

/* Positive definite integral binary quadratic form a x^2 + b xy + c y^2. */
struct QuadForm {
    i64 a = 1, b = 0, c = 0;

    i64 discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm&) const = default;
    auto operator<=>(const QuadForm&) const = default;
};

bool is_reduced(const QuadForm& f);
QuadForm reduce(QuadForm f);
QuadForm principal_form(i64 D);
QuadForm form_inverse(const QuadForm& f);

/* Dirichlet composition of classes of the same discriminant; returns the
 * reduced representative of the product class. */
QuadForm compose(const QuadForm& f, const QuadForm& g);

struct ClassGroup {
    i64 D = 0;
    std::vector<QuadForm> elements;   // all reduced forms
    std::vector<i64> structure;       // elementary divisors d1 | d2 | ...
    std::vector<QuadForm> generators;

    i64 order() const { return (i64)elements.size(); }
    bool is_trivial() const { return elements.size() == 1; }
    bool is_c2() const { return structure == std::vector<i64>{2}; }
    bool is_c2c2() const { return structure == std::vector<i64>{2, 2}; }
};

ClassGroup class_group(i64 D);

i64 form_order(const QuadForm& f);

/* Target structures for discriminant sweeps. */
enum class GroupShape { Trivial, C2, C2xC2 };

/* All fundamental D in [-bound, -1] whose class group matches, ascending
 * by |D|.  The sweep is an order-independent map over D; `parallel`
 * selects the OpenMP evaluation, the serial path is the reference. */
std::vector<i64> discriminants_with_class_group(GroupShape target, i64 bound,
                                                bool parallel = true);

/* D = -4 p_1 ... p_{t-1} with t >= 2 and every p_i = 1 mod 4. */
bool is_exceptional(i64 D);

/* Genus-field data for class group C2 x C2: the three prime discriminants
 * with product D and the radicands of the multiquadratic field H. */
struct GenusData {
    std::array<i64, 3> prime_discs{};
    std::array<i64, 3> radicands{};
};

GenusData genus_data(i64 D);

/* Frobenius sign vector of a split unramified prime on the radicand basis. */
std::array<int, 3> artin_vector(i64 D, i64 p);

} // namespace qsplit

#endif
