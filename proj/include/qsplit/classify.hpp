#ifndef QSPLIT_CLASSIFY_HPP
#define QSPLIT_CLASSIFY_HPP

#include <string>
#include <vector>

#include "qsplit/nakamura.hpp"

namespace qsplit {

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* One endomorphism algebra of a geometrically split abelian surface. */
struct AlgebraEntry {
    std::string type;        // "QxQ", "QxM", "M1xM2", "M2(Q)", "M2(M)"
    std::vector<i64> discs;  // field discriminants involved (empty for Q-only)
    std::string class_group; // "1", "2", "2x2" for the M2(M) entries
};

struct ClassificationReport {
    std::vector<AlgebraEntry> product_algebras; // 46
    std::vector<AlgebraEntry> matrix_algebras;  // 46
    std::vector<i64> h1_discs;                  // the 9 class-number-1 fields
    std::vector<i64> c2_discs;                  // the 18 class-group-C2 fields
    std::vector<i64> admissible_c2c2;           // the 18 admissible C2xC2 fields
    std::vector<i64> excluded_c2c2;             // the 6 excluded fields

    size_t total() const { return product_algebras.size() + matrix_algebras.size(); }
};

/* Assembles the full census.  Recomputes the admissible C2xC2 set from the
 * endomorphism computation and aborts with VerificationError when it does
 * not match the reference set. */
ClassificationReport classify_all(bool parallel = true);

} // namespace qsplit

#endif
