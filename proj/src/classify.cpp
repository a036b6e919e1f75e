#include "qsplit/classify.hpp"

#include <algorithm>

namespace qsplit {

ClassificationReport classify_all(bool parallel) {
    ClassificationReport rep;
    // class-number-1 and C2 censuses; the bounds are complete by the
    // published class-number tables (largest members -163 and -427)
    rep.h1_discs = discriminants_with_class_group(GroupShape::Trivial, 200, parallel);
    rep.c2_discs = discriminants_with_class_group(GroupShape::C2, 500, parallel);
    if (rep.h1_discs.size() != 9 || rep.c2_discs.size() != 18)
        throw VerificationError("classify_all: class-number census mismatch");

    // admissible C2 x C2 fields: those whose computed quaternion list splits
    auto rows = table1_all(parallel);
    for (const auto& r : rows) {
        if (decomposition_report(r) == Decomposition::A4)
            rep.admissible_c2c2.push_back(r.D);
        else
            rep.excluded_c2c2.push_back(r.D);
    }
    std::sort(rep.admissible_c2c2.begin(), rep.admissible_c2c2.end(), std::greater<>());
    std::sort(rep.excluded_c2c2.begin(), rep.excluded_c2c2.end(), std::greater<>());
    rep.excluded_c2c2.push_back(-340); // no curve exists at the exceptional field
    std::sort(rep.excluded_c2c2.begin(), rep.excluded_c2c2.end(), std::greater<>());

    if (rep.admissible_c2c2 != split_set_expected())
        throw VerificationError("classify_all: admissible set disagrees with reference");

    // product side: Q x Q, Q x M, M1 x M2 over class-number-1 fields
    rep.product_algebras.push_back({"QxQ", {}, ""});
    for (i64 D : rep.h1_discs) rep.product_algebras.push_back({"QxM", {D}, ""});
    for (size_t i = 0; i < rep.h1_discs.size(); ++i)
        for (size_t j = i + 1; j < rep.h1_discs.size(); ++j)
            rep.product_algebras.push_back({"M1xM2", {rep.h1_discs[i], rep.h1_discs[j]}, ""});

    // matrix side: M2(Q) and M2(M) over h = 1, C2, and admissible C2 x C2
    rep.matrix_algebras.push_back({"M2(Q)", {}, ""});
    for (i64 D : rep.h1_discs) rep.matrix_algebras.push_back({"M2(M)", {D}, "1"});
    for (i64 D : rep.c2_discs) rep.matrix_algebras.push_back({"M2(M)", {D}, "2"});
    for (i64 D : rep.admissible_c2c2) rep.matrix_algebras.push_back({"M2(M)", {D}, "2x2"});

    if (rep.product_algebras.size() != 46 || rep.matrix_algebras.size() != 46)
        throw VerificationError("classify_all: census does not total 92");
    return rep;
}

} // namespace qsplit
