#ifndef QSPLIT_TEST_ORACLES_HPP
#define QSPLIT_TEST_ORACLES_HPP

// Independent oracles used by the tests; these must not share code with
// the implementation paths they check.

#include <cstdlib>
#include <set>
#include <vector>

#include "qsplit/arith.hpp"

namespace qsplit::oracle {

// quadratic residues modulo an odd prime by brute force
inline int legendre_brute(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    for (i64 x = 1; x < p; ++x)
        if ((x * x) % p == a) return 1;
    return -1;
}

// Dirichlet class number formula: h(D) = w/(2|D|) |sum chi_D(a) a|
inline i64 class_number_dirichlet(i64 D) {
    i64 w = D == -3 ? 6 : D == -4 ? 4 : 2;
    i64 sum = 0;
    for (i64 a = 1; a < -D; ++a) sum += kronecker_symbol(D, a) * a;
    return w * std::labs(sum) / (2 * -D);
}

// reduced-form count by a direct scan over (a, b, c)
inline i64 reduced_form_count(i64 D) {
    i64 count = 0;
    for (i64 a = 1; 4 * a * a <= -D * 4; ++a) {
        if (3 * a * a > -D) break;
        for (i64 b = -a; b <= a; ++b) {
            if ((b * b - D) % (4 * a) != 0) continue;
            i64 c = (b * b - D) / (4 * a);
            if (c < a) continue;
            if ((b < 0) && (std::labs(b) == a || a == c)) continue;
            ++count;
        }
    }
    return count;
}

} // namespace qsplit::oracle

#endif
