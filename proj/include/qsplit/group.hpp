#ifndef QSPLIT_GROUP_HPP
#define QSPLIT_GROUP_HPP

#include <vector>

namespace qsplit {

/* Finite group of small order given by its multiplication table; identity,
 * associativity and inverses are checked on construction. */
struct SmallGroup {
    int n = 1;
    std::vector<int> table; // table[i * n + j] = i * j
    int identity = 0;

    int mul(int i, int j) const { return table[i * n + j]; }
    int inv(int i) const;
    int order_of(int i) const;
};

SmallGroup make_group(int n, std::vector<int> table);
SmallGroup cyclic_group(int n);
/* (C2)^k with xor multiplication on masks. */
SmallGroup elementary_abelian_2(int k);

} // namespace qsplit

#endif
