#include "qsplit/group.hpp"

#include <stdexcept>

namespace qsplit {

int SmallGroup::inv(int i) const {
    for (int j = 0; j < n; ++j)
        if (mul(i, j) == identity) return j;
    throw std::runtime_error("SmallGroup: no inverse");
}

int SmallGroup::order_of(int i) const {
    int x = i, o = 1;
    while (x != identity) {
        x = mul(x, i);
        ++o;
        if (o > n) throw std::runtime_error("SmallGroup: order overflow");
    }
    return o;
}

SmallGroup make_group(int n, std::vector<int> table) {
    if (n < 1 || (int)table.size() != n * n)
        throw std::invalid_argument("make_group: bad table size");
    SmallGroup G;
    G.n = n;
    G.table = std::move(table);
    for (int v : G.table)
        if (v < 0 || v >= n) throw std::invalid_argument("make_group: entry out of range");
    // identity
    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (G.mul(i, j) != j || G.mul(j, i) != j) { ok = false; break; }
        if (ok) e = i;
    }
    if (e < 0) throw std::invalid_argument("make_group: no identity");
    G.identity = e;
    // associativity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (G.mul(G.mul(i, j), k) != G.mul(i, G.mul(j, k)))
                    throw std::invalid_argument("make_group: not associative");
    // inverses
    for (int i = 0; i < n; ++i) G.inv(i);
    return G;
}

SmallGroup cyclic_group(int n) {
    std::vector<int> t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
    return make_group(n, std::move(t));
}

SmallGroup elementary_abelian_2(int k) {
    int n = 1 << k;
    std::vector<int> t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i * n + j] = i ^ j;
    return make_group(n, std::move(t));
}

} // namespace qsplit
