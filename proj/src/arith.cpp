#include "qsplit/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qsplit {

i64 RamifiedSet::discriminant() const {
    i64 d = 1;
    for (i64 p : finite_places) d *= p;
    return d;
}

i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    i64 r = (i64)std::llround(std::sqrt((double)n));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(i64 n, i64* root) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    n = std::labs(n);
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int kronecker_symbol(i64 a, i64 n) {
    if (n == 0) throw std::invalid_argument("kronecker_symbol: n = 0");
    int s = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) s = -s;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        while (n % 2 == 0) {
            n /= 2;
            i64 r = ((a % 8) + 8) % 8;
            if (r == 3 || r == 5) s = -s;
        }
    }
    // now n odd positive; standard Jacobi with reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) s = -s;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) s = -s;
        a %= n;
    }
    return n == 1 ? s : 0;
}

i64 squarefree_part(i64 r) {
    if (r == 0) throw std::invalid_argument("squarefree_part(0)");
    i64 s = r < 0 ? -1 : 1;
    for (auto [p, e] : factorize(r))
        if (e % 2) s *= p;
    return s;
}

i64 squarefree_part(const mpq_class& r) {
    if (r == 0) throw std::invalid_argument("squarefree_part(0)");
    // num/den have the same square class as num*den
    mpz_class prod = r.get_num() * r.get_den();
    if (!prod.fits_slong_p())
        throw std::invalid_argument("squarefree_part: operand too large");
    return squarefree_part((i64)prod.get_si());
}

namespace {

int hilbert_odd_p(i64 a, i64 b, i64 p) {
    // a, b squarefree, p odd prime
    int alpha = a % p == 0 ? 1 : 0;
    int beta = b % p == 0 ? 1 : 0;
    i64 u = alpha ? a / p : a;
    i64 w = beta ? b / p : b;
    int s = 1;
    if (alpha && beta && ((p - 1) / 2) % 2) s = -s;
    if (beta && kronecker_symbol(u, p) == -1) s = -s;
    if (alpha && kronecker_symbol(w, p) == -1) s = -s;
    return s;
}

int hilbert_two(i64 a, i64 b) {
    // Exhaustive solvability of z^2 = a x^2 + b y^2 mod 64 with some odd
    // coordinate; for squarefree a,b a primitive solution mod 64 lifts to Q_2.
    bool any_root[64] = {}, odd_root[64] = {};
    for (i64 z = 0; z < 64; ++z) {
        i64 r = (z * z) % 64;
        any_root[r] = true;
        if (z & 1) odd_root[r] = true;
    }
    i64 am = ((a % 64) + 64) % 64, bm = ((b % 64) + 64) % 64;
    for (i64 x = 0; x < 64; ++x)
        for (i64 y = 0; y < 64; ++y) {
            i64 r = (am * x * x + bm * y * y) % 64;
            if ((x | y) & 1 ? any_root[r] : odd_root[r]) return 1;
        }
    return -1;
}

} // namespace

int hilbert_symbol(i64 a, i64 b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    a = squarefree_part(a);
    b = squarefree_part(b);
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    if (v.p == 2) return hilbert_two(a, b);
    if (!is_prime(v.p)) throw std::invalid_argument("hilbert_symbol: invalid place");
    return hilbert_odd_p(a, b, v.p);
}

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v) {
    return hilbert_symbol(squarefree_part(a), squarefree_part(b), v);
}

RamifiedSet quaternion_ramification(i64 a, i64 b) {
    if (a == 0 || b == 0) throw std::invalid_argument("quaternion_ramification: zero");
    a = squarefree_part(a);
    b = squarefree_part(b);
    std::vector<i64> places{2};
    for (auto [p, e] : factorize(a))
        places.push_back(p);
    for (auto [p, e] : factorize(b))
        places.push_back(p);
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());

    RamifiedSet out;
    for (i64 p : places)
        if (hilbert_symbol(a, b, Place::at(p)) == -1) out.finite_places.push_back(p);
    out.infinite_ramified = hilbert_symbol(a, b, Place::infinity()) == -1;
    size_t count = out.finite_places.size() + (out.infinite_ramified ? 1 : 0);
    if (count % 2) throw std::runtime_error("quaternion_ramification: parity violated");
    return out;
}

std::optional<std::pair<i64, i64>> cornacchia(i64 d, i64 m, bool four_m) {
    if (d <= 0 || m <= 0) throw std::invalid_argument("cornacchia: nonpositive input");
    i64 rhs = four_m ? 4 * m : m;
    for (i64 y = 0; d * y * y <= rhs; ++y) {
        i64 x;
        if (is_square(rhs - d * y * y, &x)) return std::make_pair(x, y);
    }
    return std::nullopt;
}

bool is_fundamental_discriminant(i64 D) {
    if (D == 1 || D == 0) return false;
    i64 r = ((D % 4) + 4) % 4;
    auto squarefree = [](i64 n) {
        for (auto [p, e] : factorize(n))
            if (e > 1) return false;
        return true;
    };
    if (r == 1) return squarefree(D);
    if (r == 0) {
        i64 m = D / 4;
        i64 mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && squarefree(m);
    }
    return false;
}

std::vector<i64> prime_discriminant_factorization(i64 D) {
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument("prime_discriminant_factorization: non-fundamental");
    std::vector<i64> out;
    i64 odd_prod = 1;
    for (auto [p, e] : factorize(D)) {
        if (p == 2) continue;
        i64 d = (p % 4 == 1) ? p : -p;
        out.push_back(d);
        odd_prod *= d;
    }
    i64 two_part = D / odd_prod;
    if (two_part != 1) {
        if (two_part != -4 && two_part != 8 && two_part != -8)
            throw std::runtime_error("prime_discriminant_factorization: bad 2-part");
        out.push_back(two_part);
    }
    std::sort(out.begin(), out.end(),
              [](i64 x, i64 y) { return std::labs(x) < std::labs(y); });
    return out;
}

} // namespace qsplit
