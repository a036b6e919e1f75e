#include "qsplit/forms.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsplit {

bool is_reduced(const QuadForm& f) {
    if (std::labs(f.b) > f.a || f.a > f.c) return false;
    if ((std::labs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

QuadForm reduce(QuadForm f) {
    if (f.a <= 0 || f.discriminant() >= 0)
        throw std::invalid_argument("reduce: form not positive definite");
    const i64 D = f.discriminant();
    while (!is_reduced(f)) {
        // normalize b into (-a, a]
        if (f.b > f.a || f.b <= -f.a) {
            i64 k = (f.b + f.a) / (2 * f.a);
            if (f.b + f.a < 0 && (f.b + f.a) % (2 * f.a) != 0) --k;
            f.b -= 2 * k * f.a;
            f.c = (f.b * f.b - D) / (4 * f.a);
        }
        if (f.a > f.c) {
            f = QuadForm{f.c, -f.b, f.a};
        } else if (f.a == f.c && f.b < 0) {
            f.b = -f.b;
        } else if (f.b == -f.a) {
            f.b = f.a;
        }
    }
    return f;
}

QuadForm principal_form(i64 D) {
    i64 r = ((D % 4) + 4) % 4;
    if (r == 0) return QuadForm{1, 0, -D / 4};
    if (r == 1) return QuadForm{1, 1, (1 - D) / 4};
    throw std::invalid_argument("principal_form: not a discriminant");
}

QuadForm form_inverse(const QuadForm& f) { return reduce(QuadForm{f.a, -f.b, f.c}); }

namespace {

i64 eval_form(const QuadForm& f, i64 x, i64 y) {
    return f.a * x * x + f.b * x * y + f.c * y * y;
}

// Equivalent form with prescribed coprime (x0, y0) as first column of the
// unimodular change of variables; new leading coefficient is f(x0, y0).
QuadForm transform_to(const QuadForm& f, i64 x0, i64 y0) {
    i64 g, u, v;
    // u*x0 + v*y0 = 1
    {
        i64 old_r = x0, r = y0, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            i64 q = old_r / r;
            std::swap(old_r -= q * r, r);
            std::swap(old_s -= q * s, s);
            std::swap(old_t -= q * t, t);
        }
        g = old_r; u = old_s; v = old_t;
        if (g < 0) { g = -g; u = -u; v = -v; }
    }
    if (g != 1) throw std::invalid_argument("transform_to: not coprime");
    // matrix [[x0, -v],[y0, u]] has determinant x0*u + y0*v = 1
    i64 p = x0, q = -v, r = y0, s = u;
    QuadForm out;
    out.a = eval_form(f, p, r);
    out.c = eval_form(f, q, s);
    out.b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
    return out;
}

// CRT for x = r1 mod m1, x = r2 mod m2 with gcd | r1 - r2.
i64 crt(i64 r1, i64 m1, i64 r2, i64 m2) {
    i64 g = std::gcd(m1, m2);
    if ((r1 - r2) % g != 0) throw std::runtime_error("crt: incompatible");
    i64 l = m1 / g * m2;
    // solve r1 + m1*t = r2 mod m2
    i64 m1g = m1 / g, m2g = m2 / g, diff = (r2 - r1) / g % m2g;
    // inverse of m1g mod m2g
    i64 inv = 0;
    {
        i64 old_r = m1g % m2g, r = m2g, old_s = 1, s = 0;
        while (r != 0) {
            i64 qd = old_r / r;
            std::swap(old_r -= qd * r, r);
            std::swap(old_s -= qd * s, s);
        }
        inv = old_s;
    }
    i64 t = (diff * inv) % m2g;
    i64 x = (r1 + m1 * t) % l;
    if (x < 0) x += l;
    return x;
}

} // namespace

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    const i64 D = f.discriminant();
    if (D != g.discriminant())
        throw std::invalid_argument("compose: discriminants differ");
    QuadForm f1 = reduce(f);
    // replace g by an equivalent form whose leading coefficient is coprime to a1
    QuadForm g1{};
    bool found = false;
    for (i64 box = 1; box <= 64 && !found; box *= 2) {
        for (i64 x0 = 0; x0 <= box && !found; ++x0)
            for (i64 y0 = -box; y0 <= box && !found; ++y0) {
                if (std::gcd(x0, y0) != 1) continue;
                i64 val = eval_form(g, x0, y0);
                if (val > 0 && std::gcd(val, f1.a) == 1) {
                    g1 = transform_to(g, x0, y0);
                    found = true;
                }
            }
    }
    if (!found) throw std::runtime_error("compose: no coprime representative");

    // concordant forms: B = b1 mod 2a1, B = b2 mod 2a2
    i64 B = crt(((f1.b % (2 * f1.a)) + 2 * f1.a) % (2 * f1.a), 2 * f1.a,
                ((g1.b % (2 * g1.a)) + 2 * g1.a) % (2 * g1.a), 2 * g1.a);
    i64 a3 = f1.a * g1.a;
    if ((B * B - D) % (4 * a3) != 0) throw std::runtime_error("compose: concordance failed");
    return reduce(QuadForm{a3, B, (B * B - D) / (4 * a3)});
}

i64 form_order(const QuadForm& f) {
    const QuadForm e = reduce(principal_form(f.discriminant()));
    QuadForm x = reduce(f);
    i64 n = 1;
    while (x != e) {
        x = compose(x, f);
        ++n;
        if (n > 100000) throw std::runtime_error("form_order: runaway");
    }
    return n;
}

ClassGroup class_group(i64 D) {
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw std::invalid_argument("class_group: D must be fundamental and negative");
    ClassGroup G;
    G.D = D;
    for (i64 b = (D % 2 == 0) ? 0 : 1; b * b <= -D / 3; b += 2) {
        i64 m = (b * b - D) / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= m; ++a) {
            if (m % a) continue;
            i64 c = m / a;
            G.elements.push_back(QuadForm{a, b, c});
            if (b != 0 && b != a && a != c) G.elements.push_back(QuadForm{a, -b, c});
        }
    }
    std::sort(G.elements.begin(), G.elements.end());

    const i64 h = G.order();
    // elementary divisors from the counts N_d = #{x : x^d = 1}
    std::map<i64, i64> order_of;
    for (const auto& f : G.elements) order_of[form_order(f)]++;
    std::map<i64, std::vector<int>> partitions; // prime -> exponent partition
    for (auto [p, e] : factorize(h)) {
        std::vector<int> part;
        // N_{p^k} = p^{sum min(k, lambda_i)}
        auto count_killed = [&](i64 d) {
            i64 n = 0;
            for (auto [o, cnt] : order_of)
                if (d % o == 0) n += cnt;
            return n;
        };
        std::vector<int> sums; // log_p N_{p^k} for k = 0..e
        i64 pk = 1;
        for (int k = 0; k <= e; ++k) {
            i64 n = count_killed(pk);
            int lg = 0;
            while (n > 1) { n /= p; ++lg; }
            sums.push_back(lg);
            pk *= p;
        }
        // number of parts >= k equals sums[k] - sums[k-1]
        for (int k = 1; k <= e; ++k) {
            int parts_ge_k = sums[k] - sums[k - 1];
            while ((int)part.size() < parts_ge_k) part.push_back(0);
            for (int i = 0; i < parts_ge_k; ++i) part[i] = k;
        }
        std::sort(part.begin(), part.end(), std::greater<>());
        partitions[p] = part;
    }
    size_t rank = 0;
    for (auto& [p, part] : partitions) rank = std::max(rank, part.size());
    G.structure.assign(rank, 1);
    for (auto& [p, part] : partitions)
        for (size_t i = 0; i < part.size(); ++i) {
            i64 pe = 1;
            for (int k = 0; k < part[i]; ++k) pe *= p;
            G.structure[rank - 1 - i] *= pe; // largest part goes last
        }

    // greedy generators: extend the generated subgroup until it is everything
    std::set<QuadForm> span{reduce(principal_form(D))};
    while ((i64)span.size() < h) {
        const QuadForm* best = nullptr;
        i64 best_order = 0;
        for (const auto& f : G.elements) {
            if (span.count(f)) continue;
            i64 o = form_order(f);
            if (o > best_order) { best_order = o; best = &f; }
        }
        G.generators.push_back(*best);
        std::set<QuadForm> next;
        for (const auto& s : span) {
            QuadForm x = s;
            for (i64 k = 0; k < best_order; ++k) {
                next.insert(x);
                x = compose(x, *best);
            }
        }
        span = std::move(next);
    }
    return G;
}

bool is_exceptional(i64 D) {
    if (D >= 0 || !is_fundamental_discriminant(D)) return false;
    if (D % 4 != 0) return false;
    i64 m = -D / 4;
    if (m <= 1 || m % 2 == 0) return false;
    for (auto [p, e] : factorize(m))
        if (p % 4 != 1) return false;
    return true;
}

std::vector<i64> discriminants_with_class_group(GroupShape target, i64 bound,
                                                bool parallel) {
    auto matches = [target](i64 D) {
        ClassGroup G = class_group(D);
        switch (target) {
            case GroupShape::Trivial: return G.is_trivial();
            case GroupShape::C2: return G.is_c2();
            case GroupShape::C2xC2: return G.is_c2c2();
        }
        return false;
    };
    std::vector<i64> candidates;
    for (i64 D = -3; D >= -bound; --D)
        if (is_fundamental_discriminant(D)) candidates.push_back(D);

    std::vector<char> hit(candidates.size(), 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (size_t i = 0; i < candidates.size(); ++i) hit[i] = matches(candidates[i]);
    } else {
        for (size_t i = 0; i < candidates.size(); ++i) hit[i] = matches(candidates[i]);
    }
    std::vector<i64> out;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (hit[i]) out.push_back(candidates[i]);
    return out; // candidates were generated ascending by |D|
}

GenusData genus_data(i64 D) {
    ClassGroup G = class_group(D);
    if (!G.is_c2c2()) throw std::invalid_argument("genus_data: class group is not C2 x C2");
    auto discs = prime_discriminant_factorization(D);
    if (discs.size() != 3) throw std::runtime_error("genus_data: expected three prime discriminants");
    GenusData out;
    for (int i = 0; i < 3; ++i) {
        out.prime_discs[i] = discs[i];
        out.radicands[i] = squarefree_part(discs[i]);
    }
    return out;
}

std::array<int, 3> artin_vector(i64 D, i64 p) {
    if (!is_prime(p) || (2 * D) % p == 0 || kronecker_symbol(D, p) != 1)
        throw std::invalid_argument("artin_vector: p must be split and unramified");
    auto discs = prime_discriminant_factorization(D);
    if (discs.size() != 3) throw std::invalid_argument("artin_vector: D is not a three-factor discriminant");
    std::array<int, 3> v{};
    for (int i = 0; i < 3; ++i) v[i] = kronecker_symbol(discs[i], p);
    if (v[0] * v[1] * v[2] != 1) throw std::runtime_error("artin_vector: sign product violated");
    return v;
}

} // namespace qsplit
