#include "qsplit/multiquad.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace qsplit {

i64 MQField::subset_class(int mask) const {
    i64 prod = 1;
    for (int i = 0; i < rank; ++i)
        if (mask & (1 << i)) prod *= radicands[i];
    return squarefree_part(prod);
}

std::vector<i64> MQField::rational_classes() const {
    std::vector<i64> out;
    for (int mask = 0; mask < dim(); ++mask) out.push_back(subset_class(mask));
    return out;
}

std::optional<int> MQField::mask_of_class(i64 m) const {
    i64 s = squarefree_part(m);
    for (int mask = 0; mask < dim(); ++mask)
        if (subset_class(mask) == s) return mask;
    return std::nullopt;
}

MQField make_mq_field(const std::vector<i64>& radicands) {
    if (radicands.empty() || radicands.size() > 3)
        throw std::invalid_argument("make_mq_field: rank must be 1..3");
    MQField F;
    F.rank = (int)radicands.size();
    for (size_t i = 0; i < radicands.size(); ++i) {
        i64 m = radicands[i];
        if (m == 0 || m == 1 || squarefree_part(m) != m)
            throw std::invalid_argument("make_mq_field: radicands must be squarefree != 0, 1");
        F.radicands[i] = m;
    }
    // multiplicative independence modulo squares
    std::set<i64> classes;
    for (int mask = 0; mask < F.dim(); ++mask) classes.insert(F.subset_class(mask));
    if ((int)classes.size() != F.dim())
        throw std::invalid_argument("make_mq_field: radicands not independent mod squares");
    return F;
}

bool MQElement::is_zero() const {
    for (int s = 0; s < field.dim(); ++s)
        if (coords[s] != 0) return false;
    return true;
}

bool MQElement::is_rational() const {
    for (int s = 1; s < field.dim(); ++s)
        if (coords[s] != 0) return false;
    return true;
}

MQElement mq_zero(const MQField& F) { return MQElement{F, {}}; }

MQElement mq_rational(const MQField& F, const mpq_class& r) {
    MQElement e{F, {}};
    e.coords[0] = r;
    return e;
}

MQElement mq_sqrt_radicand(const MQField& F, i64 m) {
    auto mask = F.mask_of_class(m);
    if (!mask) throw std::invalid_argument("mq_sqrt_radicand: class not represented");
    // b_S^2 = prod m_i = m * c^2, so sqrt(m) = b_S / c
    i64 prod = 1;
    for (int i = 0; i < F.rank; ++i)
        if (*mask & (1 << i)) prod *= F.radicands[i];
    i64 c2 = prod / squarefree_part(m);
    i64 c;
    if (!is_square(c2, &c)) throw std::runtime_error("mq_sqrt_radicand: cofactor not square");
    MQElement e{F, {}};
    e.coords[*mask] = mpq_class(1, c);
    return e;
}

namespace {

void check_same_field(const MQElement& a, const MQElement& b) {
    if (!(a.field == b.field)) throw std::invalid_argument("MQElement: field mismatch");
}

} // namespace

MQElement mq_add(const MQElement& a, const MQElement& b) {
    check_same_field(a, b);
    MQElement out{a.field, {}};
    for (int s = 0; s < a.field.dim(); ++s) out.coords[s] = a.coords[s] + b.coords[s];
    return out;
}

MQElement mq_sub(const MQElement& a, const MQElement& b) {
    check_same_field(a, b);
    MQElement out{a.field, {}};
    for (int s = 0; s < a.field.dim(); ++s) out.coords[s] = a.coords[s] - b.coords[s];
    return out;
}

MQElement mq_mul(const MQElement& a, const MQElement& b) {
    check_same_field(a, b);
    const MQField& F = a.field;
    MQElement out{F, {}};
    for (int s = 0; s < F.dim(); ++s) {
        if (a.coords[s] == 0) continue;
        for (int t = 0; t < F.dim(); ++t) {
            if (b.coords[t] == 0) continue;
            i64 factor = 1;
            for (int i = 0; i < F.rank; ++i)
                if (s & t & (1 << i)) factor *= F.radicands[i];
            out.coords[s ^ t] += a.coords[s] * b.coords[t] * factor;
        }
    }
    return out;
}

MQElement mq_mul(const MQElement& a, const mpq_class& r) {
    MQElement out{a.field, {}};
    for (int s = 0; s < a.field.dim(); ++s) out.coords[s] = a.coords[s] * r;
    return out;
}

MQElement mq_neg(const MQElement& a) { return mq_mul(a, mpq_class(-1)); }

MQElement mq_galois(const MQElement& a, int eps) {
    MQElement out = a;
    for (int s = 0; s < a.field.dim(); ++s) {
        int bits = 0;
        for (int i = 0; i < a.field.rank; ++i)
            if (s & eps & (1 << i)) ++bits;
        if (bits & 1) out.coords[s] = -out.coords[s];
    }
    return out;
}

mpq_class mq_full_norm(const MQElement& a) {
    MQElement prod = mq_rational(a.field, 1);
    for (int eps = 0; eps < a.field.dim(); ++eps) prod = mq_mul(prod, mq_galois(a, eps));
    if (!prod.is_rational()) throw std::runtime_error("mq_full_norm: norm not rational");
    return prod.coords[0];
}

MQElement mq_inv(const MQElement& a) {
    if (a.is_zero()) throw std::invalid_argument("mq_inv: zero element");
    MQElement prod = mq_rational(a.field, 1);
    for (int eps = 1; eps < a.field.dim(); ++eps) prod = mq_mul(prod, mq_galois(a, eps));
    mpq_class n = mq_full_norm(a);
    if (n == 0) throw std::runtime_error("mq_inv: zero norm for nonzero element");
    return mq_mul(prod, mpq_class(1) / n);
}

MQElement mq_div(const MQElement& a, const MQElement& b) { return mq_mul(a, mq_inv(b)); }

namespace {

bool mpq_is_square(const mpq_class& r, mpq_class* root) {
    if (r < 0) return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return false;
    if (root) {
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
        *root = mpq_class(n, d);
    }
    return true;
}

// coords restricted to masks without the top radicand bit
MQElement lower_part(const MQField& sub, const MQElement& x, int top_bit, bool high) {
    MQElement out{sub, {}};
    for (int s = 0; s < (1 << sub.rank); ++s)
        out.coords[s] = x.coords[high ? (s | top_bit) : s];
    return out;
}

std::optional<MQElement> mq_sqrt_raw(const MQElement& beta) {
    const MQField& F = beta.field;
    if (beta.is_zero()) return mq_zero(F);
    if (F.rank == 0) throw std::logic_error("mq_sqrt_raw: rank 0");

    // descent: write beta = u + v sqrt(m_top) over the subfield
    MQField sub;
    sub.rank = F.rank - 1;
    for (int i = 0; i < sub.rank; ++i) sub.radicands[i] = F.radicands[i];
    const int top = 1 << (F.rank - 1);
    const i64 m = F.radicands[F.rank - 1];

    auto sub_sqrt = [&](const MQElement& x) -> std::optional<MQElement> {
        if (sub.rank == 0) {
            mpq_class root;
            if (!mpq_is_square(x.coords[0], &root)) return std::nullopt;
            return mq_rational(sub, root);
        }
        return mq_sqrt_raw(x);
    };
    auto lift = [&](const MQElement& lo, const MQElement& hi) {
        MQElement out{F, {}};
        for (int s = 0; s < (1 << sub.rank); ++s) {
            out.coords[s] = lo.coords[s];
            out.coords[s | top] = hi.coords[s];
        }
        return out;
    };

    MQElement u = lower_part(sub, beta, top, false);
    MQElement v = lower_part(sub, beta, top, true);

    if (v.is_zero()) {
        // gamma in the subfield, or gamma = t sqrt(m)
        if (auto s = sub_sqrt(u)) return lift(*s, mq_zero(sub));
        MQElement um = mq_mul(u, mpq_class(1) / m);
        if (auto t = sub_sqrt(um)) return lift(mq_zero(sub), *t);
        return std::nullopt;
    }

    // gamma = s + t sqrt(m): s^2 + m t^2 = u, 2 s t = v
    MQElement disc = mq_sub(mq_mul(u, u), mq_mul(mq_mul(v, v), mpq_class(m)));
    auto droot = sub_sqrt(disc);
    if (!droot) return std::nullopt;
    for (int sign : {+1, -1}) {
        MQElement s2 = mq_mul(mq_add(u, mq_mul(*droot, mpq_class(sign))), mpq_class(1) / 2);
        if (s2.is_zero()) continue;
        auto s = sub_sqrt(s2);
        if (!s) continue;
        MQElement t = mq_mul(v, mq_inv(mq_mul(*s, mpq_class(2))));
        MQElement cand = lift(*s, t);
        if (mq_mul(cand, cand) == beta) return cand;
    }
    return std::nullopt;
}

} // namespace

std::optional<MQElement> mq_sqrt(const MQElement& beta) {
    auto r = mq_sqrt_raw(beta);
    if (!r) return std::nullopt;
    // normalize: first nonzero coordinate positive
    for (int s = 0; s < r->field.dim(); ++s) {
        if (r->coords[s] == 0) continue;
        if (r->coords[s] < 0) *r = mq_neg(*r);
        break;
    }
    return r;
}

std::optional<RelQuadExt> make_rel_quad_ext(const MQField& H, const MQElement& delta) {
    if (delta.is_zero()) throw std::invalid_argument("make_rel_quad_ext: delta = 0");
    RelQuadExt k;
    k.H = H;
    k.delta = delta;
    const int n = H.dim();
    for (int eps = 0; eps < n; ++eps) {
        MQElement ratio = mq_div(mq_galois(delta, eps), delta);
        auto g = mq_sqrt(ratio);
        if (!g) return std::nullopt;
        k.gamma[eps] = *g;
    }
    // cocycle c(s,t) = gamma_s * s(gamma_t) / gamma_{st}; values must be +-1
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            MQElement val =
                mq_div(mq_mul(k.gamma[s], mq_galois(k.gamma[t], s)), k.gamma[s ^ t]);
            if (!val.is_rational())
                throw std::runtime_error("make_rel_quad_ext: cocycle value not rational");
            mpq_class r = val.coords[0];
            if (r != 1 && r != -1)
                throw std::runtime_error("make_rel_quad_ext: cocycle value not +-1");
            k.cocycle[s * 8 + t] = (int8_t)(r == 1 ? 1 : -1);
        }
    // 2-cocycle identity with trivial action on +-1
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                if (k.c(r ^ s, t) * k.c(r, s) != k.c(r, s ^ t) * k.c(s, t))
                    throw std::runtime_error("make_rel_quad_ext: cocycle identity violated");
    return k;
}

namespace {

bool symmetric_on_subgroup(const RelQuadExt& k, const std::vector<int>& sub) {
    for (int s : sub)
        for (int t : sub)
            if (k.c(s, t) != k.c(t, s)) return false;
    return true;
}

std::vector<int> fixing_subgroup(const MQField& F, int S_mask) {
    std::vector<int> out;
    for (int eps = 0; eps < F.dim(); ++eps) {
        int bits = 0;
        for (int i = 0; i < F.rank; ++i)
            if (eps & S_mask & (1 << i)) ++bits;
        if (bits % 2 == 0) out.push_back(eps);
    }
    return out;
}

} // namespace

RelQuadExt find_delta(const MQField& H, int M_mask, i64 bound, int skip) {
    // quadratic subfields ascending by (|m|, m)
    std::vector<i64> subs;
    for (int mask = 1; mask < H.dim(); ++mask) subs.push_back(H.subset_class(mask));
    std::sort(subs.begin(), subs.end(), [](i64 a, i64 b) {
        return std::pair(std::labs(a), a) < std::pair(std::labs(b), b);
    });
    const std::vector<i64> classes = H.rational_classes();
    const std::vector<int> gm = fixing_subgroup(H, M_mask);

    int hits = 0;
    for (i64 m : subs) {
        MQElement sqrt_m = mq_sqrt_radicand(H, m);
        for (i64 sum = 1; sum <= 2 * bound; ++sum) {
            for (i64 u = -std::min(sum - 1, bound); u <= std::min(sum - 1, bound); ++u) {
                i64 av = sum - std::labs(u);
                if (av > bound) continue;
                for (i64 v : {-av, av}) {
                    // (a) the relative norm must be a square in H
                    i64 n = squarefree_part(u * u - m * v * v);
                    if (std::find(classes.begin(), classes.end(), n) == classes.end())
                        continue;
                    // when n is 1 or the class of m, gamma lies in Q(sqrt(m))
                    // and the cocycle is symmetric on all of Gal(H/Q)
                    if (n == 1 || n == squarefree_part(m)) continue;

                    MQElement delta =
                        mq_add(mq_rational(H, mpq_class(u)), mq_mul(sqrt_m, mpq_class(v)));
                    // (b) reject delta = rational * square
                    bool rational_twist = false;
                    for (i64 cls : classes)
                        if (mq_sqrt(mq_mul(delta, mpq_class(cls))).has_value()) {
                            rational_twist = true;
                            break;
                        }
                    if (rational_twist) continue;

                    auto k = make_rel_quad_ext(H, delta);
                    if (!k)
                        throw std::runtime_error(
                            "find_delta: norm condition passed but extension not Galois");
                    // (c) k/M must be non-abelian
                    if (symmetric_on_subgroup(*k, gm)) continue;

                    if (hits++ < skip) continue;
                    k->delta_subfield = m;
                    k->delta_u = u;
                    k->delta_v = v;
                    return *k;
                }
            }
        }
    }
    throw DeltaSearchExhausted("find_delta: no admissible delta within bound");
}

GalQuartic gal_structure_over_L(const RelQuadExt& k, int sigma) {
    if (sigma <= 0 || sigma >= k.H.dim())
        throw std::invalid_argument("gal_structure_over_L: sigma must be a nontrivial character");
    return k.c(sigma, sigma) == -1 ? GalQuartic::C4 : GalQuartic::C2xC2;
}

bool is_abelian_over_F(const RelQuadExt& k, int S_F) {
    if (S_F <= 0 || S_F >= k.H.dim())
        throw std::invalid_argument("is_abelian_over_F: bad subfield mask");
    return symmetric_on_subgroup(k, fixing_subgroup(k.H, S_F));
}

std::vector<i64> k_support(const RelQuadExt& k, i64 D) {
    mpq_class n = mq_full_norm(k.delta);
    std::set<i64> primes{2};
    auto add = [&](const mpz_class& z) {
        mpz_class a = abs(z);
        if (!a.fits_slong_p()) throw std::runtime_error("k_support: norm too large");
        if (a != 0 && a != 1)
            for (auto [p, e] : factorize(a.get_si())) primes.insert(p);
    };
    add(mpz_class(std::labs(D)));
    add(n.get_num());
    add(n.get_den());
    return {primes.begin(), primes.end()};
}

} // namespace qsplit
