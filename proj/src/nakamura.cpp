#include "qsplit/nakamura.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsplit {

Biquadratic Biquadratic::from_pair(i64 n1, i64 n2) {
    Biquadratic b;
    b.classes = {squarefree_part(n1), squarefree_part(n2),
                 squarefree_part(n1 * n2)};
    std::sort(b.classes.begin(), b.classes.end(), [](i64 x, i64 y) {
        return std::pair(x >= 0, std::labs(x)) < std::pair(y >= 0, std::labs(y));
    });
    return b;
}

std::vector<i64> GrossClassResult::quaternion_discs_sorted() const {
    std::vector<i64> out;
    for (const auto& q : quaternions) out.push_back(q.discriminant());
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<i64, i64> choose_primes(i64 D, const std::set<i64>& avoid, int skip) {
    const i64 limit = 10000;
    i64 first = 0;
    std::array<int, 3> first_vec{};
    int skipped = 0;
    for (i64 p = 3; p < limit; ++p) {
        if (!is_prime(p) || avoid.count(p) || (2 * D) % p == 0) continue;
        if (kronecker_symbol(D, p) != 1) continue;
        auto v = artin_vector(D, p);
        if (v == std::array<int, 3>{1, 1, 1}) continue; // principal class
        if (skipped < skip) { ++skipped; continue; }
        if (first == 0) {
            first = p;
            first_vec = v;
            continue;
        }
        if (v != first_vec) return {first, p};
    }
    throw std::runtime_error("choose_primes: exhausted the prime scan");
}

namespace {

int vector_to_mask(const std::array<int, 3>& v) {
    int mask = 0;
    for (int i = 0; i < 3; ++i)
        if (v[i] == -1) mask |= 1 << i;
    return mask;
}

void require_scope(i64 D) {
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw OutOfScopeError("not a negative fundamental discriminant");
    ClassGroup G = class_group(D);
    if (!G.is_c2c2()) {
        std::string desc = G.is_trivial() ? "trivial" : "C";
        if (!G.is_trivial()) {
            for (size_t i = 0; i < G.structure.size(); ++i) {
                if (i) desc += " x C";
                desc += std::to_string(G.structure[i]);
            }
        }
        throw OutOfScopeError("class group " + desc + " out of scope");
    }
    if (is_exceptional(D)) throw OutOfScopeError("exceptional discriminant");
}

} // namespace

DecompositionFields decomposition_fields(i64 D, i64 p) {
    GenusData gd = genus_data(D);
    MQField H = make_mq_field({gd.radicands[0], gd.radicands[1], gd.radicands[2]});
    DecompositionFields out;
    out.sigma_mask = vector_to_mask(artin_vector(D, p));
    if (out.sigma_mask == 0)
        throw std::invalid_argument("decomposition_fields: principal-class prime");
    int idx = 0;
    for (int S = 1; S < 8; ++S) {
        int bits = 0;
        for (int i = 0; i < 3; ++i)
            if (S & out.sigma_mask & (1 << i)) ++bits;
        if (bits % 2) continue; // sigma moves b_S
        i64 r = H.subset_class(S);
        out.L_radicands[idx++] = r;
        if (r > 0) {
            out.F_radicand = r;
            out.F_mask = S;
        }
    }
    if (idx != 3 || out.F_radicand == 0)
        throw std::runtime_error("decomposition_fields: unexpected fixed-field shape");
    return out;
}

GrossClassResult compute_all(i64 D, const ComputeOptions& opts) {
    require_scope(D);
    GenusData gd = genus_data(D);
    MQField H = make_mq_field({gd.radicands[0], gd.radicands[1], gd.radicands[2]});

    // the quadratic extension k = H(sqrt(delta)); M is fixed by the
    // sign vectors of even weight on the full radicand product
    RelQuadExt k = find_delta(H, 0b111, opts.delta_bound, opts.delta_skip);

    FiniteCharacter base = eta0(D);
    auto [w1, w2] = w_generators(D);
    if (character_parity(base) != -1)
        throw std::runtime_error("compute_all: eta0 must be odd");
    if (character_parity(w1) != 1 || character_parity(w2) != 1)
        throw std::runtime_error("compute_all: W-generators must be even");

    std::set<i64> avoid;
    for (auto [p, e] : factorize(2 * D)) avoid.insert(p);
    for (i64 p : k_support(k, D)) avoid.insert(p);

    auto [p1, p2] = choose_primes(D, avoid, opts.prime_skip);

    GrossClassResult res;
    res.D = D;
    res.primes = {p1, p2};
    res.delta = DeltaInfo{k.delta_subfield, k.delta_u, k.delta_v};

    // generators of p_i^2 for the chosen split primes
    std::array<QElement, 2>& alphas = res.alphas;
    std::array<i64, 2> ps{p1, p2};
    for (int i = 0; i < 2; ++i) {
        QIdeal P = prime_above(D, ps[i]).primary;
        auto alpha = principal_generator(ideal_pow(P, 2));
        if (!alpha) throw std::runtime_error("compute_all: p^2 not principal");
        alphas[i] = *alpha;
    }

    // decomposition data per prime (independent of the character)
    std::array<DecompositionFields, 2> dec{decomposition_fields(D, p1),
                                           decomposition_fields(D, p2)};
    std::array<bool, 2> is_c4{}, is_abelian{};
    for (int i = 0; i < 2; ++i) {
        is_c4[i] = gal_structure_over_L(k, dec[i].sigma_mask) == GalQuartic::C4;
        is_abelian[i] = is_abelian_over_F(k, dec[i].F_mask);
    }

    const std::array<std::pair<int, int>, 4> ab{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    for (int idx = 0; idx < 4; ++idx) {
        auto [a, b] = ab[idx];
        FiniteCharacter eta = base;
        if (a) eta = character_mul(eta, w1);
        if (b) eta = character_mul(eta, w2);

        std::array<i64, 2> n{};
        for (int i = 0; i < 2; ++i) n[i] = n_value(eta, ps[i], alphas[i]);
        res.biquadratics[idx] = Biquadratic::from_pair(n[0], n[1]);
        res.n_values[idx] = n;

        std::array<i64, 2> t{};
        for (int i = 0; i < 2; ++i) {
            if (is_c4[i])
                t[i] = is_abelian[i] ? -n[i] : squarefree_part(-D * n[i]);
            else
                t[i] = is_abelian[i] ? n[i] : squarefree_part(D * n[i]);
        }
        res.quaternions[idx] = Quaternion{quaternion_ramification(t[0], t[1])};
        res.t_values[idx] = t;
    }
    return res;
}

Decomposition decomposition_report(const GrossClassResult& r) {
    for (const auto& q : r.quaternions)
        if (q.ram.split()) return Decomposition::A4;
    return Decomposition::W2;
}

bool row_matches_expected(const GrossClassResult& r, const Table1Row& expected) {
    if (r.D != expected.D) return false;
    std::vector<Biquadratic> got(r.biquadratics.begin(), r.biquadratics.end());
    std::vector<Biquadratic> want;
    for (const auto& pr : expected.biquadratic_pairs)
        want.push_back(Biquadratic::from_pair(pr[0], pr[1]));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) return false;
    std::vector<i64> qgot = r.quaternion_discs_sorted();
    std::vector<i64> qwant(expected.quaternion_discs.begin(), expected.quaternion_discs.end());
    std::sort(qwant.begin(), qwant.end());
    return qgot == qwant;
}

std::vector<GrossClassResult> table1_all(bool parallel, const ComputeOptions& opts) {
    const auto& discs = scoped_discriminants();
    std::vector<GrossClassResult> out(discs.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (size_t i = 0; i < discs.size(); ++i) out[i] = compute_all(discs[i], opts);
    } else {
        for (size_t i = 0; i < discs.size(); ++i) out[i] = compute_all(discs[i], opts);
    }
    return out;
}

} // namespace qsplit
