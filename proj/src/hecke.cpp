#include "qsplit/hecke.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace qsplit {

namespace {

void require_even_ramified(i64 D) {
    if (((D % 4) + 4) % 4 != 0)
        throw std::invalid_argument("2-adic character requires 2 ramified (4 | D)");
}

FiniteCharacter single(i64 D, LocalCharacter::Kind kind, i64 p) {
    FiniteCharacter chi;
    chi.D = D;
    chi.factors.push_back(LocalCharacter{kind, p});
    return chi;
}

/* Units of O_M / 8 O_M over the basis (1, sqrt(m)), m = D/4, with the
 * square classes labelled by exponents on the generator basis of the
 * paper's presentation of U_2/U_2^2. */
struct Unit2Table {
    i64 m = 0;
    bool m_odd = false;
    // coset id of each unit (a + b sqrt(m), key a*8+b), -1 for non-units
    std::array<int, 64> coset_of;
    // exponent triple of each coset id on the generator basis
    std::array<std::array<int, 3>, 8> exps_of;

    explicit Unit2Table(i64 D) {
        require_even_ramified(D);
        m = D / 4;
        m_odd = (std::abs(m) % 2) == 1;
        i64 mm = ((m % 8) + 8) % 8;

        auto mul = [mm](int u, int v) {
            i64 a1 = u / 8, b1 = u % 8, a2 = v / 8, b2 = v % 8;
            i64 a = (a1 * a2 + mm * b1 * b2) % 8, b = (a1 * b2 + a2 * b1) % 8;
            return (int)(a * 8 + b);
        };
        auto is_unit = [mm](int u) {
            i64 a = u / 8, b = u % 8;
            return ((a * a - mm * b * b) % 2 + 2) % 2 == 1;
        };

        std::vector<int> units, squares;
        std::array<bool, 64> is_sq{};
        for (int u = 0; u < 64; ++u)
            if (is_unit(u)) {
                units.push_back(u);
                int s = mul(u, u);
                if (!is_sq[s]) { is_sq[s] = true; squares.push_back(s); }
            }
        if (units.size() != 32 || squares.size() != 4)
            throw std::runtime_error("Unit2Table: unexpected unit group shape");

        coset_of.fill(-1);
        int next_id = 0;
        for (int u : units) {
            if (coset_of[u] != -1) continue;
            for (int s : squares) coset_of[mul(u, s)] = next_id;
            ++next_id;
        }
        if (next_id != 8) throw std::runtime_error("Unit2Table: expected 8 square classes");

        // generator basis: m odd: <sqrt(m), 3 - 2 sqrt(m), 5>;
        //                  m even: <1 + sqrt(m), -1, 5>
        std::array<int, 3> gens{};
        auto enc = [](i64 a, i64 b) {
            return (int)((((a % 8) + 8) % 8) * 8 + (((b % 8) + 8) % 8));
        };
        if (m_odd) {
            gens = {enc(0, 1), enc(3, -2), enc(5, 0)};
        } else {
            gens = {enc(1, 1), enc(-1, 0), enc(5, 0)};
        }
        std::array<int, 8> coset_of_word;
        coset_of_word.fill(-1);
        bool ok = true;
        for (int e = 0; e < 8; ++e) {
            int w = enc(1, 0);
            for (int i = 0; i < 3; ++i)
                if (e & (1 << i)) w = mul(w, gens[i]);
            int id = coset_of[w];
            if (id < 0 || coset_of_word[id] != -1) { ok = false; break; }
            coset_of_word[id] = e;
            exps_of[id] = {e & 1, (e >> 1) & 1, (e >> 2) & 1};
        }
        if (!ok)
            throw std::runtime_error("Unit2Table: generators not independent mod squares");
    }

    std::array<int, 3> exponents(const QElement& alpha) const {
        auto [a, b] = coords_over_sqrt_m(alpha);
        mpz_class am = a % 8, bm = b % 8;
        if (am < 0) am += 8;
        if (bm < 0) bm += 8;
        int key = (int)(am.get_si() * 8 + bm.get_si());
        int id = coset_of[key];
        if (id < 0) throw std::invalid_argument("eta2: element has even norm");
        return exps_of[id];
    }
};

const Unit2Table& unit2_table(i64 D) {
    static std::map<i64, Unit2Table> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(D);
    if (it == cache.end()) it = cache.emplace(D, Unit2Table(D)).first;
    return it->second;
}

} // namespace

FiniteCharacter eta_p(i64 D, i64 p) {
    if (p <= 2 || !is_prime(p) || D % p != 0)
        throw std::invalid_argument("eta_p: need odd prime p | D");
    return single(D, LocalCharacter::Kind::EtaP, p);
}

FiniteCharacter eta_minus4(i64 D) {
    require_even_ramified(D);
    if (std::abs(D / 4) % 2 != 1) throw std::invalid_argument("eta_minus4: D/4 must be odd");
    return single(D, LocalCharacter::Kind::EtaMinus4, 2);
}

FiniteCharacter eta_8(i64 D) {
    require_even_ramified(D);
    if (std::abs(D / 4) % 2 != 0) throw std::invalid_argument("eta_8: D/4 must be even");
    return single(D, LocalCharacter::Kind::Eta8, 2);
}

FiniteCharacter eta_minus8(i64 D) {
    require_even_ramified(D);
    if (std::abs(D / 4) % 2 != 0) throw std::invalid_argument("eta_minus8: D/4 must be even");
    return single(D, LocalCharacter::Kind::EtaMinus8, 2);
}

FiniteCharacter character_mul(const FiniteCharacter& a, const FiniteCharacter& b) {
    if (a.D != b.D) throw std::invalid_argument("character_mul: field mismatch");
    FiniteCharacter out;
    out.D = a.D;
    std::vector<LocalCharacter> all = a.factors;
    all.insert(all.end(), b.factors.begin(), b.factors.end());
    std::sort(all.begin(), all.end());
    // factors have order 2: equal pairs cancel
    for (size_t i = 0; i < all.size();) {
        if (i + 1 < all.size() && all[i] == all[i + 1]) {
            i += 2;
        } else {
            out.factors.push_back(all[i]);
            ++i;
        }
    }
    return out;
}

int eta_p_eval(i64 D, i64 p, const QElement& alpha) {
    if (alpha.D != D) throw std::invalid_argument("eta_p_eval: field mismatch");
    i64 r = residue_at_ramified(alpha, p);
    int v = kronecker_symbol(r, p);
    if (v == 0) throw std::invalid_argument("eta_p_eval: alpha not coprime to p");
    return v;
}

int eta2_eval(i64 D, LocalCharacter::Kind kind, const QElement& alpha) {
    if (alpha.D != D) throw std::invalid_argument("eta2_eval: field mismatch");
    const Unit2Table& T = unit2_table(D);
    auto e = T.exponents(alpha);
    switch (kind) {
        case LocalCharacter::Kind::EtaMinus4:
            if (!T.m_odd) throw std::invalid_argument("eta2_eval: eta_{-4} needs odd D/4");
            return e[0] ? -1 : 1; // kernel <3 - 2 sqrt(m), 5>
        case LocalCharacter::Kind::Eta8:
            if (T.m_odd) throw std::invalid_argument("eta2_eval: eta_8 needs even D/4");
            return e[2] ? -1 : 1; // kernel <1 + sqrt(m), -1>
        case LocalCharacter::Kind::EtaMinus8:
            if (T.m_odd) throw std::invalid_argument("eta2_eval: eta_{-8} needs even D/4");
            return (e[1] + e[2]) % 2 ? -1 : 1; // kernel <1 + sqrt(m), -5>
        default:
            throw std::invalid_argument("eta2_eval: not a 2-adic kind");
    }
}

int character_eval(const FiniteCharacter& chi, const QElement& alpha) {
    if (alpha.D != chi.D) throw std::invalid_argument("character_eval: field mismatch");
    int v = 1;
    for (const auto& f : chi.factors) {
        if (f.kind == LocalCharacter::Kind::EtaP)
            v *= eta_p_eval(chi.D, f.p, alpha);
        else
            v *= eta2_eval(chi.D, f.kind, alpha);
    }
    return v;
}

int character_eval(const FiniteCharacter& chi, i64 n) {
    return character_eval(chi, QElement{chi.D, mpq_class(n), 0});
}

int character_parity(const FiniteCharacter& chi) { return character_eval(chi, (i64)-1); }

std::set<i64> character_support(const FiniteCharacter& chi) {
    std::set<i64> out;
    for (const auto& f : chi.factors) out.insert(f.p);
    return out;
}

FiniteCharacter eta0(i64 D) {
    i64 best = 0;
    for (auto [p, e] : factorize(D))
        if (p % 4 == 3 && (best == 0 || p < best)) best = p;
    if (best != 0) return eta_p(D, best);
    // all odd prime divisors are 1 mod 4; non-exceptional forces 8 | |D|
    return eta_minus8(D);
}

std::pair<FiniteCharacter, FiniteCharacter> w_generators(i64 D) {
    auto discs = prime_discriminant_factorization(D);
    if (discs.size() != 3) throw std::invalid_argument("w_generators: need three prime discriminants");
    std::vector<i64> ps, qs; // odd primes 1 mod 4 / 3 mod 4
    i64 two_part = 1;
    for (i64 d : discs) {
        if (d == -4 || d == 8 || d == -8)
            two_part = d;
        else if (d > 0)
            ps.push_back(d);
        else
            qs.push_back(-d);
    }
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());

    if (two_part == 1) {
        if (qs.size() == 3) // D = -q1 q2 q3
            return {character_mul(eta_p(D, qs[0]), eta_p(D, qs[1])),
                    character_mul(eta_p(D, qs[0]), eta_p(D, qs[2]))};
        if (ps.size() == 2 && qs.size() == 1) // D = -p1 p2 q
            return {eta_p(D, ps[0]), eta_p(D, ps[1])};
    } else if (two_part == -4) {
        if (qs.size() == 2) // D = -4 q1 q2
            return {eta_minus4(D), character_mul(eta_p(D, qs[0]), eta_p(D, qs[1]))};
    } else if (two_part == -8) {
        if (qs.size() == 2) // D = -8 q1 q2
            return {character_mul(eta_minus8(D), eta_p(D, qs[0])),
                    character_mul(eta_minus8(D), eta_p(D, qs[1]))};
        if (ps.size() == 2) // D = -8 p1 p2
            return {eta_p(D, ps[0]), eta_p(D, ps[1])};
    } else if (two_part == 8) {
        if (ps.size() == 1 && qs.size() == 1) // D = 8 p (-q)
            return {eta_8(D), eta_p(D, ps[0])};
    }
    throw std::invalid_argument("w_generators: discriminant matches no case");
}

QElement phi_principal(const FiniteCharacter& eta, const QElement& alpha) {
    int v = character_eval(eta, alpha);
    return qmul(alpha, mpq_class(v));
}

i64 n_value(const FiniteCharacter& eta, i64 p, const QElement& alpha) {
    // alpha generates p^2 for a split prime ideal p of residue char p
    if (alpha.norm() != mpq_class(p) * p)
        throw std::invalid_argument("n_value: alpha must have norm p^2");
    int e = character_eval(eta, alpha);
    if (character_eval(eta, alpha.conj()) != e)
        throw std::runtime_error("n_value: character not conjugation-invariant");
    mpq_class tr = alpha.trace();
    int ep = character_eval(eta, p);
    mpq_class val = e * tr + 2 * ep * p;
    if (val == 0) throw DegenerateNValue("n_value: bracket vanishes");
    i64 n = squarefree_part(val);
    if (n == 1) throw DegenerateNValue("n_value: bracket is a perfect square");
    return n;
}

std::vector<HeckeSpec> all_hecke_specs(i64 D) {
    std::vector<HeckeSpec> out;
    for (bool twist : {false, true})
        for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}})
            out.push_back(HeckeSpec{D, a, b, twist});
    return out;
}

} // namespace qsplit
