#include "qsplit/quad.hpp"
#include "qsplit/forms.hpp"

#include <stdexcept>
#include <vector>

namespace qsplit {

bool QElement::is_integral() const {
    mpq_class t = trace(), n = norm();
    return t.get_den() == 1 && n.get_den() == 1;
}

QElement qadd(const QElement& a, const QElement& b) {
    if (a.D != b.D) throw std::invalid_argument("qadd: field mismatch");
    return {a.D, a.x + b.x, a.y + b.y};
}

QElement qsub(const QElement& a, const QElement& b) {
    if (a.D != b.D) throw std::invalid_argument("qsub: field mismatch");
    return {a.D, a.x - b.x, a.y - b.y};
}

QElement qmul(const QElement& a, const QElement& b) {
    if (a.D != b.D) throw std::invalid_argument("qmul: field mismatch");
    return {a.D, a.x * b.x + a.D * a.y * b.y, a.x * b.y + a.y * b.x};
}

QElement qmul(const QElement& a, const mpq_class& r) { return {a.D, a.x * r, a.y * r}; }

QElement qneg(const QElement& a) { return {a.D, -a.x, -a.y}; }

QElement qinv(const QElement& a) {
    mpq_class n = a.norm();
    if (n == 0) throw std::invalid_argument("qinv: zero element");
    return {a.D, a.x / n, -a.y / n};
}

namespace {

bool mpq_is_square(const mpq_class& r, mpq_class* root) {
    if (r < 0) return false;
    mpq_class q = r;
    q.canonicalize();
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den_mpz_t()))
        return false;
    if (root) {
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        *root = mpq_class(n, d);
    }
    return true;
}

} // namespace

std::optional<QElement> qsqrt(const QElement& beta) {
    const i64 D = beta.D;
    if (beta.is_zero()) return QElement{D, 0, 0};
    if (beta.y == 0) {
        mpq_class w;
        if (mpq_is_square(beta.x, &w)) return QElement{D, w, 0};
        if (mpq_is_square(beta.x / D, &w)) return QElement{D, 0, w};
        return std::nullopt;
    }
    // (p + q sqrt(D))^2 = beta: q^2 = (x +- r) / (2D) with r = sqrt(N(beta))
    mpq_class n = beta.norm(), r;
    if (!mpq_is_square(n, &r)) return std::nullopt;
    for (int sign : {+1, -1}) {
        mpq_class q2 = (beta.x + sign * r) / (2 * D);
        mpq_class q;
        if (q2 == 0 || !mpq_is_square(q2, &q)) continue;
        mpq_class p = beta.y / (2 * q);
        if (p * p + D * q2 == beta.x) return QElement{D, p, q};
    }
    return std::nullopt;
}

SplittingType splitting_type(i64 D, i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("splitting_type: p not prime");
    int k = kronecker_symbol(D, p);
    if (k == 0) return SplittingType::Ramified;
    return k == 1 ? SplittingType::Split : SplittingType::Inert;
}

namespace {

// N(b + w) = b^2 + b D + (D^2 - D)/4
mpz_class norm_b_plus_omega(i64 D, const mpz_class& b) {
    mpz_class Dm(D);
    return b * b + b * Dm + (Dm * Dm - Dm) / 4;
}

void check_ideal(const QIdeal& I) {
    if (I.a <= 0 || I.content <= 0 || I.b < 0 || I.b >= I.a)
        throw std::runtime_error("QIdeal: malformed standard form");
    if (norm_b_plus_omega(I.D, I.b) % I.a != 0)
        throw std::runtime_error("QIdeal: module is not an ideal");
}

// HNF of the Z-module generated by (u_i, v_i), coordinates over (1, w).
QIdeal hnf_ideal(i64 D, std::vector<std::pair<mpz_class, mpz_class>> rows) {
    // reduce the v-column to a single row by gcd steps
    size_t pivot = 0;
    bool have_pivot = false;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].second == 0) continue;
        if (!have_pivot) { pivot = i; have_pivot = true; continue; }
        // gcd step on rows[pivot], rows[i]
        while (rows[i].second != 0) {
            mpz_class q = rows[pivot].second / rows[i].second;
            rows[pivot].first -= q * rows[i].first;
            rows[pivot].second -= q * rows[i].second;
            std::swap(rows[pivot], rows[i]);
        }
    }
    if (!have_pivot) throw std::runtime_error("hnf_ideal: rank deficient");
    mpz_class c = rows[pivot].second, ustar = rows[pivot].first;
    if (c < 0) { c = -c; ustar = -ustar; }
    mpz_class a0 = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i == pivot) continue;
        mpz_class u = rows[i].first - (rows[i].second / c) * ustar;
        if (rows[i].second % c != 0)
            throw std::runtime_error("hnf_ideal: v-column not reduced");
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a0.get_mpz_t(), u.get_mpz_t());
        a0 = g;
    }
    if (a0 == 0) throw std::runtime_error("hnf_ideal: rank deficient");
    QIdeal I;
    I.D = D;
    if (a0 % c != 0 || ustar % c != 0)
        throw std::runtime_error("hnf_ideal: not an O-module in standard form");
    I.content = c;
    I.a = a0 / c;
    I.b = (ustar / c) % I.a;
    if (I.b < 0) I.b += I.a;
    check_ideal(I);
    return I;
}

// coordinates of alpha over (1, w); requires alpha integral
std::pair<mpz_class, mpz_class> omega_coords(const QElement& alpha) {
    if (!alpha.is_integral()) throw std::invalid_argument("omega_coords: not integral");
    mpq_class v = 2 * alpha.y;
    mpq_class u = alpha.x - alpha.y * alpha.D;
    if (v.get_den() != 1 || u.get_den() != 1)
        throw std::runtime_error("omega_coords: non-integral coordinates");
    return {u.get_num(), v.get_num()};
}

} // namespace

PrimeAbove prime_above(i64 D, i64 p) {
    SplittingType t = splitting_type(D, p);
    PrimeAbove out;
    out.type = t;
    if (t == SplittingType::Inert) {
        QIdeal I;
        I.D = D;
        I.content = p;
        out.primary = out.conjugate = I;
        return out;
    }
    i64 b = -1;
    for (i64 cand = 0; cand < p; ++cand) {
        mpz_class n = norm_b_plus_omega(D, mpz_class(cand));
        if (n % p == 0) { b = cand; break; }
    }
    if (b < 0) throw std::runtime_error("prime_above: no root found");
    QIdeal P;
    P.D = D;
    P.a = p;
    P.b = b;
    check_ideal(P);
    out.primary = P;
    QIdeal Q = P;
    mpz_class bb = (-(P.b + D)) % p;
    if (bb < 0) bb += p;
    Q.b = bb;
    check_ideal(Q);
    out.conjugate = Q;
    if (t == SplittingType::Split && P == Q)
        throw std::runtime_error("prime_above: split prime with equal conjugate");
    return out;
}

QIdeal ideal_mul(const QIdeal& I, const QIdeal& J) {
    if (I.D != J.D) throw std::invalid_argument("ideal_mul: field mismatch");
    const i64 D = I.D;
    const mpz_class q = (mpz_class(D) * D - D) / 4;
    auto mul_pair = [&](const mpz_class& u1, const mpz_class& v1, const mpz_class& u2,
                        const mpz_class& v2) -> std::pair<mpz_class, mpz_class> {
        // (u1 + v1 w)(u2 + v2 w), w^2 = D w - q
        return {mpz_class(u1 * u2 - v1 * v2 * q), mpz_class(u1 * v2 + u2 * v1 + v1 * v2 * D)};
    };
    std::vector<std::pair<mpz_class, mpz_class>> rows{
        mul_pair(I.a, 0, J.a, 0),
        mul_pair(I.a, 0, J.b, 1),
        mul_pair(I.b, 1, J.a, 0),
        mul_pair(I.b, 1, J.b, 1),
    };
    QIdeal K = hnf_ideal(D, rows);
    K.content *= I.content * J.content;
    return K;
}

QIdeal ideal_conj(const QIdeal& I) {
    QIdeal J = I;
    mpz_class bb = (-(I.b + I.D)) % I.a;
    if (bb < 0) bb += I.a;
    J.b = bb;
    check_ideal(J);
    return J;
}

QIdeal ideal_of(const QElement& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("ideal_of: zero element");
    auto [u, v] = omega_coords(alpha);
    const i64 D = alpha.D;
    const mpz_class q = (mpz_class(D) * D - D) / 4;
    std::vector<std::pair<mpz_class, mpz_class>> rows{
        {u, v},
        {-v * q, u + v * D}, // alpha * w
    };
    return hnf_ideal(D, rows);
}

QIdeal ideal_pow(const QIdeal& I, int e) {
    if (e < 1) throw std::invalid_argument("ideal_pow: exponent must be positive");
    QIdeal out = I;
    for (int k = 1; k < e; ++k) out = ideal_mul(out, I);
    return out;
}

bool ideal_contains(const QIdeal& I, const QElement& alpha) {
    if (alpha.D != I.D) throw std::invalid_argument("ideal_contains: field mismatch");
    if (alpha.is_zero()) return true;
    if (!alpha.is_integral()) return false;
    auto [u, v] = omega_coords(alpha);
    if (u % I.content != 0 || v % I.content != 0) return false;
    mpz_class uu = u / I.content, vv = v / I.content;
    return (uu - vv * I.b) % I.a == 0;
}

std::optional<QElement> principal_generator(const QIdeal& I) {
    const i64 D = I.D;
    mpz_class Nz = I.norm();
    if (!Nz.fits_slong_p()) throw std::invalid_argument("principal_generator: norm too large");
    i64 N = Nz.get_si();
    i64 absD = -D;
    if (absD <= 0) throw std::invalid_argument("principal_generator: D must be negative");
    // 4N = t^2 + |D| s^2, alpha = (t + s sqrt(D))/2
    for (i64 s = 0; absD * s * s <= 4 * N; ++s) {
        i64 t2 = 4 * N - absD * s * s;
        i64 t;
        if (!is_square(t2, &t)) continue;
        if ((t - s * D) % 2 != 0) continue;
        for (i64 tc : {t, -t}) {
            mpq_class qx(tc, 2), qy(s, 2);
            qx.canonicalize();
            qy.canonicalize();
            QElement alpha{D, qx, qy};
            if (alpha.is_zero() || !alpha.is_integral()) continue;
            if (alpha.norm() != N) continue;
            if (!ideal_contains(I, alpha)) continue;
            // normalize: y >= 0 (s >= 0 already), x > 0 when y = 0
            if (s == 0 && alpha.x < 0) alpha = qneg(alpha);
            return alpha;
        }
    }
    return std::nullopt;
}

bool square_class_test(const QElement& alpha, const mpq_class& target, bool allow_sign) {
    if (alpha.is_zero()) throw std::invalid_argument("square_class_test: alpha = 0");
    if (target == 0) throw std::invalid_argument("square_class_test: target = 0");
    QElement beta = qmul(alpha, target);
    if (qsqrt(beta)) return true;
    if (allow_sign && qsqrt(qneg(beta))) return true;
    return false;
}

std::array<int, 3> frobenius_class(i64 D, const QIdeal& p) {
    if (p.D != D) throw std::invalid_argument("frobenius_class: field mismatch");
    mpz_class n = p.norm();
    if (!n.fits_slong_p()) throw std::invalid_argument("frobenius_class: norm too large");
    i64 q = n.get_si();
    if (!is_prime(q) || D % q == 0)
        throw std::invalid_argument("frobenius_class: prime must be unramified of degree 1");
    return artin_vector(D, q);
}

std::pair<mpz_class, mpz_class> coords_over_sqrt_m(const QElement& alpha) {
    if (((alpha.D % 4) + 4) % 4 != 0)
        throw std::invalid_argument("coords_over_sqrt_m: D must be even");
    if (!alpha.is_integral()) throw std::invalid_argument("coords_over_sqrt_m: not integral");
    // x + y sqrt(D) = x + 2y sqrt(m)
    mpq_class v = 2 * alpha.y;
    if (alpha.x.get_den() != 1 || v.get_den() != 1)
        throw std::runtime_error("coords_over_sqrt_m: non-integral coordinates");
    return {alpha.x.get_num(), v.get_num()};
}

i64 residue_at_ramified(const QElement& alpha, i64 p) {
    if (p <= 2 || alpha.D % p != 0)
        throw std::invalid_argument("residue_at_ramified: need odd p | D");
    if (!alpha.is_integral()) throw std::invalid_argument("residue_at_ramified: not integral");
    mpq_class n = alpha.norm();
    if (mpz_class(n.get_num()) % p == 0)
        throw std::invalid_argument("residue_at_ramified: alpha not coprime to p");
    // sqrt(D) lies in the ramified prime, so the residue is x mod p
    mpz_class num = alpha.x.get_num() % p, den = alpha.x.get_den() % p;
    mpz_class pz(p), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::invalid_argument("residue_at_ramified: denominator not invertible");
    mpz_class r = (num * inv) % pz;
    if (r < 0) r += pz;
    return r.get_si();
}

} // namespace qsplit
