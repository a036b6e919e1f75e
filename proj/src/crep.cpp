#include "qsplit/crep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qsplit {

namespace {

// cyclotomic polynomials for n | 24, as monic integer coefficient vectors
const std::vector<mpq_class>& cyclo_poly(int n) {
    static std::map<int, std::vector<mpq_class>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1 || 24 % n != 0) throw std::invalid_argument("cyclo_poly: conductor must divide 24");

    // divide x^n - 1 by the cyclotomic polynomials of the proper divisors
    std::vector<mpq_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phi_d = cyclo_poly(d);
        // exact polynomial division num / phi_d
        std::vector<mpq_class> quot(num.size() - phi_d.size() + 1, 0);
        std::vector<mpq_class> rem = num;
        for (int i = (int)quot.size() - 1; i >= 0; --i) {
            mpq_class q = rem[i + phi_d.size() - 1] / phi_d.back();
            quot[i] = q;
            if (q != 0)
                for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= q * phi_d[j];
        }
        for (const auto& x : rem)
            if (x != 0) throw std::runtime_error("cyclo_poly: division not exact");
        num = quot;
    }
    return cache.emplace(n, std::move(num)).first->second;
}

int phi_deg(int n) { return (int)cyclo_poly(n).size() - 1; }

// reduce a polynomial modulo the monic cyclotomic polynomial
std::vector<mpq_class> reduce_mod_phi(int n, std::vector<mpq_class> p) {
    const auto& phi = cyclo_poly(n);
    int d = (int)phi.size() - 1;
    for (int i = (int)p.size() - 1; i >= d; --i) {
        mpq_class q = p[i];
        if (q == 0) continue;
        for (int j = 0; j <= d; ++j) p[i - d + j] -= q * phi[j];
    }
    p.resize(d);
    return p;
}

} // namespace

CycloElt::CycloElt(int n, std::vector<mpq_class> coeffs) : n_(n) {
    int d = phi_deg(n);
    if ((int)coeffs.size() > d) coeffs = reduce_mod_phi(n, std::move(coeffs));
    coeffs.resize(d, 0);
    c_ = std::move(coeffs);
}

CycloElt CycloElt::rational(int n, const mpq_class& r) {
    return CycloElt(n, std::vector<mpq_class>{r});
}

CycloElt CycloElt::zeta(int n) {
    if (n == 1) return rational(1, 1);
    std::vector<mpq_class> c(2, 0);
    c[1] = 1;
    return CycloElt(n, std::move(c));
}

CycloElt CycloElt::zeta_pow(int n, long e) {
    e %= n;
    if (e < 0) e += n;
    std::vector<mpq_class> c(e + 1, 0);
    c[e] = 1;
    return CycloElt(n, std::move(c));
}

bool CycloElt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloElt::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class CycloElt::rational_value() const {
    if (!is_rational()) throw std::runtime_error("CycloElt: not rational");
    return c_.empty() ? mpq_class(0) : c_[0];
}

CycloElt CycloElt::operator+(const CycloElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycloElt: conductor mismatch");
    std::vector<mpq_class> c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return CycloElt(n_, std::move(c));
}

CycloElt CycloElt::operator-(const CycloElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycloElt: conductor mismatch");
    std::vector<mpq_class> c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return CycloElt(n_, std::move(c));
}

CycloElt CycloElt::operator*(const CycloElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycloElt: conductor mismatch");
    std::vector<mpq_class> prod(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    return CycloElt(n_, reduce_mod_phi(n_, std::move(prod)));
}

CycloElt CycloElt::operator-() const {
    std::vector<mpq_class> c = c_;
    for (auto& x : c) x = -x;
    return CycloElt(n_, std::move(c));
}

CycloElt CycloElt::inverse() const {
    if (is_zero()) throw std::invalid_argument("CycloElt: inverse of zero");
    // extended Euclid in Q[x] against the irreducible cyclotomic polynomial
    std::vector<mpq_class> r0 = cyclo_poly(n_), r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<mpq_class> s0{0}, s1{1};
    auto deg = [](const std::vector<mpq_class>& p) { return (int)p.size() - 1; };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<mpq_class> q(std::max<int>(0, deg(r0) - deg(r1)) + 1, 0);
        std::vector<mpq_class> rem = r0;
        for (int i = (int)q.size() - 1; i >= 0; --i) {
            if ((int)rem.size() - 1 < i + deg(r1)) continue;
            mpq_class qi = rem[i + deg(r1)] / r1.back();
            q[i] = qi;
            if (qi != 0)
                for (int j = 0; j <= deg(r1); ++j) rem[i + j] -= qi * r1[j];
        }
        while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
        // s_next = s0 - q * s1
        std::vector<mpq_class> qs(q.size() + s1.size() - 1, 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        std::vector<mpq_class> s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.size() == 1 && r1[0] == 0)
            throw std::runtime_error("CycloElt: gcd with cyclotomic polynomial nontrivial");
    }
    // r1 is a nonzero constant: inverse = s1 / r1
    mpq_class cst = r1[0];
    for (auto& x : s1) x /= cst;
    return CycloElt(n_, reduce_mod_phi(n_, std::move(s1)));
}

CycloElt CycloElt::conj() const {
    // substitute x -> x^{n-1}
    CycloElt result = CycloElt::rational(n_, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        CycloElt term = CycloElt::zeta_pow(n_, (long)((n_ - 1) * i));
        result = result + CycloElt::rational(n_, c_[i]) * term;
    }
    return result;
}

CycloElt CycloElt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElt out = rational(n_, 1), base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

bool CycloElt::operator==(const CycloElt& o) const { return n_ == o.n_ && c_ == o.c_; }

CycloMatrix cyclo_identity(int n, int dim) {
    CycloMatrix I;
    I.n = n;
    I.dim = dim;
    I.e.assign(dim * dim, CycloElt::rational(n, 0));
    for (int i = 0; i < dim; ++i) I.at(i, i) = CycloElt::rational(n, 1);
    return I;
}

CycloMatrix mat_mul(const CycloMatrix& A, const CycloMatrix& B) {
    if (A.dim != B.dim || A.n != B.n) throw std::invalid_argument("mat_mul: shape mismatch");
    CycloMatrix C;
    C.n = A.n;
    C.dim = A.dim;
    C.e.assign(A.dim * A.dim, CycloElt::rational(A.n, 0));
    for (int i = 0; i < A.dim; ++i)
        for (int k = 0; k < A.dim; ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (int j = 0; j < A.dim; ++j)
                C.at(i, j) = C.at(i, j) + A.at(i, k) * B.at(k, j);
        }
    return C;
}

CycloMatrix mat_scalar_mul(const CycloMatrix& A, const CycloElt& s) {
    CycloMatrix C = A;
    for (auto& x : C.e) x = x * s;
    return C;
}

CycloMatrix mat_transpose(const CycloMatrix& A) {
    CycloMatrix C = A;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) C.at(i, j) = A.at(j, i);
    return C;
}

CycloMatrix mat_inverse(const CycloMatrix& A) {
    const int d = A.dim;
    CycloMatrix aug = A, inv = cyclo_identity(A.n, d);
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r)
            if (!aug.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::invalid_argument("mat_inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < d; ++j) {
                std::swap(aug.at(pivot, j), aug.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        CycloElt pinv = aug.at(col, col).inverse();
        for (int j = 0; j < d; ++j) {
            aug.at(col, j) = aug.at(col, j) * pinv;
            inv.at(col, j) = inv.at(col, j) * pinv;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col || aug.at(r, col).is_zero()) continue;
            CycloElt f = aug.at(r, col);
            for (int j = 0; j < d; ++j) {
                aug.at(r, j) = aug.at(r, j) - f * aug.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

CycloMatrix mat_kronecker(const CycloMatrix& A, const CycloMatrix& B) {
    if (A.n != B.n) throw std::invalid_argument("mat_kronecker: conductor mismatch");
    CycloMatrix C;
    C.n = A.n;
    C.dim = A.dim * B.dim;
    C.e.assign(C.dim * C.dim, CycloElt::rational(A.n, 0));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < B.dim; ++k)
                for (int l = 0; l < B.dim; ++l)
                    C.at(i * B.dim + k, j * B.dim + l) = A.at(i, j) * B.at(k, l);
    return C;
}

CycloElt mat_trace(const CycloMatrix& A) {
    CycloElt t = CycloElt::rational(A.n, 0);
    for (int i = 0; i < A.dim; ++i) t = t + A.at(i, i);
    return t;
}

bool mat_equal(const CycloMatrix& A, const CycloMatrix& B) {
    return A.dim == B.dim && A.n == B.n && A.e == B.e;
}

CRep make_crep(SmallGroup G, int n, std::vector<CycloMatrix> rho,
               std::vector<CycloElt> cocycle) {
    CRep V;
    V.G = std::move(G);
    V.n = n;
    if (rho.empty() || (int)rho.size() != V.G.n ||
        (int)cocycle.size() != V.G.n * V.G.n)
        throw std::invalid_argument("make_crep: shape mismatch");
    V.dim = rho[0].dim;
    V.rho = std::move(rho);
    V.cocycle = std::move(cocycle);
    if (!mat_equal(V.rho[V.G.identity], cyclo_identity(n, V.dim)))
        throw std::invalid_argument("make_crep: rho(1) != 1");
    for (int s = 0; s < V.G.n; ++s)
        for (int t = 0; t < V.G.n; ++t) {
            if (V.c(s, t).is_zero()) throw std::invalid_argument("make_crep: zero cocycle value");
            CycloMatrix lhs = mat_mul(V.rho[s], V.rho[t]);
            CycloMatrix rhs = mat_scalar_mul(V.rho[V.G.mul(s, t)], V.c(s, t));
            if (!mat_equal(lhs, rhs))
                throw std::invalid_argument("make_crep: defining relation fails");
        }
    return V;
}

CRep make_crep_infer(SmallGroup G, int n, std::vector<CycloMatrix> rho) {
    std::vector<CycloElt> cocycle(G.n * G.n, CycloElt::rational(n, 1));
    for (int s = 0; s < G.n; ++s)
        for (int t = 0; t < G.n; ++t) {
            CycloMatrix lhs = mat_mul(rho[s], rho[t]);
            const CycloMatrix& base = rho[G.mul(s, t)];
            // find the scalar lhs = c * base
            CycloElt c = CycloElt::rational(n, 0);
            bool found = false;
            for (int i = 0; i < base.dim && !found; ++i)
                for (int j = 0; j < base.dim && !found; ++j)
                    if (!base.at(i, j).is_zero()) {
                        c = lhs.at(i, j) * base.at(i, j).inverse();
                        found = true;
                    }
            if (!found) throw std::invalid_argument("make_crep_infer: zero matrix");
            cocycle[s * G.n + t] = c;
        }
    return make_crep(std::move(G), n, std::move(rho), std::move(cocycle));
}

bool is_honest_representation(const CRep& V) {
    CycloElt one = CycloElt::rational(V.n, 1);
    for (const auto& c : V.cocycle)
        if (!(c == one)) return false;
    return true;
}

CRep crep_dual(const CRep& V) {
    std::vector<CycloMatrix> rho;
    std::vector<CycloElt> cocycle;
    for (int s = 0; s < V.G.n; ++s) rho.push_back(mat_transpose(mat_inverse(V.rho[s])));
    for (const auto& c : V.cocycle) cocycle.push_back(c.inverse());
    return make_crep(V.G, V.n, std::move(rho), std::move(cocycle));
}

CRep crep_tensor(const CRep& V, const CRep& W) {
    if (V.G.table != W.G.table || V.n != W.n)
        throw std::invalid_argument("crep_tensor: group or field mismatch");
    std::vector<CycloMatrix> rho;
    std::vector<CycloElt> cocycle;
    for (int s = 0; s < V.G.n; ++s) rho.push_back(mat_kronecker(V.rho[s], W.rho[s]));
    for (int i = 0; i < V.G.n * V.G.n; ++i) cocycle.push_back(V.cocycle[i] * W.cocycle[i]);
    return make_crep(V.G, V.n, std::move(rho), std::move(cocycle));
}

CRep crep_hom(const CRep& V, const CRep& W) {
    if (V.G.table != W.G.table || V.n != W.n)
        throw std::invalid_argument("crep_hom: group or field mismatch");
    // Hom(V, W) = W tensor V^*: rho_T(s) f = rho_W(s) f rho_V(s)^{-1}
    CRep T = crep_tensor(W, crep_dual(V));
    // cross-check the stated cocycle c_T = c_V^{-1} c_W
    for (int i = 0; i < V.G.n * V.G.n; ++i)
        if (!(T.cocycle[i] == V.cocycle[i].inverse() * W.cocycle[i]))
            throw std::runtime_error("crep_hom: cocycle mismatch");
    return T;
}

bool check_inverse_identities(const CRep& V) {
    for (int s = 0; s < V.G.n; ++s) {
        int si = V.G.inv(s);
        CycloMatrix lhs = V.rho[si];
        CycloMatrix rhs = mat_scalar_mul(mat_inverse(V.rho[s]), V.c(si, s));
        if (!mat_equal(lhs, rhs)) return false;
        if (!(V.c(s, si) == V.c(si, s))) return false;
    }
    return true;
}

TraceScenario trace_scenario_rho_r(int r) {
    if (24 % r != 0) throw std::invalid_argument("trace_scenario_rho_r: r must divide 24");
    const int n = 24;
    CycloElt alpha = CycloElt::zeta(n);
    CycloElt zr = CycloElt::zeta_pow(n, 24 / r);
    SmallGroup G = cyclic_group(24);
    CycloMatrix M = cyclo_identity(n, 2);
    M.at(0, 0) = alpha;
    M.at(1, 1) = zr * alpha;
    std::vector<CycloMatrix> rho{cyclo_identity(n, 2)};
    for (int k = 1; k < 24; ++k) rho.push_back(mat_mul(rho.back(), M));
    CRep V = make_crep_infer(G, n, std::move(rho));
    CRep R = crep_hom(V, V);

    TraceScenario out;
    if (!is_honest_representation(R)) return out;
    CycloElt tr = mat_trace(R.rho[1]);
    CycloElt expect = CycloElt::rational(n, 2) + zr + zr.conj();
    if (!(tr == expect)) return out;
    if (!(tr.conj() == tr)) return out; // fixed by complex conjugation
    if (!tr.is_rational()) return out;
    out.ok = true;
    out.trace_value = tr.rational_value();
    return out;
}

ObstructionScenario obstruction_scenario(int r, int omega_exp, int alpha_exp) {
    if (r != 4 && r != 6 && r != 1 && r != 2 && r != 3)
        throw std::invalid_argument("obstruction_scenario: r in {1,2,3,4,6}");
    const int n = 24;
    CycloElt alpha = CycloElt::zeta_pow(n, alpha_exp);
    CycloElt zr = CycloElt::zeta_pow(n, 24 / r);
    CycloElt omega = zr.pow(omega_exp); // an r-th root of unity, possibly imprimitive
    CycloElt beta = zr * alpha;         // the second eigenvalue
    CycloElt c = omega * beta * beta;   // c(sigma, sigma) = omega_r * (leading eigenvalue)^2

    ObstructionScenario out;
    // rho(s)^{2r} is the scalar alpha^{2r} and must equal c^r
    CycloElt lhs = alpha.pow(2 * r);
    if (!(beta.pow(2 * r) == lhs)) return out;
    if (!(c.pow(r) == lhs)) return out;
    // (2 + zeta_r + bar zeta_r) c = (alpha + beta)^2 omega_r zeta_r
    CycloElt two_z = CycloElt::rational(n, 2) + zr + zr.conj();
    CycloElt apb = alpha + beta;
    if (!(two_z * c == apb * apb * omega * zr)) return out;
    // the +- form when omega_r zeta_r is rational
    CycloElt oz = omega * zr;
    if (oz.is_rational()) {
        mpq_class v = oz.rational_value();
        if (v != 1 && v != -1) return out;
        CycloElt signed_lhs = two_z * c * oz;
        if (!(signed_lhs == apb * apb)) return out;
        out.pm_form_checked = true;
    }
    out.ok = true;
    return out;
}

} // namespace qsplit
