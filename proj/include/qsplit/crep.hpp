#ifndef QSPLIT_CREP_HPP
#define QSPLIT_CREP_HPP

#include <vector>

#include <gmpxx.h>

#include "qsplit/group.hpp"

namespace qsplit {

/* Exact arithmetic in Q(zeta_n), n | 24, as polynomial residues modulo the
 * n-th cyclotomic polynomial. */
class CycloElt {
  public:
    CycloElt() = default;
    CycloElt(int n, std::vector<mpq_class> coeffs); // power-basis coefficients

    static CycloElt rational(int n, const mpq_class& r);
    static CycloElt zeta(int n);      // a primitive n-th root of unity
    static CycloElt zeta_pow(int n, long e);

    int conductor() const { return n_; }
    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_value() const; // requires is_rational

    CycloElt operator+(const CycloElt& o) const;
    CycloElt operator-(const CycloElt& o) const;
    CycloElt operator*(const CycloElt& o) const;
    CycloElt operator-() const;
    CycloElt inverse() const;
    CycloElt conj() const; // zeta -> zeta^{-1}
    CycloElt pow(long e) const;
    bool operator==(const CycloElt& o) const;

  private:
    int n_ = 1;
    std::vector<mpq_class> c_; // size phi(n), power basis 1, x, ..., x^{phi-1}
};

struct CycloMatrix {
    int n = 1;   // conductor
    int dim = 0;
    std::vector<CycloElt> e; // row major

    CycloElt& at(int i, int j) { return e[i * dim + j]; }
    const CycloElt& at(int i, int j) const { return e[i * dim + j]; }
};

CycloMatrix cyclo_identity(int n, int dim);
CycloMatrix mat_mul(const CycloMatrix& A, const CycloMatrix& B);
CycloMatrix mat_scalar_mul(const CycloMatrix& A, const CycloElt& s);
CycloMatrix mat_inverse(const CycloMatrix& A);
CycloMatrix mat_transpose(const CycloMatrix& A);
CycloMatrix mat_kronecker(const CycloMatrix& A, const CycloMatrix& B);
CycloElt mat_trace(const CycloMatrix& A);
bool mat_equal(const CycloMatrix& A, const CycloMatrix& B);

/* Map rho: G -> GL(V) with rho(s) rho(t) = rho(st) c(s,t); built data is
 * validated against this relation. */
struct CRep {
    SmallGroup G;
    int n = 1; // coefficient field conductor
    int dim = 0;
    std::vector<CycloMatrix> rho; // indexed by group element
    std::vector<CycloElt> cocycle; // [s * G.n + t]

    const CycloElt& c(int s, int t) const { return cocycle[s * G.n + t]; }
};

CRep make_crep(SmallGroup G, int n, std::vector<CycloMatrix> rho,
               std::vector<CycloElt> cocycle);
/* Convenience: derive the cocycle from the matrices (each rho(s)rho(t)
 * must be a scalar multiple of rho(st)). */
CRep make_crep_infer(SmallGroup G, int n, std::vector<CycloMatrix> rho);

bool is_honest_representation(const CRep& V);

CRep crep_dual(const CRep& V);
CRep crep_tensor(const CRep& V, const CRep& W);
CRep crep_hom(const CRep& V, const CRep& W);

/* rho(s^{-1}) = rho(s)^{-1} c(s^{-1}, s) and c(s, s^{-1}) = c(s^{-1}, s). */
bool check_inverse_identities(const CRep& V);

/* Builds V with rho(g) = diag(alpha, zeta_r alpha) over Q(zeta_24) on a
 * cyclic group, forms R = Hom(V, V), and checks that R is honest with
 * Tr rho_R(g) = 2 + zeta_r + zeta_r^{-1}, a rational value. */
struct TraceScenario {
    bool ok = false;
    mpq_class trace_value;
};
TraceScenario trace_scenario_rho_r(int r);

/* Symbolic verification of the order-2r eigenvalue identities: with
 * eigenvalues (alpha, zeta_r alpha), c = omega_r (zeta_r alpha)^2 satisfies
 * rho(s)^{2r} = c^r and (2 + zeta_r + zeta_r^{-1}) c = (alpha + beta)^2
 * omega_r zeta_r; when omega_r zeta_r = +-1 the +- form follows. */
struct ObstructionScenario {
    bool ok = false;
    bool pm_form_checked = false; // omega_r * zeta_r was rational
};
ObstructionScenario obstruction_scenario(int r, int omega_exp, int alpha_exp);

} // namespace qsplit

#endif
