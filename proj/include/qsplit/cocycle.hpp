#ifndef QSPLIT_COCYCLE_HPP
#define QSPLIT_COCYCLE_HPP

#include <array>
#include <optional>
#include <vector>

#include "qsplit/group.hpp"
#include "qsplit/quad.hpp"

namespace qsplit {

/* {+-1}-valued 2-cochain/cocycle on a small group, trivial action. */
struct SignCocycle {
    SmallGroup G;
    std::vector<int> values; // values[s * n + t] in {-1, +1}

    int c(int s, int t) const { return values[s * G.n + t]; }
};

SignCocycle trivial_cocycle(const SmallGroup& G);
SignCocycle coboundary_of(const SmallGroup& G, const std::vector<int>& cochain);
bool verify_cocycle(const SignCocycle& c);

/* Trivializing normalized 1-cochain, found by exhaustive search over the
 * 2^(n-1) candidates; absent when the class is nontrivial. */
std::optional<std::vector<int>> is_coboundary_pm1(const SignCocycle& c);

/* Ideal-theoretic degree-component data of the Gross-curve cocycle: for
 * each nontrivial ideal class, the smallest split prime q in it, a
 * generator alpha of q^2, and a nonsquare divisor d of D with
 * +-d * alpha a square in M. */
struct ClassComponent {
    std::array<int, 3> artin{}; // sign vector of the class
    i64 q = 0;                  // residue characteristic of the chosen prime
    QIdeal ideal;               // the prime itself
    QElement alpha;             // generator of ideal^2
    i64 d = 0;                  // divisor of |D| carried by the class
    int sign = 0;               // sign s with s * d * alpha a square
};

std::vector<ClassComponent> degree_component(i64 D);

/* The full square-class-valued 2-cocycle built from one prime per class:
 * c(s, t) = generator of q_s q_t q_{st}^{-1} (a fractional principal
 * ideal).  Values are exact elements of M; the cocycle identity holds up
 * to +-(M^x)^2. */
struct ClassGroupCocycle {
    i64 D = 0;
    std::array<QIdeal, 4> ideals;           // indexed by class mask
    std::array<QElement, 16> values;        // [s * 4 + t]
    std::array<std::array<int, 3>, 4> artin;
};

ClassGroupCocycle class_group_cocycle(i64 D);
bool verify_square_class_cocycle(const ClassGroupCocycle& c);

struct LemmaReport {
    i64 D = 0;
    bool pass = false;
    std::vector<ClassComponent> components;
};

/* For every nontrivial class there is a nonsquare divisor d of D with
 * +-d times the diagonal cocycle value a square in M^x. */
LemmaReport lemma_p_mid_D_check(i64 D);

/* Necessary divisibility for the dihedral configurations: 2 | D for
 * r = 4 and 3 | D for r = 6, cross-checked against the degree
 * components. */
bool dihedral_divisibility_check(i64 D, int r);

/* Nonzero solution of z^2 = a x^2 + b y^2 with coordinates in the maximal
 * order of Q(sqrt(D)), searched by ascending coordinate height; presence
 * certifies that (a,b) splits over the field.  The parallel path shards
 * each height shell and reports the lexicographically smallest witness. */
struct ConicWitness {
    QElement x, y, z;
};

std::optional<ConicWitness> conic_witness(i64 a, i64 b, i64 D, i64 bound,
                                          bool parallel = true);

} // namespace qsplit

#endif
