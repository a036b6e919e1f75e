#include <doctest.h>

#include <random>

#include "qsplit/forms.hpp"
#include "qsplit/quad.hpp"

using namespace qsplit;

namespace {

QElement elt(i64 D, const mpq_class& x, const mpq_class& y) { return QElement{D, x, y}; }

} // namespace

TEST_CASE("splitting types") {
    CHECK(splitting_type(-84, 5) == SplittingType::Split);
    CHECK(splitting_type(-84, 13) == SplittingType::Inert);
    CHECK(splitting_type(-84, 7) == SplittingType::Ramified);
}

TEST_CASE("prime above") {
    auto p3 = prime_above(-20, 3);
    CHECK(p3.type == SplittingType::Split);
    CHECK(p3.primary.norm() == 3);
    CHECK(!(p3.primary == p3.conjugate));

    auto p7 = prime_above(-84, 7);
    CHECK(p7.type == SplittingType::Ramified);
    CHECK(p7.primary == p7.conjugate);
    // p^2 = (7)
    QIdeal sq = ideal_pow(p7.primary, 2);
    auto g = principal_generator(sq);
    REQUIRE(g.has_value());
    CHECK(g->x == 7);
    CHECK(g->y == 0);

    auto p13 = prime_above(-84, 13);
    CHECK(p13.type == SplittingType::Inert);
    CHECK(p13.primary.norm() == 169);
}

TEST_CASE("split prime conjugate product is (p)") {
    for (auto [D, p] : {std::pair<i64, i64>{-20, 3}, {-84, 5}, {-84, 11}, {-195, 7}}) {
        auto pa = prime_above(D, p);
        REQUIRE(pa.type == SplittingType::Split);
        QIdeal prod = ideal_mul(pa.primary, pa.conjugate);
        auto g = principal_generator(prod);
        REQUIRE(g.has_value());
        CHECK(g->is_rational());
        CHECK(abs(g->x) == p);
    }
}

TEST_CASE("principal generator of p3^2 over D = -20") {
    auto p3 = prime_above(-20, 3);
    QIdeal sq = ideal_pow(p3.primary, 2);
    auto g = principal_generator(sq);
    REQUIRE(g.has_value());
    // norm 9 and membership in p3^2 itself, not its conjugate
    CHECK(g->norm() == 9);
    CHECK(ideal_contains(sq, *g));
    CHECK(ideal_of(*g) == sq);
    // 2 + sqrt(-5) in the (1, sqrt(D)) coordinates: x = 2, y = 1/2
    CHECK(g->x == 2);
    CHECK(abs(g->y) == mpq_class(1, 2));
}

TEST_CASE("non-principal primes have no generator") {
    // artin vector of 5 over -84 is nontrivial, so p5 is not principal
    auto p5 = prime_above(-84, 5);
    CHECK(!principal_generator(p5.primary).has_value());
}

TEST_CASE("principal generator round trip on random small ideals") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> pick(0, 5);
    const i64 D = -84;
    std::vector<QIdeal> primes;
    for (i64 p : {2, 3, 5, 7, 11, 23}) primes.push_back(prime_above(D, p).primary);
    for (int trial = 0; trial < 40; ++trial) {
        QIdeal I = prime_above(D, 2).primary; // start somewhere
        for (int k = 0; k < 3; ++k) I = ideal_mul(I, primes[pick(rng)]);
        auto g = principal_generator(I);
        if (g) {
            CHECK(ideal_of(*g) == I);
            CHECK(g->norm() == mpq_class(I.norm()));
        }
    }
}

TEST_CASE("square roots in M") {
    // -21 is a square in Q(sqrt(-84)): (sqrt(D)/2)^2
    auto r = qsqrt(elt(-84, -21, 0));
    REQUIRE(r.has_value());
    CHECK(qmul(*r, *r) == elt(-84, -21, 0));

    CHECK(qsqrt(elt(-84, 4, 0)).has_value());
    CHECK(!qsqrt(elt(-84, 2, 0)).has_value());

    // (2 + sqrt(-5))/2 is not a square in Q(sqrt(-5))
    QElement alpha = elt(-20, 2, mpq_class(1, 2)); // 2 + sqrt(-5)
    CHECK(!square_class_test(alpha, 2, false));
    CHECK(square_class_test(elt(-84, -21, 0), -21, false));
    CHECK(square_class_test(elt(-84, 4, 0), 1, false));
}

TEST_CASE("square class test is a square-class invariant") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<i64> dist(-9, 9);
    const i64 D = -84;
    for (int trial = 0; trial < 60; ++trial) {
        QElement a = elt(D, dist(rng), dist(rng));
        if (a.is_zero()) continue;
        CHECK(square_class_test(qmul(a, a), 1, false));
        QElement s = elt(D, dist(rng), dist(rng));
        if (s.is_zero()) continue;
        // multiplying by a square never changes the class
        QElement b = qmul(a, qmul(s, s));
        for (i64 t : {1, 2, -3, 21}) {
            CHECK(square_class_test(a, t, true) == square_class_test(b, t, true));
        }
    }
}

TEST_CASE("14 * (2 + sqrt(-21)) is a square in Q(sqrt(-21))") {
    // the degree component of the class of p5 over D = -84
    QElement alpha = elt(-84, 2, mpq_class(1, 2)); // 2 + sqrt(-21)
    CHECK(alpha.norm() == 25);
    CHECK(square_class_test(alpha, 14, false));
    CHECK(!square_class_test(alpha, 21, true));
}

TEST_CASE("frobenius classes and the Artin homomorphism") {
    auto p5 = prime_above(-84, 5);
    CHECK(frobenius_class(-84, p5.primary) == std::array<int, 3>{-1, 1, -1});
    auto p11 = prime_above(-84, 11);
    CHECK(frobenius_class(-84, p11.primary) == std::array<int, 3>{-1, -1, 1});
    CHECK_THROWS_AS(frobenius_class(-84, prime_above(-84, 13).primary),
                    std::invalid_argument);

    // the product class of two split primes carries the componentwise
    // product vector: identify classes through reduced forms
    auto form_of = [](const QIdeal& I) {
        // I = a Z + (b + w) Z -> (a, 2b + D, *) reduced
        i64 a = I.a.get_si();
        i64 B = 2 * I.b.get_si() + I.D;
        return reduce(QuadForm{a, B, (B * B - I.D) / (4 * a)});
    };
    for (i64 D : {-84, -120}) {
        std::vector<std::pair<QIdeal, std::array<int, 3>>> seen;
        for (i64 p = 3; p < 500 && seen.size() < 6; ++p) {
            if (!is_prime(p) || (2 * D) % p == 0 || kronecker_symbol(D, p) != 1) continue;
            auto pa = prime_above(D, p);
            seen.emplace_back(pa.primary, frobenius_class(D, pa.primary));
        }
        for (size_t i = 0; i < seen.size(); ++i)
            for (size_t j = i; j < seen.size(); ++j) {
                QuadForm prod = compose(form_of(seen[i].first), form_of(seen[j].first));
                std::array<int, 3> expect{};
                for (int k = 0; k < 3; ++k)
                    expect[k] = seen[i].second[k] * seen[j].second[k];
                // find some split prime in the product class and compare
                bool checked = false;
                for (i64 p = 3; p < 2000 && !checked; ++p) {
                    if (!is_prime(p) || (2 * D) % p == 0 || kronecker_symbol(D, p) != 1)
                        continue;
                    auto pa = prime_above(D, p);
                    if (form_of(pa.primary) == prod) {
                        CHECK(frobenius_class(D, pa.primary) == expect);
                        checked = true;
                    }
                }
                CHECK(checked);
            }
    }
}
