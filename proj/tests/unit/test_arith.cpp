#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qsplit/arith.hpp"

using namespace qsplit;

TEST_CASE("kronecker symbol matches brute-force Legendre at odd primes") {
    CHECK(kronecker_symbol(5, 7) == -1);
    CHECK(oracle::legendre_brute(5, 7) == -1);
    CHECK(kronecker_symbol(-84, 13) == -1);
    CHECK(oracle::legendre_brute(-84, 13) == -1);
    for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23})
        for (i64 a = -30; a <= 30; ++a)
            CHECK(kronecker_symbol(a, p) == oracle::legendre_brute(a, p));
}

TEST_CASE("kronecker symbol identity and multiplicativity") {
    for (i64 n = 1; n < 40; ++n) CHECK(kronecker_symbol(1, n) == 1);
    // completely multiplicative in a for fixed odd prime n
    std::mt19937 rng(12345);
    std::uniform_int_distribution<i64> dist(-200, 200);
    for (int trial = 0; trial < 200; ++trial) {
        i64 a = dist(rng), b = dist(rng);
        if (a == 0 || b == 0) continue;
        for (i64 p : {7, 13, 31})
            CHECK(kronecker_symbol(a * b, p) ==
                  kronecker_symbol(a, p) * kronecker_symbol(b, p));
    }
    CHECK_THROWS_AS(kronecker_symbol(3, 0), std::invalid_argument);
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part((i64)12) == 3);
    CHECK(squarefree_part((i64)1) == 1);
    CHECK(squarefree_part((i64)-98) == -2);
    mpq_class r(-98, 4);
    r.canonicalize();
    CHECK(squarefree_part(r) == -2);
    CHECK(squarefree_part(mpq_class(5, 9)) == 5);
    CHECK_THROWS_AS(squarefree_part((i64)0), std::invalid_argument);
}

TEST_CASE("hilbert symbol basics") {
    CHECK(hilbert_symbol(-1, -1, Place::at(2)) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::infinity()) == -1);
    for (i64 a : {-7, -2, 3, 10})
        for (auto v : {Place::at(2), Place::at(3), Place::at(5), Place::infinity()})
            CHECK(hilbert_symbol(a, 1, v) == 1);
}

TEST_CASE("hilbert product formula on random rationals") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<i64> dist(-99, 99);
    int done = 0;
    while (done < 500) {
        i64 an = dist(rng), ad = dist(rng), bn = dist(rng), bd = dist(rng);
        if (an == 0 || ad == 0 || bn == 0 || bd == 0) continue;
        ++done;
        mpq_class a(an, ad), b(bn, bd);
        a.canonicalize();
        b.canonicalize();
        i64 as = squarefree_part(a), bs = squarefree_part(b);
        int prod = hilbert_symbol(a, b, Place::infinity()) *
                   hilbert_symbol(a, b, Place::at(2));
        std::set<i64> odd_places;
        for (auto [p, e] : factorize(as))
            if (p != 2) odd_places.insert(p);
        for (auto [p, e] : factorize(bs))
            if (p != 2) odd_places.insert(p);
        for (i64 p : odd_places) prod *= hilbert_symbol(a, b, Place::at(p));
        CHECK(prod == 1);
    }
}

TEST_CASE("quaternion ramification") {
    RamifiedSet h = quaternion_ramification(-1, -1);
    CHECK(h.finite_places == std::vector<i64>{2});
    CHECK(h.infinite_ramified);
    CHECK(h.discriminant() == 2);

    for (i64 b : {-5, 2, 7}) CHECK(quaternion_ramification(1, b).split());

    std::mt19937 rng(5150);
    std::uniform_int_distribution<i64> dist(-60, 60);
    for (int trial = 0; trial < 60; ++trial) {
        i64 a = dist(rng), b = dist(rng);
        if (a == 0 || b == 0) continue;
        a = squarefree_part(a);
        b = squarefree_part(b);
        CHECK(quaternion_ramification(a, b) == quaternion_ramification(b, a));
        i64 c = squarefree_part(-a * b);
        CHECK(quaternion_ramification(a, b) == quaternion_ramification(a, c));
    }
}

TEST_CASE("cornacchia") {
    auto r = cornacchia(1, 13);
    REQUIRE(r.has_value());
    CHECK(*r == std::pair<i64, i64>{3, 2});

    auto s = cornacchia(21, 25, /*four_m=*/true); // x^2 + 21 y^2 = 100
    REQUIRE(s.has_value());
    CHECK(*s == std::pair<i64, i64>{10, 0});

    CHECK(!cornacchia(3, 2).has_value());
    CHECK_THROWS_AS(cornacchia(0, 5), std::invalid_argument);
}

TEST_CASE("fundamental discriminants and prime discriminant factorization") {
    CHECK(is_fundamental_discriminant(-84));
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(8));
    CHECK(!is_fundamental_discriminant(-12)); // -12 = 4 * (-3), -3 = 1 mod 4
    CHECK(!is_fundamental_discriminant(-9));

    CHECK(prime_discriminant_factorization(-84) == std::vector<i64>{-3, -4, -7});
    CHECK(prime_discriminant_factorization(-195) == std::vector<i64>{-3, 5, 13});
    CHECK(prime_discriminant_factorization(8) == std::vector<i64>{8});
    CHECK_THROWS_AS(prime_discriminant_factorization(-12), std::invalid_argument);

    // products compose back to D for every fundamental D in range
    for (i64 D = -300; D < 0; ++D) {
        if (!is_fundamental_discriminant(D)) continue;
        i64 prod = 1;
        for (i64 d : prime_discriminant_factorization(D)) prod *= d;
        CHECK(prod == D);
    }
}
