#include <doctest.h>

#include "oracles.hpp"
#include "qsplit/forms.hpp"

using namespace qsplit;

TEST_CASE("form reduction") {
    CHECK(reduce(QuadForm{1, 0, 21}) == QuadForm{1, 0, 21});
    CHECK(reduce(QuadForm{3, 0, 7}) == QuadForm{3, 0, 7});

    QuadForm f{21, 42, 22};
    REQUIRE(f.discriminant() == -84);
    QuadForm r = reduce(f);
    CHECK(is_reduced(r));
    CHECK(r.discriminant() == -84);
    CHECK(r == QuadForm{1, 0, 21});

    CHECK_THROWS_AS(reduce(QuadForm{1, 0, -3}), std::invalid_argument);
}

TEST_CASE("composition basics") {
    for (i64 D : {-84, -23, -47, -120}) {
        QuadForm e = principal_form(D);
        ClassGroup G = class_group(D);
        for (const auto& f : G.elements) {
            CHECK(compose(e, f) == reduce(f));
            CHECK(compose(f, form_inverse(f)) == reduce(e));
        }
    }
    CHECK_THROWS_AS(compose(principal_form(-84), principal_form(-20)),
                    std::invalid_argument);
}

TEST_CASE("every class of D = -84 is self-inverse") {
    ClassGroup G = class_group(-84);
    REQUIRE(G.order() == 4);
    CHECK(G.is_c2c2());
    for (const auto& f : G.elements) CHECK(compose(f, f) == principal_form(-84));
}

TEST_CASE("the class of (2,1,3) has order 3 for D = -23") {
    ClassGroup G = class_group(-23);
    CHECK(G.order() == 3);
    CHECK(G.structure == std::vector<i64>{3});
    CHECK(form_order(QuadForm{2, 1, 3}) == 3);
}

TEST_CASE("class numbers against the Dirichlet formula and form counts") {
    CHECK(class_group(-3).is_trivial());
    CHECK(class_group(-47).structure == std::vector<i64>{5});
    for (i64 D = -500; D < 0; ++D) {
        if (!is_fundamental_discriminant(D)) continue;
        ClassGroup G = class_group(D);
        CHECK(G.order() == oracle::class_number_dirichlet(D));
        CHECK(G.order() == oracle::reduced_form_count(D));
        i64 prod = 1;
        for (i64 d : G.structure) prod *= d;
        CHECK(prod == G.order());
        for (size_t i = 1; i < G.structure.size(); ++i)
            CHECK(G.structure[i] % G.structure[i - 1] == 0);
    }
}

TEST_CASE("discriminant sweeps") {
    auto h1 = discriminants_with_class_group(GroupShape::Trivial, 200, false);
    CHECK(h1 == std::vector<i64>{-3, -4, -7, -8, -11, -19, -43, -67, -163});

    auto c2 = discriminants_with_class_group(GroupShape::C2, 500, false);
    CHECK(c2.size() == 18);

    auto c22 = discriminants_with_class_group(GroupShape::C2xC2, 1500, false);
    CHECK(c22.size() == 24);
    CHECK(c22.front() == -84);
    CHECK(c22.back() == -1435);
}

TEST_CASE("exceptional discriminants") {
    CHECK(is_exceptional(-340));
    CHECK(!is_exceptional(-84));
    CHECK(!is_exceptional(-4)); // t = 1 excluded
    CHECK(!is_exceptional(-520));
    // -340 is the only exceptional one on the C2 x C2 list
    auto c22 = discriminants_with_class_group(GroupShape::C2xC2, 1500, false);
    std::vector<i64> exceptional;
    for (i64 D : c22)
        if (is_exceptional(D)) exceptional.push_back(D);
    CHECK(exceptional == std::vector<i64>{-340});
}

TEST_CASE("genus data") {
    GenusData g = genus_data(-340);
    CHECK(g.prime_discs == std::array<i64, 3>{-4, 5, 17});
    CHECK(g.radicands == std::array<i64, 3>{-1, 5, 17});

    GenusData g84 = genus_data(-84);
    CHECK(g84.prime_discs == std::array<i64, 3>{-3, -4, -7});
    CHECK(g84.radicands == std::array<i64, 3>{-3, -1, -7});

    GenusData g195 = genus_data(-195);
    CHECK(g195.prime_discs == std::array<i64, 3>{-3, 5, 13});

    CHECK_THROWS_AS(genus_data(-23), std::invalid_argument);
}

TEST_CASE("artin vectors") {
    CHECK(artin_vector(-84, 5) == std::array<int, 3>{-1, 1, -1});
    CHECK(artin_vector(-84, 11) == std::array<int, 3>{-1, -1, 1});
    CHECK_THROWS_AS(artin_vector(-84, 13), std::invalid_argument); // inert
    CHECK_THROWS_AS(artin_vector(-84, 7), std::invalid_argument);  // ramified

    // sign product is +1 for every split prime
    for (i64 D : {-84, -120, -195}) {
        for (i64 p = 3; p < 300; ++p) {
            if (!is_prime(p) || (2 * D) % p == 0 || kronecker_symbol(D, p) != 1) continue;
            auto v = artin_vector(D, p);
            CHECK(v[0] * v[1] * v[2] == 1);
        }
    }
}
