#include <doctest.h>

#include <random>

#include "qsplit/multiquad.hpp"

using namespace qsplit;

namespace {

MQElement from_coords(const MQField& F, std::vector<i64> coords) {
    MQElement e{F, {}};
    for (size_t i = 0; i < coords.size(); ++i) e.coords[i] = coords[i];
    return e;
}

} // namespace

TEST_CASE("multiquadratic arithmetic basics") {
    MQField F = make_mq_field({2, 3});
    // basis: 1, sqrt2, sqrt3, sqrt6
    MQElement s2 = from_coords(F, {0, 1, 0, 0});
    MQElement s3 = from_coords(F, {0, 0, 1, 0});
    CHECK(mq_mul(mq_add(s2, s3), mq_sub(s2, s3)) == mq_rational(F, -1));

    MQField F5 = make_mq_field({5});
    MQElement s5 = from_coords(F5, {0, 1});
    MQElement inv = mq_inv(s5);
    CHECK(mq_mul(inv, s5) == mq_rational(F5, 1));
    CHECK(inv.coords[1] == mpq_class(1, 5)); // sqrt5 / 5

    MQElement one_s2_s3 = mq_add(mq_rational(F, 1), mq_add(s2, s3));
    CHECK(mq_full_norm(one_s2_s3) == -8);
}

TEST_CASE("multiquadratic multiplication is commutative and associative") {
    MQField F = make_mq_field({-3, -1, -7});
    std::mt19937 rng(4242);
    std::uniform_int_distribution<i64> dist(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        MQElement a{F, {}}, b{F, {}}, c{F, {}};
        for (int s = 0; s < 8; ++s) {
            a.coords[s] = dist(rng);
            b.coords[s] = dist(rng);
            c.coords[s] = dist(rng);
        }
        CHECK(mq_mul(a, b) == mq_mul(b, a));
        CHECK(mq_mul(mq_mul(a, b), c) == mq_mul(a, mq_mul(b, c)));
    }
}

TEST_CASE("galois action respects multiplication and fixes norms") {
    MQField F = make_mq_field({-3, -1, -7});
    std::mt19937 rng(9001);
    std::uniform_int_distribution<i64> dist(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        MQElement a{F, {}}, b{F, {}};
        for (int s = 0; s < 8; ++s) {
            a.coords[s] = dist(rng);
            b.coords[s] = dist(rng);
        }
        for (int eps = 0; eps < 8; ++eps)
            CHECK(mq_galois(mq_mul(a, b), eps) ==
                  mq_mul(mq_galois(a, eps), mq_galois(b, eps)));
        if (!a.is_zero())
            for (int eps = 0; eps < 8; ++eps)
                CHECK(mq_full_norm(mq_galois(a, eps)) == mq_full_norm(a));
    }
}

TEST_CASE("mq_sqrt examples") {
    MQField F = make_mq_field({2, 3});
    MQElement beta = from_coords(F, {5, 0, 0, 2}); // 5 + 2 sqrt6
    auto r = mq_sqrt(beta);
    REQUIRE(r.has_value());
    CHECK(*r == from_coords(F, {0, 1, 1, 0})); // sqrt2 + sqrt3

    MQField F3 = make_mq_field({3});
    CHECK(!mq_sqrt(mq_rational(F3, 2)).has_value());
}

TEST_CASE("mq_sqrt round trips") {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<i64> dist(-6, 6);
    std::vector<MQField> fields{make_mq_field({2}), make_mq_field({-1, 5}),
                                make_mq_field({-3, -1, -7}),
                                make_mq_field({-1, 5, 17})};
    int done = 0;
    while (done < 200) {
        const MQField& F = fields[done % fields.size()];
        MQElement x{F, {}};
        for (int s = 0; s < F.dim(); ++s) x.coords[s] = dist(rng);
        if (x.is_zero()) continue;
        ++done;
        auto r = mq_sqrt(mq_mul(x, x));
        REQUIRE(r.has_value());
        CHECK((*r == x || *r == mq_neg(x)));
    }
}

TEST_CASE("classical cyclic quartic: Q(sqrt(2 + sqrt2)) over Q(sqrt2)") {
    MQField F = make_mq_field({2});
    MQElement delta = from_coords(F, {2, 1});
    auto k = make_rel_quad_ext(F, delta);
    REQUIRE(k.has_value());
    // gamma^2 = (2 - sqrt2)/(2 + sqrt2) = (sqrt2 - 1)^2
    MQElement g = k->gamma[1];
    CHECK(mq_mul(g, g) == mq_div(mq_galois(delta, 1), delta));
    CHECK(gal_structure_over_L(*k, 1) == GalQuartic::C4);

    // delta in the base field: biquadratic, not cyclic
    auto k2 = make_rel_quad_ext(F, mq_rational(F, 3));
    REQUIRE(k2.has_value());
    CHECK(gal_structure_over_L(*k2, 1) == GalQuartic::C2xC2);
}

TEST_CASE("handmade k for D = -84 matches the verified Galois data") {
    // H = Q(sqrt(-3), sqrt(-1), sqrt(-7)), delta = -3 - sqrt(-3)
    MQField H = make_mq_field({-3, -1, -7});
    MQElement delta = from_coords(H, {-3, -1, 0, 0, 0, 0, 0, 0});
    auto k = make_rel_quad_ext(H, delta);
    REQUIRE(k.has_value());

    // sigma_5 = (-1, +1, -1) flips sqrt(-3) and sqrt(-7): C4
    CHECK(gal_structure_over_L(*k, 0b101) == GalQuartic::C4);
    // sigma_11 = (-1, -1, +1): C2 x C2
    CHECK(gal_structure_over_L(*k, 0b011) == GalQuartic::C2xC2);
    // F_1 = Q(sqrt 21) (mask {0, 2}): k/F_1 non-abelian
    CHECK(!is_abelian_over_F(*k, 0b101));
    // F_2 = Q(sqrt 3) (mask {0, 1}): k/F_2 abelian
    CHECK(is_abelian_over_F(*k, 0b011));
    // the cocycle is non-symmetric on Gal(k/M), so k/M is non-abelian
    bool sym = true;
    for (int s = 0; s < 8 && sym; ++s)
        for (int t = 0; t < 8 && sym; ++t) {
            auto even = [](int mask) { return __builtin_popcount(mask & 7) % 2 == 0; };
            if (!even(s) || !even(t)) continue;
            if (k->c(s, t) != k->c(t, s)) sym = false;
        }
    CHECK(!sym);
}

TEST_CASE("find_delta on the genus field of D = -84") {
    MQField H = make_mq_field({-3, -1, -7});
    RelQuadExt k = find_delta(H, 0b111, 60);
    // first hit: delta = -sqrt(-3); the ratios sigma(delta)/delta are +-1
    // and -1 is a square in H, while gamma = i makes k/M non-abelian
    CHECK(k.delta_subfield == -3);
    CHECK(k.delta_u == 0);
    CHECK(k.delta_v == -1);

    // rational delta candidates are rejected: a later hit differs
    RelQuadExt k2 = find_delta(H, 0b111, 60, 1);
    CHECK(!(k2.delta_u == k.delta_u && k2.delta_v == k.delta_v &&
            k2.delta_subfield == k.delta_subfield));

    // exhaustion is reported distinctly
    CHECK_THROWS_AS(find_delta(H, 0b111, 60, 100000), DeltaSearchExhausted);
}

TEST_CASE("cocycle table identities") {
    MQField H = make_mq_field({-3, -1, -7});
    RelQuadExt k = find_delta(H, 0b111, 60);
    for (int s = 0; s < 8; ++s) {
        CHECK(k.c(0, s) == 1);
        CHECK(k.c(s, 0) == 1);
        // gamma consistency: gamma_s * s(gamma_t) = c * gamma_{st}
        for (int t = 0; t < 8; ++t) {
            MQElement lhs = mq_mul(k.gamma[s], mq_galois(k.gamma[t], s));
            MQElement rhs = mq_mul(k.gamma[s ^ t], mq_rational(H, k.c(s, t)));
            CHECK(lhs == rhs);
        }
    }
}
