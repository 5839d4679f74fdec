#include <random>

#include "doctest.h"
#include "hilbnode/node_series.hpp"

using namespace hilbnode;

namespace {

FieldSeries mono_x(int n, int k, const FieldCtx& ctx) { return FieldSeries::monomial_x(n, k, ctx.one()); }
FieldSeries mono_y(int n, int k, const FieldCtx& ctx) { return FieldSeries::monomial_y(n, k, ctx.one()); }

FieldSeries random_series(int n, const FieldCtx& ctx, std::mt19937_64& rng, std::uint64_t p) {
    FieldSeries s(n, ctx.zero());
    auto pick = [&] { return ctx.from_int(static_cast<long long>(rng() % p)); };
    s.set_c(pick());
    for (int i = 1; i <= n; ++i) {
        s.set_x(i, pick());
        s.set_y(i, pick());
    }
    return s;
}

}  // namespace

TEST_CASE("absolute ring kills cross terms") {
    FieldCtx q = FieldCtx::rationals();
    const int n = 3;
    CHECK((mono_x(n, 1, q) * mono_y(n, 1, q)).is_zero());  // x*y = 0

    FieldSeries one_x = FieldSeries::constant(n, q.one()) + mono_x(n, 1, q);
    FieldSeries one_y = FieldSeries::constant(n, q.one()) + mono_y(n, 1, q);
    FieldSeries expect = FieldSeries::constant(n, q.one()) + mono_x(n, 1, q) + mono_y(n, 1, q);
    CHECK(one_x * one_y == expect);  // (1+x)(1+y) = 1+x+y
}

TEST_CASE("relative ring multiplies through xy = t") {
    FieldCtx q = FieldCtx::rationals();
    ArtinScalar eps = ArtinScalar::eps(q, 2);
    ArtinScalar zero = eps.zero_like();
    ArtinScalar one = eps.one_like();
    const int n = 3;
    ArtinSeries x = ArtinSeries::monomial_x(n, 1, one, RingMode::Relative, eps);
    ArtinSeries y = ArtinSeries::monomial_y(n, 1, one, RingMode::Relative, eps);
    ArtinSeries prod = x * y;
    CHECK(prod.c() == eps);  // x*y = t
    CHECK(prod == ArtinSeries::constant(n, eps, RingMode::Relative, eps));

    // x^2 * y = t x
    ArtinSeries x2 = ArtinSeries::monomial_x(n, 2, one, RingMode::Relative, eps);
    ArtinSeries tx = ArtinSeries::monomial_x(n, 1, eps, RingMode::Relative, eps);
    CHECK(x2 * y == tx);

    CHECK_THROWS_AS(ArtinSeries(n, zero, RingMode::Relative, one), FieldError);  // unit t rejected
}

TEST_CASE("mixed modes are rejected") {
    FieldCtx q = FieldCtx::rationals();
    FieldSeries abs = mono_x(3, 1, q);
    FieldSeries shorter = mono_x(2, 1, q);
    CHECK_THROWS_AS(abs * shorter, FieldError);
}

TEST_CASE("associate normal forms from the worked shapes") {
    FieldCtx q = FieldCtx::rationals();
    const int n = 4;

    // z = y + 3x^2: type (2,1), param 1/3, unit 3
    FieldSeries z = mono_y(n, 1, q) + mono_x(n, 2, q).scalar_mul(q.from_int(3));
    auto [t, u] = associate_normal_form(z);
    CHECK(t.alpha == 2);
    CHECK(t.beta == 1);
    CHECK(t.param == Scalar::rational(1, 3));
    CHECK(u.c() == q.from_int(3));
    CHECK(u * normal_form_series(t, n, q) == z);

    // z = x^2 + x^3: type (2,0), unit 1+x
    FieldSeries z2 = mono_x(n, 2, q) + mono_x(n, 3, q);
    auto [t2, u2] = associate_normal_form(z2);
    CHECK(t2.alpha == 2);
    CHECK(t2.beta == 0);
    CHECK(u2 == FieldSeries::constant(n, q.one()) + mono_x(n, 1, q));
    CHECK(u2 * normal_form_series(t2, n, q) == z2);

    // z = 2x + 2x^2 + 6y^3: type (1,3), param 3
    FieldSeries z3 = mono_x(n, 1, q).scalar_mul(q.from_int(2)) + mono_x(n, 2, q).scalar_mul(q.from_int(2)) +
                     mono_y(n, 3, q).scalar_mul(q.from_int(6));
    auto [t3, u3] = associate_normal_form(z3);
    CHECK(t3.alpha == 1);
    CHECK(t3.beta == 3);
    CHECK(t3.param == q.from_int(3));
    CHECK(u3 * normal_form_series(t3, n, q) == z3);

    CHECK_THROWS_AS(associate_normal_form(FieldSeries(n, q.zero())), FieldError);
    CHECK_THROWS_AS(associate_normal_form(FieldSeries::constant(n, q.one()) + mono_x(n, 1, q)), FieldError);
}

TEST_CASE("associate type is a unit-action invariant, exhaustive over F_2 and F_3") {
    for (std::uint64_t p : {2ull, 3ull}) {
        FieldCtx f = FieldCtx::prime(p);
        const int n = 4;
        // enumerate all series with support in degree <= 2 to keep it quick,
        // and all units with support in degree <= 1
        std::vector<FieldSeries> elems;
        for (std::uint64_t c = 0; c < p; ++c)
            for (std::uint64_t b1 = 0; b1 < p; ++b1)
                for (std::uint64_t b2 = 0; b2 < p; ++b2)
                    for (std::uint64_t c1 = 0; c1 < p; ++c1)
                        for (std::uint64_t c2 = 0; c2 < p; ++c2) {
                            FieldSeries s(n, f.zero());
                            s.set_c(f.from_int(static_cast<long long>(c)));
                            s.set_x(1, f.from_int(static_cast<long long>(b1)));
                            s.set_x(2, f.from_int(static_cast<long long>(b2)));
                            s.set_y(1, f.from_int(static_cast<long long>(c1)));
                            s.set_y(2, f.from_int(static_cast<long long>(c2)));
                            elems.push_back(std::move(s));
                        }
        int checked = 0;
        for (const auto& z : elems) {
            if (z.is_zero() || z.is_unit()) continue;
            auto [t, u] = associate_normal_form(z);
            CHECK(u * normal_form_series(t, n, f) == z);
            for (const auto& w : elems) {
                if (!w.is_unit()) continue;
                auto [tw, uw] = associate_normal_form(z * w);
                CHECK(tw == t);
                ++checked;
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("multiplication is commutative and associative (randomized)") {
    FieldCtx f = FieldCtx::prime(5);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        FieldSeries a = random_series(4, f, rng, 5), b = random_series(4, f, rng, 5),
                    c = random_series(4, f, rng, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("x-part of a product depends only on x-parts and constants") {
    FieldCtx f = FieldCtx::prime(3);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        FieldSeries a = random_series(4, f, rng, 3), b = random_series(4, f, rng, 3);
        FieldSeries a2 = a, b2 = b;
        for (int i = 1; i <= 4; ++i) {
            a2.set_y(i, f.zero());
            b2.set_y(i, f.zero());
        }
        FieldSeries p1 = a * b, p2 = a2 * b2;
        CHECK(p1.c() == p2.c());
        for (int i = 1; i <= 4; ++i) CHECK(p1.x(i) == p2.x(i));
    }
}

TEST_CASE("monomial multiples span the expected sets") {
    FieldCtx q = FieldCtx::rationals();
    // z = y + x^2, N = 3: {y+x^2, x^3, y^2, y^3}
    FieldSeries z = mono_y(3, 1, q) + mono_x(3, 2, q);
    auto mults = monomial_multiples(z);
    REQUIRE(mults.size() == 4);
    CHECK(mults[0] == z);
    CHECK(mults[1] == mono_x(3, 3, q));
    CHECK(mults[2] == mono_y(3, 2, q));
    CHECK(mults[3] == mono_y(3, 3, q));

    // z = x, N = 2: {x, x^2}
    auto mx = monomial_multiples(mono_x(2, 1, q));
    REQUIRE(mx.size() == 2);
    CHECK(mx[1] == mono_x(2, 2, q));

    // relative mode keeps t-corrections: x * (y + x^2) = t + x^3
    ArtinScalar eps = ArtinScalar::eps(q, 2);
    ArtinScalar one = eps.one_like();
    ArtinSeries zr = ArtinSeries::monomial_y(3, 1, one, RingMode::Relative, eps) +
                     ArtinSeries::monomial_x(3, 2, one, RingMode::Relative, eps);
    auto mr = monomial_multiples(zr);
    ArtinSeries expect = ArtinSeries::constant(3, eps, RingMode::Relative, eps) +
                         ArtinSeries::monomial_x(3, 3, one, RingMode::Relative, eps);
    CHECK(mr[1] == expect);
}
