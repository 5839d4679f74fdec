#include <random>
#include <vector>

#include "doctest.h"
#include "hilbnode/artin.hpp"
#include "hilbnode/scalar.hpp"
#include "hilbnode/upoly.hpp"

using namespace hilbnode;

TEST_CASE("prime field basics") {
    Scalar one = Scalar::fp(2, 1);
    CHECK((one + one).is_zero());  // characteristic 2
    CHECK(Scalar::fp(7, 3) * Scalar::fp(7, 5) == Scalar::fp(7, 1));
    CHECK(Scalar::fp(5, -1) == Scalar::fp(5, 4));
    CHECK_THROWS_AS(Scalar::fp(7, 0).inv(), FieldError);
    CHECK_THROWS_AS(Scalar::fp(7, 1) + Scalar::fp(5, 1), FieldError);
}

TEST_CASE("rational basics") {
    Scalar q = Scalar::rational(2, 3);
    CHECK(q.inv() == Scalar::rational(3, 2));
    CHECK(Scalar::rational(1, 3) + Scalar::rational(1, 6) == Scalar::rational(1, 2));
    CHECK_THROWS_AS(Scalar::rational(0).inv(), FieldError);
}

TEST_CASE("rational function gcd cancellation") {
    FieldCtx ka = FieldCtx::rat_fn_over(FieldCtx::rationals());
    Scalar a = ka.indeterminate();
    Scalar num = a * a - ka.one();        // a^2 - 1
    Scalar den = a - ka.one();            // a - 1
    Scalar red = num / den;
    CHECK(red == a + ka.one());
    // stored representation is reduced with monic denominator
    CHECK(red.fn().den.size() == 1);
    CHECK(red.fn().den[0].is_one());
}

TEST_CASE("field axioms exhaustively over F_2 and F_3") {
    for (std::uint64_t p : {2ull, 3ull}) {
        std::vector<Scalar> elems;
        for (std::uint64_t v = 0; v < p; ++v) elems.push_back(Scalar::fp(p, static_cast<long long>(v)));
        for (const auto& a : elems)
            for (const auto& b : elems)
                for (const auto& c : elems) {
                    CHECK((a * b) * c == a * (b * c));
                    CHECK((a + b) + c == a + (b + c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
        for (const auto& a : elems)
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("field axioms randomized over Q") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> d(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        long long dn = d(rng), dd = d(rng);
        Scalar a = Scalar::rational(d(rng), dd == 0 ? 1 : dd);
        Scalar b = Scalar::rational(d(rng), dn == 0 ? 1 : dn);
        Scalar c = Scalar::rational(d(rng), 7);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("artin scalars truncate and detect units") {
    FieldCtx f2 = FieldCtx::prime(2);
    ArtinScalar e2 = ArtinScalar::eps(f2, 2);
    ArtinScalar one(f2.one(), 2);
    CHECK((one + e2).is_unit());
    CHECK_FALSE(ArtinScalar::eps(f2, 3).is_unit());
    CHECK((e2 * e2).is_zero());  // eps^2 = 0 in order 2

    ArtinScalar e3 = ArtinScalar::eps(FieldCtx::rationals(), 3);
    CHECK_FALSE((e3 * e3).is_zero());
    CHECK((e3 * e3 * e3).is_zero());

    ArtinScalar u = one + e2;
    CHECK((u * u.inv()) == one);
}

TEST_CASE("non-units of an artin algebra form the maximal ideal") {
    FieldCtx f3 = FieldCtx::prime(3);
    const int n = 3;
    std::vector<ArtinScalar> all;
    for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = 0; c1 < 3; ++c1)
            for (int c2 = 0; c2 < 3; ++c2)
                all.push_back(ArtinScalar::from_coeffs({Scalar::fp(3, c0), Scalar::fp(3, c1), Scalar::fp(3, c2)}));
    for (const auto& a : all) {
        ArtinScalar en = ArtinScalar::eps(f3, n);
        ArtinScalar p = en;
        for (int k = 1; k < n; ++k) p = p * en;
        CHECK(p.is_zero());  // eps^n = 0 exactly
        for (const auto& b : all) {
            if (!a.is_unit() && !b.is_unit()) CHECK_FALSE((a + b).is_unit());
            if (!a.is_unit()) CHECK_FALSE((a * b).is_unit());
        }
    }
}

TEST_CASE("rational function limits") {
    FieldCtx base = FieldCtx::rationals();
    FieldCtx ka = FieldCtx::rat_fn_over(base);
    Scalar a = ka.indeterminate();
    Scalar one = ka.one();

    auto limit = [&](std::vector<Scalar> v, LimitPoint at) { return rational_function_limit(v, at); };

    CHECK(limit({one, a}, LimitPoint::AtZero) == std::vector<Scalar>{base.one(), base.zero()});
    CHECK(limit({one, a}, LimitPoint::AtInfinity) == std::vector<Scalar>{base.zero(), base.one()});
    CHECK(limit({a, a * a + a}, LimitPoint::AtZero) == std::vector<Scalar>{base.one(), base.one()});
    CHECK_THROWS_AS(rational_function_limit({ka.zero()}, LimitPoint::AtZero), FieldError);
}

TEST_CASE("limit is projectively invariant") {
    FieldCtx base = FieldCtx::prime(5);
    FieldCtx ka = FieldCtx::rat_fn_over(base);
    Scalar a = ka.indeterminate();
    std::vector<Scalar> v = {a * a + a, a, ka.from_int(3) * a * a * a};
    for (LimitPoint at : {LimitPoint::AtZero, LimitPoint::AtInfinity}) {
        std::vector<Scalar> base_lim = rational_function_limit(v, at);
        for (Scalar c : {a, a * a, (a + ka.one()) / a, ka.from_int(2)}) {
            std::vector<Scalar> w = v;
            for (auto& e : w) e *= c;
            std::vector<Scalar> lim = rational_function_limit(w, at);
            // lim must be a nonzero scalar multiple of base_lim
            Scalar ratio = base.zero();
            bool ok = true;
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (base_lim[k].is_zero() != lim[k].is_zero()) ok = false;
                if (!ok) break;
                if (base_lim[k].is_zero()) continue;
                Scalar r = lim[k] / base_lim[k];
                if (ratio.is_zero())
                    ratio = r;
                else if (ratio != r)
                    ok = false;
            }
            CHECK(ok);
            CHECK_FALSE(ratio.is_zero());
        }
    }
}
