#include "doctest.h"
#include "hilbnode/ideal.hpp"

using namespace hilbnode;

namespace {

FieldSeries mono_x(int n, int k, const FieldCtx& ctx) { return FieldSeries::monomial_x(n, k, ctx.one()); }
FieldSeries mono_y(int n, int k, const FieldCtx& ctx) { return FieldSeries::monomial_y(n, k, ctx.one()); }

}  // namespace

TEST_CASE("colengths of the basic ideals") {
    FieldCtx q = FieldCtx::rationals();

    // (x^3, y) at N=4: colength 3, quotient basis {1, x, x^2}
    NodeIdeal a = NodeIdeal::from_generators({mono_x(4, 3, q), mono_y(4, 1, q)}, 4);
    CHECK(a.colength() == 3);
    CHECK(a.colength_faithful());
    auto free = a.space().free_coords();
    CHECK(free == std::vector<int>{0, 1, 2});

    // (y + x^2) at N=3: colength 3
    NodeIdeal b = NodeIdeal::from_generators({mono_y(3, 1, q) + mono_x(3, 2, q)}, 3);
    CHECK(b.colength() == 3);

    // (x, y): colength 1
    NodeIdeal c = NodeIdeal::from_generators({mono_x(3, 1, q), mono_y(3, 1, q)}, 3);
    CHECK(c.colength() == 1);

    // (x^2, y^2): colength 3, quotient basis {1, x, y}
    NodeIdeal d = NodeIdeal::from_generators({mono_x(3, 2, q), mono_y(3, 2, q)}, 3);
    CHECK(d.colength() == 3);

    // unit generator: whole ring, colength 0
    NodeIdeal e = NodeIdeal::from_generators({FieldSeries::constant(3, q.one()) + mono_x(3, 1, q)}, 3);
    CHECK(e.colength() == 0);

    // colength stability under raising N
    NodeIdeal b5 = NodeIdeal::from_generators({mono_y(5, 1, q) + mono_x(5, 2, q)}, 5);
    CHECK(b5.colength() == 3);

    // zero-ish ideal: colength exceeds N, flagged unfaithful
    NodeIdeal f = NodeIdeal::from_generators({mono_x(3, 3, q)}, 3);
    CHECK(f.colength() > 3);
    CHECK_FALSE(f.colength_faithful());
}

TEST_CASE("containment checks") {
    FieldCtx q = FieldCtx::rationals();
    const int n = 4;

    // (x^2, y) contains (y + a x^2)
    NodeIdeal q21 = NodeIdeal::from_generators({mono_x(n, 2, q), mono_y(n, 1, q)}, n);
    NodeIdeal i31 = NodeIdeal::from_generators({mono_y(n, 1, q) + mono_x(n, 2, q).scalar_mul(q.from_int(5))}, n);
    CHECK(q21.contains_ideal(i31));
    CHECK_FALSE(i31.contains_ideal(q21));

    // (x^2, y) contains (x^2, y^2)
    NodeIdeal q32 = NodeIdeal::from_generators({mono_x(n, 2, q), mono_y(n, 2, q)}, n);
    CHECK(q21.contains_ideal(q32));

    // (x, y^2) does not contain (y + x^2)
    NodeIdeal q22 = NodeIdeal::from_generators({mono_x(n, 1, q), mono_y(n, 2, q)}, n);
    NodeIdeal c31 = NodeIdeal::from_generators({mono_y(n, 1, q) + mono_x(n, 2, q)}, n);
    CHECK_FALSE(q22.contains_ideal(c31));

    NodeIdeal other_n = NodeIdeal::from_generators({mono_x(3, 1, q)}, 3);
    CHECK_THROWS_AS(q21.contains_ideal(other_n), FieldError);
}

TEST_CASE("classification round trips") {
    FieldCtx q = FieldCtx::rationals();

    // (y + 2x^3) with m=4: C[4,1](2)
    NodeIdeal c = NodeIdeal::from_generators({mono_y(5, 1, q) + mono_x(5, 3, q).scalar_mul(q.from_int(2))}, 5);
    IdealType t = classify(c);
    CHECK(t.str() == "C[4,1](2)");
    CHECK(classify_by_minimal_element(c) == t);

    // (x^2, y^2): Q[3,2]
    NodeIdeal d = NodeIdeal::from_generators({mono_x(4, 2, q), mono_y(4, 2, q)}, 4);
    CHECK(classify(d).str() == "Q[3,2]");

    // (x, y): Q[1,1]
    NodeIdeal e = NodeIdeal::from_generators({mono_x(2, 1, q), mono_y(2, 1, q)}, 2);
    CHECK(classify(e).str() == "Q[1,1]");

    // canonical(classify(I)) == I over F_3, a couple of spot shapes
    FieldCtx f3 = FieldCtx::prime(3);
    for (int m = 1; m <= 4; ++m) {
        for (int i = 1; i <= m; ++i) {
            NodeIdeal can = canonical_ideal(IdealType::q_type(m, i), f3, m + 1);
            CHECK(canonical_ideal(classify(can), f3, m + 1) == can);
            CHECK(classify_by_minimal_element(can) == classify(can));
        }
        for (int i = 1; i <= m - 1; ++i)
            for (long long a = 1; a < 3; ++a) {
                NodeIdeal can = canonical_ideal(IdealType::c_type(m, i, f3.from_int(a)), f3, m + 1);
                CHECK(canonical_ideal(classify(can), f3, m + 1) == can);
                CHECK(classify_by_minimal_element(can) == classify(can));
            }
    }

    // Q^5_3 = (x^3, y^3)
    NodeIdeal q53 = canonical_ideal(IdealType::q_type(5, 3), q, 6);
    CHECK(q53 == NodeIdeal::from_generators({mono_x(6, 3, q), mono_y(6, 3, q)}, 6));

    // I^2_1(1) = (y + x)
    NodeIdeal i21 = canonical_ideal(IdealType::c_type(2, 1, q.one()), q, 3);
    CHECK(i21 == NodeIdeal::from_generators({mono_y(3, 1, q) + mono_x(3, 1, q)}, 3));

    CHECK_THROWS_AS(canonical_ideal(IdealType::q_type(3, 4), q, 5), FieldError);
}

TEST_CASE("flat limits of the C families") {
    for (const FieldCtx& base : {FieldCtx::rationals(), FieldCtx::prime(3)}) {
        for (int m = 2; m <= 6; ++m)
            for (int i = 1; i <= m - 1; ++i) {
                const int n = m + 1;
                NodeIdeal at0 = flat_limit(m, i, LimitPoint::AtZero, base, n);
                NodeIdeal atinf = flat_limit(m, i, LimitPoint::AtInfinity, base, n);
                CHECK(at0.colength() == m);
                CHECK(atinf.colength() == m);
                CHECK(at0 == canonical_ideal(IdealType::q_type(m, i), base, n));
                CHECK(atinf == canonical_ideal(IdealType::q_type(m, i + 1), base, n));
            }
    }
}

TEST_CASE("annihilators of colength-1 quotients") {
    FieldCtx q = FieldCtx::rationals();
    const int n = 3;
    NodeIdeal maximal = NodeIdeal::from_generators({mono_x(n, 1, q), mono_y(n, 1, q)}, n);

    // Ann((x,y)/(x^2,y)) = (x,y)
    NodeIdeal i = NodeIdeal::from_generators({mono_x(n, 2, q), mono_y(n, 1, q)}, n);
    NodeIdeal ann = annihilator_quotient(i, maximal);
    CHECK(ann.colength() == 1);
    CHECK(ann == maximal);

    // I = (y + ax) inside (x,y): colength-1 annihilator
    NodeIdeal c = NodeIdeal::from_generators({mono_y(n, 1, q) + mono_x(n, 1, q).scalar_mul(q.from_int(2))}, n);
    NodeIdeal ann2 = annihilator_quotient(c, maximal);
    CHECK(ann2.colength() == 1);

    CHECK_THROWS_AS(annihilator_quotient(maximal, i), FieldError);
}
