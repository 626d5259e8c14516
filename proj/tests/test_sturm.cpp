#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracle.hpp"
#include "relnum/sturm.hpp"

using namespace relnum;

namespace {

const IntPoly kP2{5, -5, 1};  // x^2 - 5x + 5

Scalar golden_root() {  // (5 + sqrt(5)) / 2
    return Scalar::quadratic(BigRational(5, 2), BigRational(1, 2), 5);
}

}  // namespace

TEST_CASE("sturm chains") {
    SturmChain linear = sturm_chain(IntPoly{-3, 1});
    CHECK(linear.polys.size() == 2);
    CHECK(linear.polys[1] == IntPoly{1});
    CHECK(count_all_roots(linear) == 1);

    CHECK(count_all_roots(sturm_chain(IntPoly{1, 0, 1})) == 0);
    CHECK(count_all_roots(sturm_chain(kP2)) == 2);
    CHECK(count_all_roots(sturm_chain(IntPoly{7})) == 0);
    CHECK_THROWS_AS(sturm_chain(IntPoly{}), ZeroPoly);

    SECTION("last element is a gcd associate") {
        test::Rng rng(7301);
        for (int i = 0; i < 100; ++i) {
            test::KnownPoly kp = test::random_known_poly(rng);
            if (kp.p.degree() < 1) continue;
            SturmChain chain = sturm_chain(kp.p);
            IntPoly last = chain.polys.back();
            if (last.lc() < 0) last = -last;
            CHECK(primitive_part(last) == poly_gcd(kp.p, derivative(kp.p)));
        }
    }
}

TEST_CASE("count_roots convention: half-open (lo, hi]") {
    // roots 0, 1, 2
    IntPoly p = IntPoly{0, 1} * IntPoly{-1, 1} * IntPoly{-2, 1};
    SturmChain chain = sturm_chain(p);
    CHECK(count_roots(chain, Bound::at(BigRational(0)), Bound::at(BigRational(2))) == 2);
    CHECK(count_roots(chain, Bound::at(BigRational(-1)), Bound::at(BigRational(0))) == 1);
    CHECK(count_roots(chain, Bound::at(BigRational(-1)), Bound::at(BigRational(3))) == 3);
    CHECK(count_roots(chain, Bound::neg_inf(), Bound::at(BigRational(-1, 2))) == 0);
    CHECK(count_roots(chain, Bound::at(BigRational(5)), Bound::pos_inf()) == 0);
    CHECK_THROWS_AS(count_roots(chain, Bound::at(BigRational(1)), Bound::at(BigRational(1))),
                    Error);

    // p_2 has one root in (3, 4)
    CHECK(count_roots(sturm_chain(kP2), Bound::at(BigRational(3)), Bound::at(BigRational(4))) ==
          1);
}

TEST_CASE("isolate_all") {
    SECTION("p_2 separates the two roots") {
        auto intervals = isolate_all(kP2);
        REQUIRE(intervals.size() == 2);
        Scalar lo_root = Scalar(5) - golden_root();  // (5 - sqrt(5)) / 2
        CHECK(Scalar(intervals[0].lo) < lo_root);
        CHECK(lo_root <= Scalar(intervals[0].hi));
        CHECK(Scalar(intervals[1].lo) < golden_root());
        CHECK(golden_root() <= Scalar(intervals[1].hi));
    }

    CHECK(isolate_all(IntPoly{1, 0, 1}).empty());

    SECTION("single integer root") {
        auto intervals = isolate_all(IntPoly{-3, 1});
        REQUIRE(intervals.size() == 1);
        CHECK(intervals[0].lo < BigRational(3));
        CHECK(BigRational(3) <= intervals[0].hi);
    }

    SECTION("non-squarefree input is reduced and reported") {
        IntPoly sq = IntPoly{-1, 1} * IntPoly{-1, 1};
        bool squarefree = true;
        auto intervals = isolate_all(sq, &squarefree);
        CHECK_FALSE(squarefree);
        CHECK(intervals.size() == 1);
        isolate_all(kP2, &squarefree);
        CHECK(squarefree);
    }
}

TEST_CASE("refine") {
    BigRational width(Int(1), pow10(12));

    SECTION("p_2 maximal root to 1e-12") {
        auto intervals = isolate_all(kP2);
        IsolatingInterval iv = refine(kP2, intervals.back(), width);
        CHECK(iv.width() <= width);
        CHECK(Scalar(iv.lo) < golden_root());
        CHECK(golden_root() <= Scalar(iv.hi));
        // 3.618033988749 to twelve places
        CHECK(decimal_string(iv.midpoint(), 13) == "3.618033988749");
    }

    SECTION("exact integer root collapses cleanly") {
        IntPoly p1{-3, 1};
        IsolatingInterval iv = refine(p1, isolate_all(p1).front(), width);
        CHECK(iv.width() <= width);
        CHECK(iv.lo < BigRational(3));
        CHECK(BigRational(3) <= iv.hi);
        SturmChain chain = sturm_chain(p1);
        CHECK(count_roots(chain, Bound::at(iv.lo), Bound::at(iv.hi)) == 1);
    }

    SECTION("idempotent on already-narrow intervals") {
        IsolatingInterval iv = refine(kP2, isolate_all(kP2).back(), width);
        CHECK(refine(kP2, iv, BigRational(1, 2)) == iv);
    }
}

TEST_CASE("max_root") {
    BigRational width(Int(1), pow10(12));
    IsolatingInterval iv1 = max_root(IntPoly{-3, 1}, width);
    CHECK(iv1.lo < BigRational(3));
    CHECK(BigRational(3) <= iv1.hi);

    IsolatingInterval iv2 = max_root(kP2, width);
    CHECK(golden_root() <= Scalar(iv2.hi));

    CHECK_THROWS_AS(max_root(IntPoly{1, 0, 1}, width), NoRealRoot);
}

TEST_CASE("oracle equivalence on constructed polynomials") {
    test::Rng rng(7302);
    int nontrivial = 0;
    for (int i = 0; i < 1000; ++i) {
        test::KnownPoly kp = test::random_known_poly(rng);
        if (kp.p.degree() < 1) {
            CHECK(kp.distinct_real_roots == 0);
            continue;
        }
        ++nontrivial;
        IntPoly sf = squarefree_part(kp.p);
        CHECK(count_all_roots(sturm_chain(sf)) == kp.distinct_real_roots);

        auto intervals = isolate_all(kp.p);
        CHECK(static_cast<int>(intervals.size()) == kp.distinct_real_roots);

        // intervals are disjoint, ascending, and carry the endpoint sign property
        for (size_t k = 0; k + 1 < intervals.size(); ++k)
            CHECK(intervals[k].hi <= intervals[k + 1].lo);
        for (const auto& iv : intervals) {
            CHECK(iv.lo < iv.hi);
            int slo = sign_at(sf, iv.lo);
            int shi = sign_at(sf, iv.hi);
            CHECK((slo != shi || slo == 0));
        }
    }
    CHECK(nontrivial > 700);
}

TEST_CASE("no floating point: wide coefficient stress") {
    // (10^30 x - 1)(x - 10^30): roots 10^-30 and 10^30
    IntPoly a;
    a.c = {Int(-1), pow10(30)};
    IntPoly b;
    b.c = {-pow10(30), Int(1)};
    IntPoly p = a * b;
    auto intervals = isolate_all(p);
    REQUIRE(intervals.size() == 2);
    BigRational tiny(Int(1), pow10(30));
    BigRational huge(pow10(30), Int(1));
    CHECK(intervals[0].lo < tiny);
    CHECK(tiny <= intervals[0].hi);
    CHECK(intervals[1].lo < huge);
    CHECK(huge <= intervals[1].hi);
}
