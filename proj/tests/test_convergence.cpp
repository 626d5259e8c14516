#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "relnum/convergence.hpp"

using namespace relnum;

namespace {

const BigRational kWidth(Int(1), pow10(12));

Scalar golden_root() { return Scalar::quadratic(BigRational(5, 2), BigRational(1, 2), 5); }

}  // namespace

TEST_CASE("alpha sequence") {
    SECTION("alpha_1 = 3 and alpha_2 = (5 + sqrt(5))/2") {
        auto entries = alpha_sequence(2, kWidth);
        REQUIRE(entries.size() == 2);
        CHECK(entries[0].interval.lo < BigRational(3));
        CHECK(BigRational(3) <= entries[0].interval.hi);
        CHECK(Scalar(entries[1].interval.lo) < golden_root());
        CHECK(golden_root() <= Scalar(entries[1].interval.hi));
        CHECK(entries[1].approx.substr(0, 12) == "3.6180339887");
    }

    SECTION("strictly increasing below 4 for n <= 25") {
        auto entries = alpha_sequence(25, kWidth);
        REQUIRE(entries.size() == 25);
        for (size_t i = 0; i + 1 < entries.size(); ++i)
            CHECK(entries[i].interval.hi < entries[i + 1].interval.lo);
        for (const auto& e : entries) {
            CHECK(e.interval.width() <= kWidth);
            CHECK(e.interval.hi < BigRational(4));
        }
    }

    CHECK_THROWS_AS(alpha_sequence(0, kWidth), Error);
}

TEST_CASE("gap to four") {
    BigRational g1 = gap_to_four(1, kWidth);
    CHECK(BigRational(1) <= g1);
    CHECK(g1 <= BigRational(1) + kWidth);

    // 4 - (5 + sqrt(5))/2 = (3 - sqrt(5))/2
    Scalar true_gap = Scalar(4) - golden_root();
    BigRational g2 = gap_to_four(2, kWidth);
    CHECK(true_gap <= Scalar(g2));
    CHECK(Scalar(g2) <= true_gap + Scalar(kWidth));

    SECTION("nonincreasing in n") {
        BigRational prev = gap_to_four(1, kWidth);
        for (int n = 2; n <= 25; ++n) {
            BigRational cur = gap_to_four(n, kWidth);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("find_N_for_epsilon") {
    CHECK(find_N_for_epsilon(BigRational(1, 2), 25) == 2);
    CHECK(find_N_for_epsilon(BigRational(2), 25) == 1);
    CHECK_FALSE(find_N_for_epsilon(BigRational(Int(1), pow10(6)), 10).has_value());
    CHECK_THROWS_AS(find_N_for_epsilon(BigRational(0), 5), Error);
}

TEST_CASE("orbit of 0 under B_4 A^-1") {
    CHECK(b4_orbit_value(0) == BigRational(0));
    CHECK(b4_orbit_value(1) == BigRational(1, 3));
    CHECK(b4_orbit_value(200) == BigRational(200, 401));
    for (Int n = 1; n <= 50; ++n) {
        BigRational v = b4_orbit_value(n);
        CHECK(v == BigRational(n, 2 * n + 1));
        CHECK(BigRational(0) < v);
        CHECK(v < BigRational(1, 2));
    }
    CHECK_THROWS_AS(b4_orbit_value(-1), Error);
}

TEST_CASE("winding counts") {
    CHECK(winding_count_check(3, BigRational(1, 2)));
    CHECK(winding_count_check(5, BigRational(1, 3)));
    CHECK(winding_count_check(4, BigRational(2)));
    CHECK_THROWS_AS(winding_count_check(3, BigRational(0)), DegenerateTarget);
}

TEST_CASE("clockwise certificates") {
    CHECK(clockwise_check(1));
    for (int n = 2; n <= 10; ++n) CHECK(clockwise_check(n));

    SECTION("negative control: perturbed pair fails") {
        IntPoly u{-1};
        IntPoly l{1, -1, 1};  // l_1 + alpha^2
        CHECK_FALSE(clockwise_pair_check(u, l));
    }
}

TEST_CASE("the two pipelines agree across each root of p_n") {
    BigRational tight(Int(1), pow10(20));
    for (int n = 1; n <= 8; ++n) {
        IntPoly p = relation_poly(n);
        PolyMat2 pm = power_matrix(n);
        IntPoly q = pm.u * Int(2) - pm.l;  // sign flips exactly at roots of p_n
        auto intervals = isolate_all(p);
        REQUIRE(static_cast<int>(intervals.size()) == n);
        for (const auto& iv : intervals) {
            IsolatingInterval r = refine(p, iv, tight);
            int slo = sign_at(q, r.lo);
            int shi = sign_at(q, r.hi);
            CHECK((slo != shi || slo == 0));

            // exact matrix power at the midpoint matches the evaluated entries
            BigRational mid = r.midpoint();
            ScalarMat2 direct = pow(gen_B(Scalar(mid)) * gen_A().inverse(), Int(n));
            CHECK(direct.b == evaluate(pm.u, Scalar(mid)));
            CHECK(direct.d == evaluate(pm.l, Scalar(mid)));
        }
    }
}

TEST_CASE("rotation density scan") {
    CHECK(rotation_density_scan(BigRational(3), BigRational(4), 0).empty());

    auto report = rotation_density_scan(BigRational(3), BigRational(4), 5);
    CHECK(report.size() == 5);
    for (const auto& s : report) {
        CHECK(s.rot > 0.0);
        CHECK(s.rot < 1.0);
    }

    RotationSample at3 = classify_rotation(BigRational(3));
    CHECK(at3.looks_rational);
    CHECK(at3.num == 2);
    CHECK(at3.den == 3);

    RotationSample at72 = classify_rotation(BigRational(7, 2));
    CHECK_FALSE(at72.looks_rational);

    CHECK_THROWS_AS(rotation_density_scan(BigRational(2), BigRational(4), 1), Error);
}
