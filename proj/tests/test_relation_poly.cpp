#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "relnum/poly_matrix.hpp"
#include "relnum/sturm.hpp"

using namespace relnum;

TEST_CASE("power_matrix recurrence") {
    PolyMat2 m1 = power_matrix(1);
    CHECK(m1.t == IntPoly{1});
    CHECK(m1.u == IntPoly{-1});
    CHECK(m1.m == IntPoly{0, 1});
    CHECK(m1.l == IntPoly{1, -1});

    PolyMat2 m2 = power_matrix(2);
    CHECK(m2.u == IntPoly{-2, 1});       // alpha - 2
    CHECK(m2.l == IntPoly{1, -3, 1});    // alpha^2 - 3 alpha + 1

    CHECK_THROWS_AS(power_matrix(0), Error);

    SECTION("determinant identity and degrees up to 25") {
        for (int n = 1; n <= 25; ++n) {
            PolyMat2 pm = power_matrix(n);
            CHECK(pm.t * pm.l - pm.u * pm.m == IntPoly{1});
            CHECK(pm.u.degree() == n - 1);
            CHECK(pm.l.degree() == n);
            Int lead = (n % 2 == 0) ? 1 : -1;
            CHECK(pm.u.lc() == lead);
            CHECK(pm.l.lc() == lead);
        }
    }

    SECTION("no common roots: resultant(u_n, l_n) != 0 for n <= 25") {
        for (int n = 1; n <= 25; ++n) {
            PolyMat2 pm = power_matrix(n);
            CHECK(resultant(pm.u, pm.l) != 0);
        }
    }

    SECTION("polynomial matrix evaluated at alpha equals the scalar power") {
        test::Rng rng(7401);
        for (int i = 0; i < 40; ++i) {
            int n = 1 + static_cast<int>(test::rand_int(rng, 0, 11).convert_to<long long>());
            Scalar alpha(test::rand_nonzero_rational(rng, 9, 5));
            PolyMat2 pm = power_matrix(n);
            ScalarMat2 direct = pow(gen_B(alpha) * gen_A().inverse(), Int(n));
            CHECK(evaluate(pm.t, alpha) == direct.a);
            CHECK(evaluate(pm.u, alpha) == direct.b);
            CHECK(evaluate(pm.m, alpha) == direct.c);
            CHECK(evaluate(pm.l, alpha) == direct.d);
        }
    }

    SECTION("continued-fraction step as a polynomial identity") {
        // u_{n+1} (alpha (u_n - l_n) + l_n) = l_{n+1} (u_n - l_n)
        IntPoly x = IntPoly::variable();
        for (int n = 1; n <= 10; ++n) {
            PolyMat2 a = power_matrix(n);
            PolyMat2 b = power_matrix(n + 1);
            IntPoly diff = a.u - a.l;
            CHECK(b.u * (x * diff + a.l) == b.l * diff);
        }
    }
}

TEST_CASE("relation polynomials") {
    CHECK(relation_poly(1) == IntPoly{-3, 1});
    CHECK(relation_poly(2) == IntPoly{5, -5, 1});
    CHECK(evaluate(relation_poly(1), BigRational(3)) == BigRational(0));

    SECTION("p_3 is a monic cubic with alternating signs") {
        IntPoly p3 = relation_poly(3);
        CHECK(p3.degree() == 3);
        CHECK(p3.is_monic());
        for (int k = 0; k <= 3; ++k) {
            int expected = (3 - k) % 2 == 0 ? 1 : -1;
            CHECK(p3.c[k].sign() == expected);
        }
    }

    SECTION("monic degree n with sign pattern (-1)^(n-k), n <= 25") {
        for (int n = 1; n <= 25; ++n) {
            IntPoly p = relation_poly(n);
            CHECK(p.degree() == n);
            CHECK(p.is_monic());
            for (int k = 0; k <= n; ++k) {
                int expected = (n - k) % 2 == 0 ? 1 : -1;
                CHECK(p.c[k].sign() == expected);
            }
        }
    }

    SECTION("p_n(4) = 1 for n <= 25") {
        for (int n = 1; n <= 25; ++n)
            CHECK(evaluate(relation_poly(n), BigRational(4)) == BigRational(1));
    }
}

TEST_CASE("wronskian") {
    CHECK(wronskian(1) == IntPoly{-1});

    SECTION("sign-definite negative for n <= 10") {
        for (int n = 1; n <= 10; ++n) {
            IntPoly w = wronskian(n);
            CHECK(sign_at(w, BigRational(0)) == -1);
            CHECK(count_all_roots(sturm_chain(squarefree_part(w))) == 0);
        }
    }
}

TEST_CASE("preimage polynomials") {
    CHECK_THROWS_AS(preimage_poly(3, BigRational(0)), DegenerateTarget);

    SECTION("t = 1/2 recovers the relation polynomial up to sign") {
        for (int n = 1; n <= 12; ++n) {
            IntPoly q = preimage_poly(n, BigRational(1, 2));
            IntPoly p = relation_poly(n);
            CHECK(q == (n % 2 == 1 ? p : -p));
        }
    }

    SECTION("t = 1 gives u_{n+1}") {
        for (int n = 1; n <= 10; ++n)
            CHECK(preimage_poly(n, BigRational(1)) == power_matrix(n + 1).u);
    }

    SECTION("t = 1/3, n = 4: degree 4 with four real roots") {
        IntPoly q = preimage_poly(4, BigRational(1, 3));
        CHECK(q.degree() == 4);
        CHECK(count_all_roots(sturm_chain(q)) == 4);
    }

    SECTION("degree is exactly n for nonzero targets") {
        test::Rng rng(7402);
        for (int i = 0; i < 50; ++i) {
            int n = 1 + static_cast<int>(test::rand_int(rng, 0, 9).convert_to<long long>());
            BigRational t = test::rand_nonzero_rational(rng, 9, 5);
            CHECK(preimage_poly(n, t).degree() == n);
        }
    }
}
