#include <doctest.h>

#include "cremona/errors.hpp"
#include "cremona/gln.hpp"
#include "cremona/monomial_map.hpp"
#include "cremona/sl2.hpp"
#include "support.hpp"

using namespace cremona;
using namespace cremona::sl2;
using namespace testing;

TEST_CASE("LLS period equality is cyclic") {
    CHECK(LLSPeriod{1, 2, 1, 2} == LLSPeriod{2, 1, 2, 1});
    CHECK_FALSE(LLSPeriod{1, 2, 1, 2} == LLSPeriod{1, 2});
    CHECK(LLSPeriod{2, 1, 1, 3} == LLSPeriod{3, 2, 1, 1});
    CHECK_FALSE(LLSPeriod{2, 1, 1, 3} == LLSPeriod{3, 1, 1, 2});
    CHECK(LLSPeriod{1, 2, 1, 2}.minimal_period().same_sequence(LLSPeriod{1, 2}));
    CHECK(LLSPeriod{1, 1}.minimal_period().same_sequence(LLSPeriod{1, 1}));
    CHECK(LLSPeriod{1, 1, 1, 1, 1, 1}.minimal_period().same_sequence(LLSPeriod{1, 1}));
    CHECK(LLSPeriod{2, 1, 1, 3}.minimal_period().size() == 4);
    CHECK(LLSPeriod{2, 1, 1, 3}.rotated(1).same_sequence(LLSPeriod{1, 1, 3, 2}));
    CHECK(LLSPeriod{2, 1, 1, 3}.to_string() == "(2,1,1,3)");
    CHECK_THROWS_AS(LLSPeriod({1, 2, 3}), DomainError);
    CHECK_THROWS_AS(LLSPeriod({1, 0}), DomainError);
    CHECK_THROWS_AS(LLSPeriod(std::vector<Integer>{}), DomainError);
}

TEST_CASE("continued fractions") {
    CHECK(cf_eval({{2, 1, 1}}) == Rational(5, 2));
    CHECK(cf_eval({{1, 2, 1}}) == Rational(4, 3));
    CHECK(cf_eval({{7}}) == 7);
    CHECK(cf_eval({{2, 1, 2}}) == Rational(8, 3));
    CHECK_THROWS_AS(cf_eval({{1, 0}}), DomainError);
    CHECK_THROWS_AS(cf_eval({{1, 1, 0}}), DomainError);

    CHECK(cf_expand_odd(Rational(5, 2)) == std::vector<Integer>{2, 1, 1});
    CHECK(cf_expand_odd(Rational(8, 3)) == std::vector<Integer>{2, 1, 2});
    CHECK(cf_expand_odd(Rational(4, 3)) == std::vector<Integer>{1, 2, 1});
    CHECK(cf_expand_odd(Rational(3, 1)) == std::vector<Integer>{3});
    CHECK_THROWS_AS(cf_expand_odd(Rational(1, 2)), DomainError);
    for (long q = 2; q < 60; ++q)
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const auto t = cf_expand_odd(Rational(q, p));
            CHECK(t.size() % 2 == 1);
            for (const auto& a : t) CHECK(a >= 1);
            CHECK(cf_eval({t}) == Rational(q, p));
        }
}

TEST_CASE("classify examples") {
    const auto c = classify(IntMatrix{{1, 1}, {-1, 0}});
    REQUIRE(std::holds_alternative<ComplexSpectrum>(c));
    CHECK(std::get<ComplexSpectrum>(c).order == 6);
    CHECK(print_map(MonomialMap(std::get<ComplexSpectrum>(c).representative)) == "x*y, 1/x");

    const auto d = classify(IntMatrix{{1, 3}, {0, 1}});
    REQUIRE(std::holds_alternative<DoubleRoot>(d));
    CHECK(std::get<DoubleRoot>(d).root_sign == 1);
    CHECK(std::get<DoubleRoot>(d).n == 3);

    const auto r = classify(IntMatrix{{7, 18}, {5, 13}});
    REQUIRE(std::holds_alternative<RealSpectrum>(r));
    CHECK(std::get<RealSpectrum>(r).eig_sign == 1);
    CHECK(std::get<RealSpectrum>(r).lls.same_sequence(LLSPeriod{2, 1, 1, 3}));

    const auto m = classify(-IntMatrix::identity(2));
    REQUIRE(std::holds_alternative<DoubleRoot>(m));
    CHECK(std::get<DoubleRoot>(m).root_sign == -1);
    CHECK(std::get<DoubleRoot>(m).n == 0);

    const auto neg = classify(IntMatrix{{-1, 5}, {0, -1}});
    CHECK(std::get<DoubleRoot>(neg).n == 5);

    const auto odd = classify(IntMatrix{{0, 1}, {1, 1}});
    REQUIRE(std::holds_alternative<DetMinusOne>(odd));
    CHECK(std::get<DetMinusOne>(odd).char_poly == IntPoly{-1, -1, 1});

    CHECK_THROWS_AS(classify(IntMatrix{{2, 0}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(classify(IntMatrix::identity(3)), DomainError);
}

TEST_CASE("every elliptic matrix lands on one of three representatives") {
    const std::vector<IntMatrix> reps{{{1, 1}, {-1, 0}}, {{0, 1}, {-1, 0}}, {{0, 1}, {-1, -1}}};
    const unsigned orders[] = {6, 4, 3};
    int seen = 0;
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            for (long c = -6; c <= 6; ++c)
                for (long d = -6; d <= 6; ++d) {
                    if (a * d - b * c != 1 || std::abs(a + d) > 1) continue;
                    const IntMatrix m{{a, b}, {c, d}};
                    const auto k = classify(m);
                    REQUIRE(std::holds_alternative<ComplexSpectrum>(k));
                    const auto& cs = std::get<ComplexSpectrum>(k);
                    const long i = 1 - (a + d);
                    CHECK(cs.representative == reps[i]);
                    CHECK(cs.order == orders[i]);
                    CHECK(matrix_order(m) == orders[i]);
                    const auto v = conjugate_2x2(m, reps[i]);
                    REQUIRE(is_conjugate(v));
                    CHECK(verify_certificate(m, reps[i], std::get<Conjugate>(v).certificate));
                    ++seen;
                }
    CHECK(seen == 50);
}

TEST_CASE("classify decides the elliptic and parabolic cases") {
    // brute-force conjugator search on small det-1 matrices
    std::vector<IntMatrix> pool;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long d = -3; d <= 3; ++d)
                    if (a * d - b * c == 1 && std::abs(a + d) <= 2) pool.push_back(IntMatrix{{a, b}, {c, d}});
    int pairs = 0;
    for (int t = 0; t < 400; ++t) {
        const IntMatrix& m = pool[static_cast<std::size_t>(uniform(0, static_cast<long>(pool.size()) - 1))];
        const IntMatrix& n = pool[static_cast<std::size_t>(uniform(0, static_cast<long>(pool.size()) - 1))];
        const bool brute = !brute_conjugators(m, n, 4).empty();
        const auto cm = classify(m), cn = classify(n);
        bool same = cm.index() == cn.index();
        if (same && std::holds_alternative<ComplexSpectrum>(cm))
            same = std::get<ComplexSpectrum>(cm).representative == std::get<ComplexSpectrum>(cn).representative;
        if (same && std::holds_alternative<DoubleRoot>(cm))
            same = std::get<DoubleRoot>(cm).root_sign == std::get<DoubleRoot>(cn).root_sign &&
                   std::get<DoubleRoot>(cm).n == std::get<DoubleRoot>(cn).n;
        const auto v = conjugate_2x2(m, n);
        CHECK(same == is_conjugate(v));
        if (brute) CHECK(is_conjugate(v));
        if (is_conjugate(v)) CHECK(verify_certificate(m, n, std::get<Conjugate>(v).certificate));
        ++pairs;
    }
    CHECK(pairs == 400);
}

TEST_CASE("reduce examples") {
    const ReducedForm r = reduce(IntMatrix{{7, 18}, {5, 13}});
    CHECK(r.reduced == IntMatrix{{2, 7}, {5, 18}});
    CHECK(r.sign == 1);
    CHECK(r.conjugator == IntMatrix{{1, -1}, {0, 1}});

    const ReducedForm same = reduce(IntMatrix{{2, 7}, {5, 18}});
    CHECK(same.reduced == IntMatrix{{2, 7}, {5, 18}});
    CHECK(same.conjugator.is_identity());

    const ReducedForm e = reduce(IntMatrix{{1519, 1164}, {-1964, -1505}});
    CHECK((e.reduced == IntMatrix{{3, 8}, {4, 11}} || e.reduced == IntMatrix{{3, 4}, {8, 11}}));
    CHECK(e.sign == 1);

    const ReducedForm n = reduce(IntMatrix{{-7, -18}, {-5, -13}});
    CHECK(n.sign == -1);
    CHECK(n.reduced == IntMatrix{{2, 7}, {5, 18}});

    CHECK_THROWS_AS(reduce(IntMatrix{{1, 1}, {-1, 0}}), DomainError);
    CHECK_THROWS_AS(reduce(IntMatrix{{1, 1}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(reduce(IntMatrix{{0, 1}, {1, 1}}), DomainError);
}

TEST_CASE("reduce output is reduced and certified") {
    for (int t = 0; t < 1000; ++t) {
        const IntMatrix m = random_hyperbolic(16);
        const ReducedForm r = reduce(m);
        CHECK(is_reduced(r.reduced));
        CHECK(det(r.conjugator) == 1);
        CHECK(r.conjugator * (Integer(r.sign) * m) == r.reduced * r.conjugator);
        CHECK(r.sign == sgn(m.trace()));
    }
}

TEST_CASE("reduce handles large entries") {
    IntMatrix m = IntMatrix::identity(2);
    for (int i = 0; i < 300; ++i) m = m * (i % 3 ? IntMatrix{{1, 1}, {0, 1}} : IntMatrix{{1, 0}, {2, 1}});
    const IntMatrix p = random_sl2_word(40);
    const IntMatrix n = p * m * inverse_unimodular(p);
    const ReducedForm r = reduce(n);
    CHECK(is_reduced(r.reduced));
    CHECK(lls_period(n) == lls_period(m));
}

TEST_CASE("lls examples") {
    CHECK(lls_period(IntMatrix{{7, 18}, {5, 13}}).same_sequence(LLSPeriod{2, 1, 1, 3}));
    CHECK(lls_period(IntMatrix{{1519, 1164}, {-1964, -1505}}) == LLSPeriod{1, 2, 1, 2});
    CHECK(lls_period(IntMatrix{{0, -1}, {1, 4}}).same_sequence(LLSPeriod{1, 2}));
    CHECK(lls_of_reduced(IntMatrix{{0, -1}, {1, 4}}).same_sequence(LLSPeriod{1, 2}));
    CHECK_THROWS_AS(lls_of_reduced(IntMatrix{{7, 18}, {5, 13}}), DomainError);
}

TEST_CASE("realize examples") {
    CHECK(realize(LLSPeriod{1, 2, 1, 2}) == IntMatrix{{3, 8}, {4, 11}});
    CHECK(realize(LLSPeriod{2, 1, 2, 1}) == IntMatrix{{3, 4}, {8, 11}});
    for (long l = 1; l < 10; ++l) CHECK(realize(LLSPeriod{1, l}) == IntMatrix{{0, -1}, {1, l + 2}});
    CHECK(realize(LLSPeriod{2, 1, 1, 3}) == IntMatrix{{2, 7}, {5, 18}});
}

TEST_CASE("realize agrees with the window construction") {
    for (int t = 0; t < 300; ++t) {
        const std::size_t len = 2 * static_cast<std::size_t>(uniform(1, 4));
        std::vector<Integer> e;
        for (std::size_t i = 0; i < len; ++i) e.push_back(uniform(1, 9));
        const LLSPeriod seq(e);
        const IntMatrix m = realize(seq);
        CHECK(is_reduced(m));
        CHECK(lls_period(m) == seq);
        CHECK(lls_of_reduced(m).same_sequence(seq));
        if (len == 2 && e[0] == 1) continue;
        const Rational v = cf_eval({std::vector<Integer>(e.begin(), e.end() - 1)});
        const Integer q = v.get_num(), p = v.get_den(), lambda = e.back();
        Integer s = -1;
        for (Integer x = lambda * q + 1; x <= (lambda + 1) * q; ++x)
            if ((p * x - 1) % q == 0) s = x;
        CHECK(m == IntMatrix::from_rows({{p, Integer((p * s - 1) / q)}, {q, s}}));
    }
}

TEST_CASE("rotation conjugators") {
    for (int t = 0; t < 100; ++t) {
        const std::size_t len = 2 * static_cast<std::size_t>(uniform(1, 4));
        std::vector<Integer> e;
        for (std::size_t i = 0; i < len; ++i) e.push_back(uniform(1, 6));
        const LLSPeriod seq(e);
        for (std::size_t k = 0; k < len; ++k) {
            const IntMatrix g = rotation_conjugator(seq, k);
            CHECK(det(g) == (k % 2 ? -1 : 1));
            CHECK(g * realize(seq) == realize(seq.rotated(k)) * g);
        }
    }
}

TEST_CASE("enumerate reduced") {
    const auto a = enumerate_reduced(IntMatrix{{7, 18}, {5, 13}});
    REQUIRE(a.size() == 4);
    CHECK(a[0] == IntMatrix{{2, 7}, {5, 18}});
    const LLSPeriod base{2, 1, 1, 3};
    for (std::size_t k = 0; k < 4; ++k) CHECK(a[k] == realize(base.rotated(k)));

    const auto b = enumerate_reduced(IntMatrix{{1519, 1164}, {-1964, -1505}});
    REQUIRE(b.size() == 2);
    const IntMatrix x{{3, 8}, {4, 11}}, y{{3, 4}, {8, 11}};
    CHECK(((b[0] == x && b[1] == y) || (b[0] == y && b[1] == x)));

    CHECK(enumerate_reduced(realize(LLSPeriod{1, 1})).size() == 2);

    for (int t = 0; t < 200; ++t) {
        const IntMatrix m = random_hyperbolic(14);
        const auto all = enumerate_reduced(m);
        CHECK(all.size() == lls_period(m).minimal_period().size());
        CHECK(std::find(all.begin(), all.end(), reduce(m).reduced) != all.end());
    }
}

TEST_CASE("conjugate_2x2") {
    const auto v = conjugate_2x2(IntMatrix{{7, 18}, {5, 13}}, IntMatrix{{2, 7}, {5, 18}});
    REQUIRE(is_conjugate(v));
    CHECK(std::get<Conjugate>(v).certificate == IntMatrix{{1, -1}, {0, 1}});

    CHECK(is_not_conjugate(conjugate_2x2(parse_map("1/x, 1/y").matrix(), parse_map("x*y, y").matrix())));
    CHECK(is_not_conjugate(conjugate_2x2(parse_map("x*y, 1/x").matrix(), parse_map("y, 1/x").matrix())));

    const auto w = conjugate_2x2(IntMatrix{{1, 2}, {2, 5}}, IntMatrix{{0, -1}, {1, 6}});
    REQUIRE(is_not_conjugate(w));
    CHECK(std::get<NotConjugate>(w).witness.find("(2,2)") != std::string::npos);
    CHECK(std::get<NotConjugate>(w).witness.find("(1,4)") != std::string::npos);

    // the twist is needed: (1,2,2,1)-type periods are GL- but not SL-conjugate to their mirror
    const IntMatrix j{{1, 0}, {0, -1}};
    for (int t = 0; t < 200; ++t) {
        const IntMatrix m = random_hyperbolic(12);
        const IntMatrix mirrored = j * m * j;
        const auto r = conjugate_2x2(m, mirrored);
        REQUIRE(is_conjugate(r));
        CHECK(verify_certificate(m, mirrored, std::get<Conjugate>(r).certificate));
    }

    CHECK(is_not_conjugate(conjugate_2x2(IntMatrix{{0, 1}, {1, 1}}, IntMatrix{{1, 1}, {0, 1}})));
    CHECK_THROWS_AS(conjugate_2x2(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 1}}), DomainError);
}

TEST_CASE("conjugate_2x2 on det -1 goes through the generic search") {
    const IntMatrix m{{0, 1}, {1, 1}};
    for (int t = 0; t < 20; ++t) {
        const IntMatrix p = random_sl2_word(6);
        const IntMatrix n = p * m * inverse_unimodular(p);
        const auto v = conjugate_2x2(m, n);
        CHECK_FALSE(is_not_conjugate(v));
        if (is_conjugate(v)) CHECK(verify_certificate(m, n, std::get<Conjugate>(v).certificate));
    }
}

TEST_CASE("conjugate_2x2 agrees with brute force on hyperbolic pairs") {
    std::vector<IntMatrix> pool;
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long c = -4; c <= 4; ++c)
                for (long d = -4; d <= 4; ++d)
                    if (a * d - b * c == 1 && (a + d) == 5) pool.push_back(IntMatrix{{a, b}, {c, d}});
    REQUIRE(pool.size() > 4);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t k = i; k < pool.size(); ++k) {
            const auto v = conjugate_2x2(pool[i], pool[k]);
            const bool brute = !brute_conjugators(pool[i], pool[k], 6).empty();
            if (brute) CHECK(is_conjugate(v));
            if (is_conjugate(v)) CHECK(verify_certificate(pool[i], pool[k], std::get<Conjugate>(v).certificate));
        }
}

TEST_CASE("sail oracle") {
    CHECK(sail_lls_oracle(IntMatrix{{7, 18}, {5, 13}}) == LLSPeriod{2, 1, 1, 3});
    CHECK(sail_lls_oracle(IntMatrix{{2, 1}, {1, 1}}, 1000) == lls_period(IntMatrix{{2, 1}, {1, 1}}));
    CHECK_THROWS_AS(sail_lls_oracle(IntMatrix{{1, 1}, {-1, 0}}), DomainError);
    CHECK_THROWS_AS(sail_lls_oracle(IntMatrix{{-7, -18}, {-5, -13}}), DomainError);
    CHECK_THROWS_AS(sail_lls_oracle(IntMatrix{{1519, 1164}, {-1964, -1505}}, 10), SailBoundTooSmall);

    const Sail2D s = sail_period(IntMatrix{{7, 18}, {5, 13}});
    REQUIRE(s.vertices.size() == 2);
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        const auto& v = s.vertices[i];
        CHECK(std::gcd(v[0], v[1]) == 1);
    }

    for (int t = 0; t < 40; ++t) {
        IntMatrix m = random_hyperbolic(8);
        if (m.trace() < 0) m = -m;
        bool fits = true;
        for (const auto& row : m.rows())
            for (const auto& e : row) fits = fits && abs(e) <= 50;
        if (!fits) continue;
        CHECK(sail_lls_oracle(m) == lls_period(m));
    }
}
