#include <doctest.h>

#include <numeric>
#include <random>

#include "multispec/classify.hpp"
#include "multispec/dynmaps.hpp"
#include "multispec/parse.hpp"

using namespace multispec;

TEST_SUITE_BEGIN("classify");

TEST_CASE("critical value counts") {
    for (unsigned long m = 3; m <= 8; ++m) {
        Poly zm = Poly::monomial(1, m);
        CHECK(distinct_critical_values_count(PolyMap(zm)) == 1);
        CHECK(distinct_critical_values_count(chebyshev(m)) == 2);
    }
    CHECK(is_presimple(PolyMap(parse_poly("z^2 + 7"))));
    CHECK(is_presimple(PolyMap(parse_poly("3*z^2 - z"))));
    CHECK_FALSE(is_presimple(PolyMap(parse_poly("z^3"))));
    // generic cubic: two critical points, two distinct critical values
    CHECK(is_presimple(PolyMap(parse_poly("z^3 - 3*z"))));
}

TEST_CASE("exceptional maps") {
    ExceptionalResult p = is_exceptional(PolyMap(parse_poly("z^5")));
    CHECK(p.exceptional);
    CHECK(p.tag == ExceptionalTag::power);

    ExceptionalResult t = is_exceptional(chebyshev(4));
    CHECK(t.exceptional);
    CHECK(t.tag == ExceptionalTag::chebyshev_plus);

    // -T_3 is not conjugate to T_3 (the linear coefficient is invariant
    // under diagonal conjugation), so it earns the minus tag
    ExceptionalResult mt = is_exceptional(PolyMap(-chebyshev(3).poly));
    CHECK(mt.exceptional);
    CHECK(mt.tag == ExceptionalTag::chebyshev_minus);

    // -T_4 is conjugate to T_4 by z -> -z
    ExceptionalResult mt4 = is_exceptional(PolyMap(-chebyshev(4).poly));
    CHECK(mt4.exceptional);
    CHECK(mt4.tag == ExceptionalTag::chebyshev_plus);

    // a conjugated power map is still exceptional
    PolyMap moved = conjugate(PolyMap(parse_poly("z^4")), AffineMap::linear(rat(2), rat(-1)));
    ExceptionalResult mv = is_exceptional(moved);
    CHECK(mv.exceptional);
    CHECK(mv.tag == ExceptionalTag::power);

    CHECK_FALSE(is_exceptional(PolyMap(parse_poly("z^2 + 1"))).exceptional);
    CHECK_FALSE(is_exceptional(PolyMap(parse_poly("z^3 + z + 1"))).exceptional);
}

TEST_CASE("generalized Lattes detection on the cubic family") {
    std::mt19937 rng(22);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int i = 0; i < 40; ++i) {
        Rational lambda = 0, b = 0;
        while (lambda == 0) lambda = rat(num(rng), 1 + (i % 2));
        while (b == 0) b = rat(num(rng), 1);
        Rational mu = rat(num(rng), 1);
        PolyMap F = gl_cubic_family(lambda, b, mu);
        CHECK(F.degree() == 3);
        GLResult res = generalized_lattes_form(F);
        CHECK(res.is_gl);
        if (!res.via_exceptional) {
            REQUIRE(res.form.has_value());
            CHECK(res.form->n >= 2);
            CHECK(std::gcd(res.form->r, res.form->n) == 1);
        }
    }
}

TEST_CASE("generalized Lattes negatives and short circuits") {
    GLResult plain = generalized_lattes_form(PolyMap(parse_poly("z^2 + 1")));
    CHECK_FALSE(plain.is_gl);

    GLResult power = generalized_lattes_form(PolyMap(parse_poly("z^6")));
    CHECK(power.is_gl);
    CHECK(power.via_exceptional);

    // z(z+1)^2 is literally in the target shape, fixed point 0
    GLResult direct = generalized_lattes_form(PolyMap(parse_poly("z*(z+1)^2")));
    CHECK(direct.is_gl);
    REQUIRE(direct.form.has_value());
    CHECK(direct.form->r == 1);
    CHECK(direct.form->n == 2);
}

TEST_CASE("ramification portrait bookkeeping") {
    // z^2: one critical value 0 with fiber partition (2)
    RamificationPortrait sq = ramification_portrait({PolyMap(parse_poly("z^2"))});
    CHECK(sq.degrees == std::vector<long>{2});
    REQUIRE(sq.classes.size() == 1);
    CHECK(sq.classes[0].value_factor == parse_poly("z"));
    CHECK(sq.classes[0].profiles == std::vector<std::vector<unsigned long>>{{2}});

    // T_3 = z^3 - 3z: critical values ±2 share the partition (2,1), so they
    // stay together in one squarefree class t^2 - 4
    RamificationPortrait t3 = ramification_portrait({chebyshev(3)});
    CHECK(t3.degrees == std::vector<long>{3});
    REQUIRE(t3.classes.size() == 1);
    CHECK(t3.classes[0].value_factor == parse_poly("z^2 - 4"));
    CHECK(t3.classes[0].profiles == std::vector<std::vector<unsigned long>>{{2, 1}});

    // Riemann-Hurwitz bookkeeping: sum of deg(class) * (parts' excess) = d - 1
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> numv(-3, 3);
    for (int i = 0; i < 25; ++i) {
        std::vector<Rational> cs(5);
        for (auto& c : cs) c = rat(numv(rng), 1);
        while (cs.back() == 0) cs.back() = rat(numv(rng), 1);
        PolyMap f{Poly(std::vector<Rational>(cs))};
        if (f.degree() < 2) continue;
        RamificationPortrait port = ramification_portrait({f});
        long excess = 0;
        for (const auto& cls : port.classes) {
            long fiber = 0;
            for (unsigned long part : cls.profiles[0]) fiber += static_cast<long>(part);
            CHECK(fiber == f.degree());
            long local = 0;
            for (unsigned long part : cls.profiles[0]) local += static_cast<long>(part) - 1;
            excess += cls.value_factor.degree() * local;
        }
        CHECK(excess == f.degree() - 1);
    }

    // joint portrait of two maps keeps one profile per map
    RamificationPortrait joint =
        ramification_portrait({PolyMap(parse_poly("z^2")), PolyMap(parse_poly("z^3"))});
    CHECK(joint.degrees == std::vector<long>{2, 3});
    for (const auto& cls : joint.classes) CHECK(cls.profiles.size() == 2);
}

TEST_CASE("genus formulas") {
    // pre-simple of degree m has g(h_F) = (m-2)(m-3)/2
    PolyMap F = build_Pca({rat(1), rat(3)}, rat(1), 4);
    CHECK(is_presimple(F));
    CHECK(genus_hF(F) == 1);
    CHECK(genus_hF(PolyMap(parse_poly("z^2 + 1"))) == 0);
    CHECK(genus_hF(PolyMap(parse_poly("z^3 - 3*z"))) == 0);

    // pre-simple quartic against H = z^2
    long g = genus_hFH(F, PolyMap(parse_poly("z^2")));
    CHECK(g > 0);
}

TEST_CASE("cubic family closed form") {
    PolyMap F = gl_cubic_family(1, 1, 1);
    CHECK(F.poly == parse_poly("z^3 + 5*z^2 + 8*z + 3"));
    // F is the conjugate of z(z+1)^2 by the translation z -> z - 1
    CHECK(compose(parse_poly("z*(z+1)^2"), parse_poly("z + 1")) - Poly(Rational(1)) == F.poly);
}

TEST_SUITE_END();
