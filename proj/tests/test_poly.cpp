#include <doctest.h>

#include <random>

#include "multispec/parse.hpp"
#include "multispec/poly.hpp"

using namespace multispec;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg, int coeff_span = 9) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-coeff_span, coeff_span);
    std::uniform_int_distribution<int> den(1, 4);
    int d = deg(rng);
    std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
    for (auto& c : cs) c = rat(num(rng), den(rng));
    if (cs.back() == 0) cs.back() = 1;
    return Poly(std::move(cs));
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("arithmetic basics") {
    Poly z = Poly::variable();
    Poly f = z * z - Poly(Rational(3));
    CHECK(f.degree() == 2);
    CHECK(f(Rational(2)) == 1);
    CHECK(f.derivative() == Poly({0, 2}));
    CHECK((f * f).degree() == 4);
    CHECK((f - f).is_zero());
    CHECK(Poly{}.degree() == -1);
}

TEST_CASE("divmod and exact_div") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, 6);
        Poly b = random_poly(rng, 4);
        if (b.is_zero()) continue;
        PolyDivMod dm = a.divmod(b);
        CHECK(dm.quotient * b + dm.remainder == a);
        CHECK(dm.remainder.degree() < b.degree());
        CHECK((a * b).exact_div(b) == a);
    }
    CHECK_THROWS_AS(Poly({1, 1}).exact_div(Poly({0, 1})), std::logic_error);
}

TEST_CASE("gcd properties") {
    std::mt19937 rng(777);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(rng, 4);
        Poly b = random_poly(rng, 4);
        Poly c = random_poly(rng, 3);
        if (c.is_zero() || (a.is_zero() && b.is_zero())) continue;
        Poly g = poly_gcd(a * c, b * c);
        // c divides the gcd; the gcd divides both products.
        CHECK((a * c).divmod(g).remainder.is_zero());
        CHECK((b * c).divmod(g).remainder.is_zero());
        CHECK(g.divmod(c).remainder.is_zero());
        CHECK(g.leading() == 1);
    }
    CHECK(poly_gcd(Poly{}, Poly{}).is_zero());
    CHECK(poly_gcd(Poly({-1, 0, 1}), Poly({1, 1})) == Poly({1, 1}));
}

TEST_CASE("compose and iterate") {
    Poly z = Poly::variable();
    Poly f = z * z + Poly(Rational(1));
    CHECK(compose(f, f) == parse_poly("z^4 + 2*z^2 + 2"));
    CHECK(iterate(f, 0) == z);
    CHECK(iterate(f, 2) == compose(f, f));
    CHECK(iterate(f, 3) == compose(f, compose(f, f)));
}

TEST_CASE("interpolation round trip") {
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        Poly p = random_poly(rng, 5);
        std::vector<Rational> xs, ys;
        for (long x = 0; x <= p.degree(); ++x) {
            xs.push_back(Rational(x));
            ys.push_back(p(Rational(x)));
        }
        CHECK(interpolate(xs, ys) == p);
    }
}

TEST_CASE("cleared denominators") {
    Poly p({rat(1, 2), rat(-3, 4), rat(5)});
    Poly::Cleared c = p.cleared();
    CHECK(c.den == 4);
    CHECK(c.coeffs == std::vector<Integer>{2, -3, 20});
}

TEST_SUITE_END();
