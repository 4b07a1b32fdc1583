#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "multispec/numeric.hpp"
#include "multispec/parse.hpp"
#include "multispec/spectrum.hpp"

using namespace multispec;

TEST_SUITE_BEGIN("spectrum");

TEST_CASE("fixed-point charpoly of z^2") {
    // finite fixed points 0 and 1 with multipliers 0 and 2
    MultiplierPoly mp = multiplier_charpoly(PolyMap(parse_poly("z^2")), 1);
    CHECK(mp.level == 1);
    CHECK(mp.includes_infinity);
    CHECK(mp.charpoly == parse_poly("z^2 - 2*z"));
    SpectrumLevel s = spectrum_from_charpoly(mp);
    // multiplier multiset {0, 2, 0}: sigma_1 = 2, sigma_2 = sigma_3 = 0
    CHECK(s.sigmas == std::vector<Rational>{2, 0, 0});
}

TEST_CASE("second-iterate charpoly of z^2 - 3") {
    MultiplierPoly mp = multiplier_charpoly(PolyMap(parse_poly("z^2 - 3")), 2);
    CHECK(mp.charpoly == parse_poly("z^4 - 12*z^3 - 240*z^2 + 512*z + 9216"));
    SpectrumLevel s = spectrum_from_charpoly(mp);
    CHECK(s.sigmas.size() == 5);
    CHECK(s.sigmas[0] == 12);     // sigma_1 = -(-12)
    CHECK(s.sigmas[1] == -240);   // sigma_2
    CHECK(s.sigmas[3] == 9216);   // sigma_4 = product of finite multipliers
    CHECK(s.sigmas[4] == 0);      // infinity contributes multiplier 0
}

TEST_CASE("spectra are conjugacy invariants") {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    for (int i = 0; i < 25; ++i) {
        std::vector<Rational> cs(4);
        for (auto& c : cs) c = rat(num(rng), den(rng));
        while (cs.back() == 0) cs.back() = rat(num(rng), 1);
        PolyMap f{Poly(std::vector<Rational>(cs))};
        Rational a = 0;
        while (a == 0) a = rat(num(rng), den(rng));
        PolyMap g = conjugate(f, AffineMap::linear(a, rat(num(rng), 1)));
        for (unsigned long n = 1; n <= 3; ++n)
            CHECK(spectrum_level(f, n).sigmas == spectrum_level(g, n).sigmas);
    }
}

TEST_CASE("iterate comparison example") {
    // V = z + 1, P = z V(z^2), Q = -z V(z^2): the second iterates coincide.
    Poly P = parse_poly("z^3 + z");
    Poly Q = parse_poly("-z^3 - z");
    CHECK(compose(Q, Q) == compose(P, P));
    SpectrumCompare c2 = compare_iterates(PolyMap(P), PolyMap(Q), 2, 2);
    CHECK(c2.equal);
    SpectrumCompare c1 = spectra_equal_up_to(PolyMap(P), PolyMap(Q), 1);
    MESSAGE("level-1 spectra equal: ", c1.equal);  // recorded, not asserted
}

TEST_CASE("comparison reports the first differing level") {
    SpectrumCompare c = spectra_equal_up_to(PolyMap(parse_poly("z^2")),
                                            PolyMap(parse_poly("z^2 - 1")), 3);
    CHECK_FALSE(c.equal);
    REQUIRE(c.first_diff.has_value());
    CHECK(*c.first_diff == 1);
    SpectrumCompare same = spectra_equal_up_to(PolyMap(parse_poly("z^2 - 3")),
                                               PolyMap(parse_poly("z^2 - 3")), 3);
    CHECK(same.equal);
    CHECK_FALSE(same.first_diff.has_value());
}

TEST_CASE("spectrum containment") {
    PolyMap f(parse_poly("z^2"));
    CHECK(spectrum_containment(f, f, 2));
    CHECK_FALSE(spectrum_containment(f, PolyMap(parse_poly("z^2 - 1")), 1));
}

TEST_CASE("superattracting cycle counts") {
    SacReport s0 = superattracting_cycle_count(PolyMap(parse_poly("z^2")), 5);
    CHECK(s0.count == 1);
    REQUIRE(s0.per_period.size() == 1);
    CHECK(s0.per_period[0] == std::pair<unsigned long, unsigned long>{1, 1});
    CHECK(s0.certified_complete);

    SacReport s1 = superattracting_cycle_count(PolyMap(parse_poly("z^2 - 1")), 5);
    CHECK(s1.count == 1);
    REQUIRE(s1.per_period.size() == 1);
    CHECK(s1.per_period[0] == std::pair<unsigned long, unsigned long>{2, 1});
    CHECK(s1.certified_complete);

    SacReport s2 = superattracting_cycle_count(PolyMap(parse_poly("z^2 + 1")), 10);
    CHECK(s2.count == 0);
    CHECK(s2.certified_complete);
}

TEST_CASE("numeric length spectrum agrees with exact data") {
    PolyMap f(parse_poly("z^2 - 1"));
    std::vector<double> lengths = length_spectrum_numeric(f, 1, 1e-10);
    // fixed multipliers: phi^2 and (1-sqrt5)^2/... roots of w^2-2w-4 -> 1±sqrt5
    std::vector<std::complex<double>> roots =
        complex_roots(multiplier_charpoly(f, 1).charpoly, 1e-10);
    std::vector<double> expected;
    expected.push_back(0.0);
    for (const auto& r : roots) expected.push_back(std::abs(r));
    std::sort(expected.begin(), expected.end());
    REQUIRE(lengths.size() == expected.size());
    for (std::size_t i = 0; i < lengths.size(); ++i)
        CHECK(lengths[i] == doctest::Approx(expected[i]).epsilon(1e-8));
}

TEST_CASE("size cap forbids oversized levels") {
    CHECK(spectrum_size_cap() == 2000);
    CHECK_THROWS(multiplier_charpoly(PolyMap(parse_poly("z^2")), 11));  // 2^11 > 2000
}

TEST_SUITE_END();
