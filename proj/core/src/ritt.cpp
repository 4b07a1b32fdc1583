#include "multispec/ritt.hpp"

#include <numeric>
#include <stdexcept>

#include "multispec/spectrum.hpp"

namespace multispec {

namespace {

// R(z^k)
Poly plug_power(const Poly& R, unsigned long k) {
    std::vector<Rational> out(static_cast<std::size_t>(R.degree()) * k + 1, Rational(0));
    for (long j = 0; j <= R.degree(); ++j)
        out[static_cast<std::size_t>(j) * k] = R.coeff(static_cast<std::size_t>(j));
    return Poly(out);
}

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }

// r^n mod k (k >= 1; k = 1 gives 0)
unsigned long pow_mod(unsigned long r, unsigned long n, unsigned long k) {
    unsigned long acc = 1 % k;
    unsigned long base = r % k;
    while (n) {
        if (n & 1) acc = (acc * base) % k;
        base = (base * base) % k;
        n >>= 1;
    }
    return acc;
}

}  // namespace

RittPair build_ritt_pair(unsigned long r, unsigned long k, const Poly& R) {
    if (r < 1 || k < 1) throw std::invalid_argument("ritt pair: r, k >= 1 required");
    if (R.is_zero()) throw std::invalid_argument("ritt pair: R must be nonzero");
    if (r + k * static_cast<unsigned long>(R.degree()) < 2)
        throw std::invalid_argument("ritt pair: total degree >= 2 required");
    RittPair pair;
    pair.r = r;
    pair.k = k;
    pair.R = R;
    pair.P = Poly::monomial(Rational(1), r) * plug_power(R, k);
    pair.Q = Poly::monomial(Rational(1), r) * R.pow(k);
    RittPair check = pair;
    if (!semiconjugacy_check(check, 1))
        throw std::logic_error("ritt pair: semiconjugacy identity failed at build");
    return pair;
}

RittPair normalize_pair(const RittPair& pair) {
    unsigned long l = 0;
    while (pair.R.coeff(l) == 0) ++l;
    if (l == 0) return pair;
    std::vector<Rational> r0(pair.R.coeffs().begin() + static_cast<long>(l), pair.R.coeffs().end());
    return build_ritt_pair(pair.r + l * pair.k, pair.k, Poly(r0));
}

ProgressionParams progression_params(unsigned long r, unsigned long k) {
    if (r < 2) throw std::invalid_argument("progression_params: r >= 2 required");
    if (k < 1) throw std::invalid_argument("progression_params: k >= 1 required");
    ProgressionParams out;
    if (k == 1) {
        out.c1 = 1;
        out.d = 1;
        out.valid = true;
        return out;
    }
    if (gcd_ul(r, k) != 1) return out;  // r^n never 1 mod k, hypothesis fails
    // d = multiplicative order of r mod k
    unsigned long d = 1;
    unsigned long cur = r % k;
    while (cur != 1 % k) {
        cur = (cur * (r % k)) % k;
        ++d;
        if (d > k) throw std::logic_error("progression_params: order search overran");
    }
    for (unsigned long n = 1; n <= d; ++n) {
        unsigned long rn1 = (pow_mod(r, n, k) + k - 1) % k;  // r^n - 1 mod k
        if (gcd_ul(rn1 == 0 ? k : rn1, k) == 1) {
            out.c1 = n;
            out.d = d;
            out.valid = true;
            return out;
        }
    }
    return out;
}

bool good_level(unsigned long r, unsigned long k, unsigned long n) {
    if (k == 1) return true;
    unsigned long rn1 = (pow_mod(r, n, k) + k - 1) % k;  // r^n - 1 mod k
    return gcd_ul(rn1 == 0 ? k : rn1, k) == 1;
}

bool semiconjugacy_check(const RittPair& pair, unsigned long n) {
    Poly qn = iterate(pair.Q, n);
    Poly pn = iterate(pair.P, n);
    Poly zk = Poly::monomial(Rational(1), pair.k);
    return compose(qn, zk) == compose(zk, pn);
}

bool multiplier_congruence_check(const RittPair& pair, unsigned long n) {
    Poly pn = iterate(pair.P, n);
    Poly qn = iterate(pair.Q, n);
    Poly zk = Poly::monomial(Rational(1), pair.k);
    Poly lhs = (compose(qn.derivative(), zk) - pn.derivative()) * Poly::monomial(Rational(1), pair.k - 1);
    Poly modulus = pn - Poly::variable();
    return lhs.divmod(modulus).remainder.is_zero();
}

ProgressionReport verify_progression(const RittPair& pair, unsigned long terms) {
    if (terms < 1) throw std::invalid_argument("verify_progression: terms >= 1 required");
    RittPair norm = normalize_pair(pair);
    ProgressionReport report;
    report.requested_terms = terms;
    if (norm.r < 2) throw std::invalid_argument("verify_progression: normalized r >= 2 required");
    report.params = progression_params(norm.r, norm.k);
    if (!report.params.valid) return report;

    PolyMap P(norm.P), Q(norm.Q);
    const unsigned long cap = spectrum_size_cap();
    const unsigned long d = static_cast<unsigned long>(P.degree());

    // largest affordable progression term
    unsigned long max_level = report.params.c1 + (terms - 1) * report.params.d;
    {
        unsigned long size = 1;
        unsigned long affordable = 0;
        for (unsigned long lvl = 1; lvl <= max_level; ++lvl) {
            if (size > cap / d) break;
            size *= d;
            affordable = lvl;
        }
        if (affordable < max_level) {
            report.truncated = true;
            max_level = affordable;
        }
    }

    for (unsigned long lvl = 1; lvl <= max_level; ++lvl) {
        ProgressionLevelResult res;
        res.level = lvl;
        res.guaranteed_good = good_level(norm.r, norm.k, lvl);
        res.in_progression = lvl >= report.params.c1 && (lvl - report.params.c1) % report.params.d == 0;
        res.equal = spectrum_level(P, lvl).sigmas == spectrum_level(Q, lvl).sigmas;
        if (res.guaranteed_good && !res.equal) report.all_good_levels_equal = false;
        if (res.in_progression && res.equal) ++report.verified_terms;
        report.levels.push_back(res);
    }
    return report;
}

}  // namespace multispec
