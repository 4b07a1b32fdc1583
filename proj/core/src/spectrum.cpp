#include "multispec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "multispec/exactalg.hpp"
#include "multispec/numeric.hpp"

namespace multispec {

unsigned long spectrum_size_cap() {
    if (const char* env = std::getenv("MULTISPEC_SIZE_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
    }
    return 2000;
}

namespace {

// d^n with cap enforcement.
unsigned long checked_level_size(long d, unsigned long n) {
    if (d < 2) throw std::invalid_argument("spectrum: degree >= 2 required");
    if (n == 0) throw std::invalid_argument("spectrum: level >= 1 required");
    const unsigned long cap = spectrum_size_cap();
    unsigned long size = 1;
    for (unsigned long i = 0; i < n; ++i) {
        size *= static_cast<unsigned long>(d);
        if (size > cap) throw std::runtime_error("level too large");
    }
    return size;
}

}  // namespace

MultiplierPoly multiplier_charpoly(const PolyMap& f, unsigned long n) {
    checked_level_size(f.degree(), n);
    Poly fn = iterate(f.poly, n);
    Poly modulus = fn - Poly::variable();
    MultiplierPoly out;
    out.level = n;
    out.charpoly = charpoly_mod(fn.derivative(), modulus);
    out.includes_infinity = true;
    return out;
}

SpectrumLevel spectrum_from_charpoly(const MultiplierPoly& mp) {
    // charpoly = w^N - e1 w^{N-1} + e2 w^{N-2} - ... ; with the extra 0
    // multiplier at infinity the elementary symmetric functions are
    // unchanged for j <= N and e_{N+1} = 0.
    const long N = mp.charpoly.degree();
    SpectrumLevel out;
    out.level = mp.level;
    out.sigmas.resize(static_cast<std::size_t>(N) + 1);
    for (long j = 1; j <= N; ++j) {
        Rational c = mp.charpoly.coeff(static_cast<std::size_t>(N - j));
        out.sigmas[static_cast<std::size_t>(j - 1)] = (j % 2 == 1) ? -c : c;
    }
    out.sigmas.back() = 0;
    return out;
}

SpectrumLevel spectrum_level(const PolyMap& f, unsigned long n) {
    return spectrum_from_charpoly(multiplier_charpoly(f, n));
}

SpectrumCompare spectra_equal_up_to(const PolyMap& f, const PolyMap& g, unsigned long m) {
    if (f.degree() != g.degree()) throw std::invalid_argument("spectra comparison: degree mismatch");
    SpectrumCompare out;
    for (unsigned long n = 1; n <= m; ++n) {
        SpectrumLevel a = spectrum_level(f, n);
        SpectrumLevel b = spectrum_level(g, n);
        if (a.sigmas != b.sigmas) {
            out.equal = false;
            out.first_diff = n;
            return out;
        }
    }
    return out;
}

SpectrumCompare compare_iterates(const PolyMap& f, const PolyMap& g, unsigned long k,
                                 unsigned long m) {
    if (f.degree() != g.degree()) throw std::invalid_argument("spectra comparison: degree mismatch");
    if (k == 0) throw std::invalid_argument("compare_iterates: k >= 1 required");
    PolyMap fk(iterate(f.poly, k));
    PolyMap gk(iterate(g.poly, k));
    return spectra_equal_up_to(fk, gk, m);
}

bool spectrum_containment(const PolyMap& f, const PolyMap& g, unsigned long n) {
    if (f.degree() != g.degree()) throw std::invalid_argument("spectra comparison: degree mismatch");
    Poly mf = multiplier_charpoly(f, n).charpoly;
    Poly mg = multiplier_charpoly(g, n).charpoly;
    return radical_divides(mf, mg);
}

namespace {

// Rational roots of a polynomial (exact; rational-root theorem on the
// integer-cleared form).
std::vector<Rational> rational_roots(const Poly& p) {
    std::vector<Rational> out;
    if (p.is_constant()) return out;
    Poly q = p;
    // deflate roots at 0 first
    while (q.coeff(0) == 0) {
        std::vector<Rational> c(q.coeffs().begin() + 1, q.coeffs().end());
        q = Poly(c);
        if (std::find(out.begin(), out.end(), Rational(0)) == out.end()) out.push_back(0);
        if (q.is_constant()) return out;
    }
    Poly::Cleared cl = q.cleared();
    Integer a0 = abs(cl.coeffs.front());
    Integer an = abs(cl.coeffs.back());
    std::vector<Integer> ps, qs;
    auto divisors = [](const Integer& v) {
        std::vector<Integer> ds;
        for (Integer i = 1; i * i <= v; ++i) {
            if (v % i == 0) {
                ds.push_back(i);
                if (i * i != v) ds.push_back(v / i);
            }
        }
        return ds;
    };
    for (const Integer& num : divisors(a0)) {
        for (const Integer& den : divisors(an)) {
            for (int sign : {1, -1}) {
                Rational cand = Rational(num) / Rational(den) * sign;
                cand.canonicalize();
                if (q(cand) == 0 && std::find(out.begin(), out.end(), cand) == out.end())
                    out.push_back(cand);
            }
        }
    }
    return out;
}

}  // namespace

SacReport superattracting_cycle_count(const PolyMap& f, unsigned long bound) {
    if (bound < 1) throw std::invalid_argument("sac: bound >= 1 required");
    if (f.degree() < 2) throw std::invalid_argument("sac: degree >= 2 required");
    SacReport report;
    report.bound = bound;

    Poly crit = radical(f.poly.derivative());  // monic squarefree, carries the critical points
    if (crit.degree() < 1) {
        // no finite critical points (impossible for deg >= 2, but harmless)
        return report;
    }

    // g_n = gcd(crit, f^{on} - z): critical points of period dividing n.
    std::vector<Poly> gn(bound + 1, Poly(Rational(1)));
    Poly fi = Poly::variable();
    Poly periodic_part(Rational(1));  // product of all exact-period factors
    for (unsigned long n = 1; n <= bound; ++n) {
        fi = compose(f.poly, fi);  // f^{on}
        gn[n] = poly_gcd(crit, fi - Poly::variable());
        // exact-period factor: divide out the lcm of proper-divisor levels.
        Poly lcm(Rational(1));
        for (unsigned long m = 1; m < n; ++m) {
            if (n % m != 0) continue;
            // lcm of squarefree monics: lcm = lcm * (gm / gcd(lcm, gm))
            Poly extra = gn[m].exact_div(poly_gcd(lcm, gn[m]));
            lcm = lcm * extra;
        }
        Poly q = gn[n].exact_div(poly_gcd(gn[n], lcm));
        if (q.degree() < 1) continue;

        // orbit point sets: roots of charpoly_mod(f^{oi}, q) for i = 0..n-1
        Poly orbit_product(Rational(1));
        Poly power = Poly::variable();
        for (unsigned long i = 0; i < n; ++i) {
            orbit_product = orbit_product * charpoly_mod(power, q);
            power = compose(f.poly, power);
        }
        long pts = radical(orbit_product).degree();
        if (pts % static_cast<long>(n) != 0)
            throw std::logic_error("sac: orbit point count not divisible by period");
        unsigned long cycles = static_cast<unsigned long>(pts) / n;
        report.per_period.emplace_back(n, cycles);
        report.count += cycles;
        periodic_part = periodic_part * q;
    }

    // Certification. Unresolved part of crit: not periodic within the bound.
    Poly unresolved = crit.exact_div(poly_gcd(crit, periodic_part));
    // classify rational critical points among the unresolved part
    for (const Rational& c : rational_roots(unresolved)) {
        OrbitResult orb = orbit(f, c, 2 * bound + 2);
        bool classified = orb.escaped;
        if (!classified) {
            // cycle detection by exact repetition
            for (std::size_t i = 0; !classified && i < orb.points.size(); ++i)
                for (std::size_t j = i + 1; j < orb.points.size(); ++j)
                    if (orb.points[i] == orb.points[j]) {
                        classified = true;
                        break;
                    }
        }
        if (!classified) {
            report.certified_complete = false;
            report.caveats.push_back("rational critical point " + to_string(c) +
                                     " unclassified within the bound");
        }
        Poly lin{-c, 1};
        unresolved = unresolved.exact_div(lin);
    }
    if (unresolved.degree() >= 1) {
        // irrational critical points: certified non-periodic up to the bound
        // (gcd with every f^{on} - z is trivial), but nothing is claimed
        // beyond it and no escape certificate applies.
        report.certified_complete = false;
        report.caveats.push_back(
            "irrational critical-point factor " + unresolved.str() +
            " certified non-periodic only up to the bound");
    }
    if (report.count > static_cast<unsigned long>(f.degree() - 1))
        throw std::logic_error("sac: count exceeds d-1");
    return report;
}

std::vector<double> length_spectrum_numeric(const PolyMap& f, unsigned long n, double tol) {
    MultiplierPoly mp = multiplier_charpoly(f, n);
    std::vector<std::complex<double>> roots = complex_roots(mp.charpoly, tol);
    std::vector<double> out;
    out.reserve(roots.size() + 1);
    for (const auto& r : roots) out.push_back(std::abs(r));
    out.push_back(0.0);  // infinity
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace multispec
