#include "multispec/dynmaps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "multispec/exactalg.hpp"

namespace multispec {

PolyMap::PolyMap(Poly p) : poly(std::move(p)) {
    if (poly.degree() < 1) throw std::invalid_argument("PolyMap requires degree >= 1");
}

AffineMap AffineMap::linear(const Rational& a, const Rational& b) {
    if (a == 0) throw std::invalid_argument("affine map needs nonzero scale");
    AffineMap m;
    m.scale = a;
    m.shift = b;
    return m;
}

AffineMap AffineMap::inverse() const {
    if (!has_rational_scale()) throw std::domain_error("symbolic scale not evaluable");
    const Rational& a = rational_scale();
    return linear(1 / a, -shift / a);
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
    if (!has_rational_scale() || !inner.has_rational_scale())
        throw std::domain_error("symbolic scale not evaluable");
    return linear(rational_scale() * inner.rational_scale(),
                  rational_scale() * inner.shift + shift);
}

Rational AffineMap::operator()(const Rational& x) const {
    if (!has_rational_scale()) throw std::domain_error("symbolic scale not evaluable");
    return rational_scale() * x + shift;
}

PolyMap conjugate(const PolyMap& f, const AffineMap& sigma) {
    if (!sigma.has_rational_scale()) throw std::domain_error("symbolic scale not evaluable");
    const Rational& a = sigma.rational_scale();
    const Rational& b = sigma.shift;
    // sigma^{-1}(z) = (z - b)/a
    Poly inner{-b / a, 1 / a};
    Poly out = compose(f.poly, Poly(inner)) * a + Poly(b);
    return PolyMap(out);
}

namespace {

// Shift s with f(z - s) + s having zero subleading coefficient; the common
// fixed point of any affine symmetry is then c = -s.
Rational centering_shift(const Poly& f) {
    long d = f.degree();
    return f.coeff(static_cast<std::size_t>(d - 1)) / (Rational(d) * f.leading());
}

Poly centered(const Poly& f) {
    Rational s = centering_shift(f);
    Poly inner{-s, 1};
    return compose(f, inner) + Poly(s);
}

}  // namespace

std::optional<AffineMap> conjugacy_test(const PolyMap& f, const PolyMap& g) {
    const long d = f.degree();
    if (d != g.degree()) throw std::invalid_argument("conjugacy_test: degree mismatch");
    if (d < 2) throw std::invalid_argument("conjugacy_test: degree >= 2 required");

    Rational sf = centering_shift(f.poly);
    Rational sg = centering_shift(g.poly);
    Poly F = centered(f.poly);
    Poly G = centered(g.poly);

    // The remaining freedom is sigma(z) = alpha*z, transforming coefficient
    // j of F into alpha^{1-j} F_j. Supports must match exactly.
    std::vector<long> exps;       // exponents j - 1 of the constraints
    std::vector<Rational> vals;   // alpha^{j-1} = F_j / G_j
    for (long j = 0; j <= d; ++j) {
        const Rational& Fj = F.coeff(static_cast<std::size_t>(j));
        const Rational& Gj = G.coeff(static_cast<std::size_t>(j));
        if ((Fj == 0) != (Gj == 0)) return std::nullopt;
        if (Fj == 0) continue;
        if (j == 1) {
            if (Fj != Gj) return std::nullopt;
            continue;
        }
        exps.push_back(j - 1);
        vals.push_back(Fj / Gj);
    }

    auto make_witness = [&](const Rational& alpha) -> AffineMap {
        // sigma = (z - sg) o (alpha z) o (z + sf)
        AffineMap w = AffineMap::linear(alpha, alpha * sf - sg);
        return w;
    };

    if (exps.empty()) {
        AffineMap w = make_witness(Rational(1));
        if (!(conjugate(f, w).poly == g.poly)) return std::nullopt;
        return w;
    }

    // Exponent-lattice test: g0 = gcd of exponents, expressed as an integer
    // combination; the induced value rho satisfies alpha^{g0} = rho.
    long g0 = 0;
    std::vector<long> comb(exps.size(), 0);
    // iterative extended gcd over the exponent list
    for (std::size_t i = 0; i < exps.size(); ++i) {
        long e = exps[i] >= 0 ? exps[i] : -exps[i];
        if (g0 == 0) {
            g0 = e;
            comb[i] = exps[i] >= 0 ? 1 : -1;
            continue;
        }
        if (e == 0) continue;
        // extended gcd of (g0, exps[i])
        long old_r = g0, r = exps[i];
        long old_s = 1, s = 0;
        while (r != 0) {
            long q = old_r / r;
            long t = old_r - q * r;
            old_r = r;
            r = t;
            t = old_s - q * s;
            old_s = s;
            s = t;
        }
        long u = old_s;                       // u*g0 + v*exps[i] = old_r
        long v = (old_r - u * g0) / exps[i];  // exact
        if (old_r < 0) {
            old_r = -old_r;
            u = -u;
            v = -v;
        }
        for (auto& c : comb) c *= u;
        comb[i] = v;
        g0 = old_r;
    }

    auto rat_pow = [](const Rational& base, long e) {
        Rational out = 1;
        Rational b = e >= 0 ? base : 1 / base;
        unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e);
        while (n) {
            if (n & 1) out *= b;
            b *= b;
            n >>= 1;
        }
        return out;
    };

    Rational rho = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) rho *= rat_pow(vals[i], comb[i]);

    std::vector<std::string> checks;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        long q = exps[i] / g0;
        if (rat_pow(rho, q) != vals[i]) return std::nullopt;
        checks.push_back("rho^" + std::to_string(q) + " = " + to_string(vals[i]));
    }

    if (g0 == 1) {
        AffineMap w = make_witness(rho);
        // rational witnesses are verified end to end
        if (!(conjugate(f, w).poly == g.poly)) return std::nullopt;
        return w;
    }
    // Prefer a rational witness whenever rho is a perfect g0-th power.
    if (!(rho < 0 && g0 % 2 == 0)) {
        Integer num_root, den_root;
        Integer num = abs(rho.get_num());
        int num_exact = mpz_root(num_root.get_mpz_t(), num.get_mpz_t(),
                                 static_cast<unsigned long>(g0));
        int den_exact = mpz_root(den_root.get_mpz_t(), rho.get_den().get_mpz_t(),
                                 static_cast<unsigned long>(g0));
        if (num_exact && den_exact) {
            Rational root(num_root, den_root);
            root.canonicalize();
            if (rho < 0) root = -root;
            for (const Rational& alpha : {Rational(root), Rational(-root)}) {
                AffineMap cand = make_witness(alpha);
                if (conjugate(f, cand).poly == g.poly) return cand;
            }
        }
    }
    AffineMap w;
    RootCertificate cert;
    cert.g = static_cast<unsigned long>(g0);
    cert.rho = rho;
    cert.checks = std::move(checks);
    w.scale = std::move(cert);
    w.pre_shift = sf;
    w.shift = -sg;
    return w;
}

PolyMap chebyshev(unsigned long d) {
    if (d == 0) throw std::invalid_argument("chebyshev: d >= 1 required");
    Poly prev(Rational(2));          // T_0 = 2
    Poly cur = Poly::variable();     // T_1 = z
    for (unsigned long n = 1; n < d; ++n) {
        Poly next = Poly::variable() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return PolyMap(cur);
}

PolyMap build_Pca(const std::vector<Rational>& c, const Rational& a, unsigned long d) {
    if (d < 2) throw std::invalid_argument("build_Pca: d >= 2 required");
    if (c.size() != d - 2) throw std::invalid_argument("build_Pca: c must have d-2 entries");
    // elementary symmetric functions sigma_0..sigma_{d-2} of c
    std::vector<Rational> sig(d - 1, Rational(0));
    sig[0] = 1;
    for (const Rational& ci : c) {
        for (std::size_t t = sig.size() - 1; t >= 1; --t) sig[t] += ci * sig[t - 1];
    }
    std::vector<Rational> coeffs(d + 1, Rational(0));
    coeffs[d] = Rational(1) / Rational(static_cast<long>(d));
    for (unsigned long j = 2; j < d; ++j) {
        Rational term = sig[d - j] / Rational(static_cast<long>(j));
        if ((d - j) % 2 == 1) term = -term;
        coeffs[j] = term;
    }
    Rational ad = 1;
    for (unsigned long i = 0; i < d; ++i) ad *= a;
    coeffs[0] = ad;
    return PolyMap(Poly(coeffs));
}

Poly cyclotomic(unsigned long e) {
    if (e == 0) throw std::invalid_argument("cyclotomic: e >= 1 required");
    static std::map<unsigned long, Poly> cache;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    // x^e - 1
    std::vector<Rational> v(e + 1, Rational(0));
    v[0] = -1;
    v[e] = 1;
    Poly result(v);
    for (unsigned long m = 1; m < e; ++m) {
        if (e % m == 0) result = result.exact_div(cyclotomic(m));
    }
    cache.emplace(e, result);
    return result;
}

namespace {

unsigned long euler_phi(unsigned long e) {
    unsigned long out = e;
    for (unsigned long p = 2; p * p <= e; ++p) {
        if (e % p == 0) {
            out -= out / p;
            while (e % p == 0) e /= p;
        }
    }
    if (e > 1) out -= out / e;
    return out;
}

// x^j reduced modulo Phi_e, as a Poly of degree < phi(e).
Poly power_mod_cyclotomic(unsigned long j, unsigned long e, const Poly& phi) {
    Poly xj = Poly::monomial(Rational(1), j % e);  // x^e = 1 on the roots of Phi_e
    return xj.divmod(phi).remainder;
}

// Divisors e of D such that the coefficient system "a^j = 1 for every j in
// support" has the primitive e-th roots of unity among its solutions,
// verified in the cyclotomic quotient ring Q[x]/Phi_e.
std::vector<unsigned long> accepted_root_orders(const std::vector<unsigned long>& support,
                                                unsigned long modulus_degree) {
    std::vector<unsigned long> accepted;
    for (unsigned long e = 1; e <= modulus_degree; ++e) {
        if (modulus_degree % e != 0) continue;
        Poly phi = cyclotomic(e);
        bool ok = true;
        for (unsigned long j : support) {
            if (!(power_mod_cyclotomic(j, e, phi) == Poly(Rational(1)))) {
                ok = false;
                break;
            }
        }
        if (ok) accepted.push_back(e);
    }
    return accepted;
}

SymmetryGroup group_from_orders(const std::vector<unsigned long>& orders, const Rational& center,
                                bool bounded) {
    SymmetryGroup grp;
    grp.bounded_evidence = bounded;
    grp.order = 0;
    for (unsigned long e : orders) {
        grp.elements.push_back(SymmetryElementClass{e, center});
        grp.order += euler_phi(e);
    }
    return grp;
}

}  // namespace

SymmetryGroup sigma_group(const PolyMap& f, unsigned long iterate_bound) {
    if (f.degree() < 2) throw std::invalid_argument("sigma_group: degree >= 2 required");
    if (iterate_bound == 0) throw std::invalid_argument("sigma_group: iterate bound >= 1 required");
    Rational center = -centering_shift(f.poly);
    Poly F = centered(f.poly);

    // For the centered map every symmetry of f^{ok} is a rotation a*z with
    // a^j = 1 for all j >= 1 in the support of the iterate (the shift part
    // is forced to 0 by the subleading coefficient). Aggregate the group
    // orders over all k <= bound; each Sigma(f^{ok}) embeds in the group of
    // a common higher iterate, so the generated cyclic group is sound.
    unsigned long lcm_order = 1;
    Poly Fk(Rational(0));
    for (unsigned long k = 1; k <= iterate_bound; ++k) {
        Fk = (k == 1) ? F : compose(F, Fk);
        std::vector<unsigned long> support;
        for (long j = 1; j <= Fk.degree(); ++j)
            if (Fk.coeff(static_cast<std::size_t>(j)) != 0) support.push_back(static_cast<unsigned long>(j));
        unsigned long D = static_cast<unsigned long>(Fk.degree());
        std::vector<unsigned long> orders = accepted_root_orders(support, D);
        unsigned long gk = orders.empty() ? 1 : orders.back();
        lcm_order = std::lcm(lcm_order, gk);
    }
    std::vector<unsigned long> all_orders;
    for (unsigned long e = 1; e <= lcm_order; ++e)
        if (lcm_order % e == 0) all_orders.push_back(e);
    return group_from_orders(all_orders, center, true);
}

SymmetryGroup commuting_linear(const PolyMap& f) {
    if (f.degree() < 2) throw std::invalid_argument("commuting_linear: degree >= 2 required");
    Rational center = -centering_shift(f.poly);
    Poly F = centered(f.poly);
    const unsigned long d = static_cast<unsigned long>(F.degree());

    // For the centered map, sigma(z) = a*z commutes iff a^{j-1} = 1 for all
    // j in the support; leading coefficient forces a^{d-1} = 1. Check each
    // divisor e of d-1 in the cyclotomic quotient ring.
    std::vector<unsigned long> orders;
    for (unsigned long e = 1; e <= d - 1; ++e) {
        if ((d - 1) % e != 0) continue;
        Poly phi = cyclotomic(e);
        bool ok = true;
        for (long j = 0; j <= F.degree(); ++j) {
            if (F.coeff(static_cast<std::size_t>(j)) == 0) continue;
            long ex = j - 1;
            Poly target;
            if (ex >= 0) {
                target = power_mod_cyclotomic(static_cast<unsigned long>(ex), e, phi);
            } else {
                // a^{-1} = a^{e-1} on e-th roots of unity
                target = power_mod_cyclotomic(e - 1, e, phi);
            }
            if (!(target == Poly(Rational(1)))) {
                ok = false;
                break;
            }
        }
        if (ok) orders.push_back(e);
    }
    return group_from_orders(orders, center, false);
}

OrbitResult orbit(const PolyMap& f, const Rational& x, unsigned long n) {
    OrbitResult out;
    const Poly& p = f.poly;
    Rational sum_abs = 0;
    for (long j = 0; j < p.degree(); ++j) sum_abs += abs(p.coeff(static_cast<std::size_t>(j)));
    out.escape_radius = 1 + sum_abs / abs(p.leading());
    Rational cur = x;
    out.points.push_back(cur);
    for (unsigned long i = 0; i <= n; ++i) {
        if (!out.escaped && abs(cur) > out.escape_radius) {
            out.escaped = true;
            out.escape_index = static_cast<long>(i);
        }
        if (i == n) break;
        cur = p(cur);
        out.points.push_back(cur);
    }
    return out;
}

}  // namespace multispec
