#include "multispec/classify.hpp"

#include <algorithm>
#include <numeric>

#include "multispec/exactalg.hpp"

namespace multispec {

namespace {

// Res_z(a(z), F(z) - t) as a polynomial in t, by evaluation at deg(a)+1
// rational points followed by exact interpolation.
Poly resultant_in_t(const Poly& a, const Poly& F) {
    long deg_t = a.degree();  // Res is lc(a)^m * prod(F(root) - t)
    std::vector<Rational> xs, ys;
    for (long s = 0; s <= deg_t; ++s) {
        Rational t(s);
        xs.push_back(t);
        ys.push_back(resultant(a, F - Poly(t)));
    }
    return interpolate(xs, ys);
}

}  // namespace

unsigned long distinct_critical_values_count(const PolyMap& F) {
    if (F.degree() < 2) throw std::invalid_argument("classify: degree >= 2 required");
    Poly R = resultant_in_t(F.poly.derivative(), F.poly);
    return static_cast<unsigned long>(radical(R).degree());
}

bool is_presimple(const PolyMap& F) {
    return distinct_critical_values_count(F) == static_cast<unsigned long>(F.degree() - 1);
}

ExceptionalResult is_exceptional(const PolyMap& F) {
    if (F.degree() < 2) throw std::invalid_argument("classify: degree >= 2 required");
    const unsigned long d = static_cast<unsigned long>(F.degree());
    ExceptionalResult out;
    if (auto w = conjugacy_test(PolyMap(Poly::monomial(Rational(1), d)), F)) {
        out.exceptional = true;
        out.tag = ExceptionalTag::power;
        out.witness = *w;
        return out;
    }
    PolyMap td = chebyshev(d);
    if (auto w = conjugacy_test(td, F)) {
        out.exceptional = true;
        out.tag = ExceptionalTag::chebyshev_plus;
        out.witness = *w;
        return out;
    }
    if (auto w = conjugacy_test(PolyMap(-td.poly), F)) {
        out.exceptional = true;
        out.tag = ExceptionalTag::chebyshev_minus;
        out.witness = *w;
        return out;
    }
    return out;
}

PolyMap gl_cubic_family(const Rational& lambda, const Rational& b, const Rational& mu) {
    if (lambda == 0 || b == 0) throw std::invalid_argument("gl_cubic_family: lambda, b != 0 required");
    std::vector<Rational> c(4);
    c[3] = lambda * lambda;
    c[2] = lambda * (3 * mu + 2 * b);
    c[1] = (mu + b) * (3 * mu + b);
    c[0] = (mu / lambda) * (mu * mu + 2 * mu * b + b * b - 1);
    return PolyMap(Poly(c));
}

// ---------------------------------------------------------------------------
// Quotient-ring polynomial arithmetic for the generalized Lattes search:
// elements of K = Q[y]/(q) are Polys of degree < deg q; polynomials over K
// are vectors of such elements. Any required inversion of a nonzero
// zero-divisor aborts with FactorRefinementNeeded.

namespace {

struct QuotientRing {
    Poly q;  // monic squarefree, degree >= 1

    Poly reduce(const Poly& a) const { return a.divmod(q).remainder; }
    bool is_zero(const Poly& a) const { return reduce(a).is_zero(); }

    // Inverse in K; throws FactorRefinementNeeded when a is a nonzero
    // zero-divisor (gcd(a, q) proper).
    Poly inv(const Poly& a) const {
        Poly r = reduce(a);
        if (r.is_zero()) throw std::domain_error("quotient ring: inverse of zero");
        // extended Euclid over Q[y] for gcd(r, q)
        Poly old_r = q, cur_r = r;
        Poly old_t(Rational(0)), cur_t(Rational(1));
        while (!cur_r.is_zero()) {
            PolyDivMod dm = old_r.divmod(cur_r);
            Poly next_r = dm.remainder;
            Poly next_t = old_t - dm.quotient * cur_t;
            old_r = std::move(cur_r);
            old_t = std::move(cur_t);
            cur_r = std::move(next_r);
            cur_t = std::move(next_t);
        }
        if (old_r.degree() != 0)
            throw FactorRefinementNeeded("needs factor refinement", poly_gcd(old_r, q));
        return reduce(old_t * Poly(1 / old_r.coeff(0)));
    }

    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
};

// Dense polynomial over the quotient ring, ascending, trimmed.
struct QPoly {
    std::vector<Poly> c;

    void trim(const QuotientRing& K) {
        while (!c.empty() && K.is_zero(c.back())) c.pop_back();
    }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

QPoly qp_from(const Poly& p) {
    QPoly out;
    for (const Rational& x : p.coeffs()) out.c.push_back(Poly(x));
    return out;
}

QPoly qp_sub(const QuotientRing& K, const QPoly& a, const QPoly& b) {
    QPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), Poly(Rational(0)));
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    for (auto& e : out.c) e = K.reduce(e);
    out.trim(K);
    return out;
}

QPoly qp_mul(const QuotientRing& K, const QPoly& a, const QPoly& b) {
    QPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c.resize(a.c.size() + b.c.size() - 1, Poly(Rational(0)));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    for (auto& e : out.c) e = K.reduce(e);
    out.trim(K);
    return out;
}

QPoly qp_scale(const QuotientRing& K, const QPoly& a, const Poly& s) {
    QPoly out = a;
    for (auto& e : out.c) e = K.mul(e, s);
    out.trim(K);
    return out;
}

QPoly qp_derivative(const QuotientRing& K, const QPoly& a) {
    QPoly out;
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out.c.push_back(K.reduce(a.c[i] * Poly(Rational(static_cast<long>(i)))));
    out.trim(K);
    return out;
}

// Euclidean division; the divisor's leading coefficient must be invertible.
struct QDivMod {
    QPoly quotient;
    QPoly remainder;
};

QDivMod qp_divmod(const QuotientRing& K, QPoly a, const QPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("quotient-ring division by zero");
    Poly lb_inv = K.inv(b.c.back());
    QDivMod out;
    a.trim(K);
    const long db = b.degree();
    if (a.degree() < db) {
        out.remainder = std::move(a);
        return out;
    }
    out.quotient.c.resize(static_cast<std::size_t>(a.degree() - db) + 1, Poly(Rational(0)));
    while (a.degree() >= db && !a.is_zero()) {
        Poly factor = K.mul(a.c.back(), lb_inv);
        std::size_t shift = a.c.size() - 1 - static_cast<std::size_t>(db);
        out.quotient.c[shift] = factor;
        for (long i = 0; i <= db; ++i)
            a.c[shift + static_cast<std::size_t>(i)] =
                K.reduce(a.c[shift + static_cast<std::size_t>(i)] - factor * b.c[static_cast<std::size_t>(i)]);
        a.trim(K);
    }
    out.quotient.trim(K);
    out.remainder = std::move(a);
    return out;
}

QPoly qp_exact_div(const QuotientRing& K, const QPoly& a, const QPoly& b) {
    QDivMod dm = qp_divmod(K, a, b);
    if (!dm.remainder.is_zero())
        throw FactorRefinementNeeded("needs factor refinement", K.q);
    return dm.quotient;
}

// Monic gcd over K[X] via Euclid; leading coefficients must stay invertible.
QPoly qp_gcd(const QuotientRing& K, QPoly a, QPoly b) {
    a.trim(K);
    b.trim(K);
    while (!b.is_zero()) {
        QPoly r = qp_divmod(K, a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = qp_scale(K, a, K.inv(a.c.back()));  // monic
    return a;
}

// Multiplicities of the squarefree decomposition of a monic nonconstant s
// over K[X] (Yun's algorithm); degrees of the factors are also returned.
std::vector<std::pair<long, unsigned long>> qp_yun_multiplicities(const QuotientRing& K, QPoly s) {
    std::vector<std::pair<long, unsigned long>> out;
    QPoly sp = qp_derivative(K, s);
    QPoly a0 = qp_gcd(K, s, sp);
    QPoly b = qp_exact_div(K, s, a0);
    QPoly c = qp_exact_div(K, sp, a0);
    QPoly d = qp_sub(K, c, qp_derivative(K, b));
    unsigned long i = 1;
    while (b.degree() > 0) {
        QPoly g = qp_gcd(K, b, d);
        if (g.degree() > 0) out.emplace_back(g.degree(), i);
        b = qp_exact_div(K, b, g);
        c = qp_exact_div(K, d, g);
        d = qp_sub(K, c, qp_derivative(K, b));
        ++i;
    }
    return out;
}

// Rational roots of p, each with its multiplicity divided out of p.
std::vector<Rational> extract_rational_roots(Poly& p) {
    std::vector<Rational> out;
    bool progress = true;
    while (progress && p.degree() >= 1) {
        progress = false;
        if (p.coeff(0) == 0) {
            std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
            p = Poly(c);
            out.push_back(0);
            progress = true;
            continue;
        }
        Poly::Cleared cl = p.cleared();
        Integer a0 = abs(cl.coeffs.front());
        Integer an = abs(cl.coeffs.back());
        auto divisors = [](const Integer& v) {
            std::vector<Integer> ds;
            for (Integer i = 1; i * i <= v; ++i)
                if (v % i == 0) {
                    ds.push_back(i);
                    if (i * i != v) ds.push_back(v / i);
                }
            return ds;
        };
        for (const Integer& num : divisors(a0)) {
            for (const Integer& den : divisors(an)) {
                for (int sign : {1, -1}) {
                    Rational cand = Rational(num) / Rational(den) * sign;
                    cand.canonicalize();
                    if (p(cand) == 0) {
                        out.push_back(cand);
                        p = p.exact_div(Poly{-cand, 1});
                        progress = true;
                    }
                    if (progress) break;
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    return out;
}

// Divisor-shape test at a rational fixed point p: F(X) - p must factor as
// c (X-p)^r S(X)^n with gcd(r,n)=1, n >= 2.
std::optional<GLForm> gl_at_rational_point(const Poly& F, const Rational& p) {
    Poly shifted = F - Poly(p);
    SquarefreeDecomposition dec = squarefree(shifted);
    unsigned long r = 0;
    std::vector<unsigned long> rest;  // multiplicities of the non-p part
    for (const auto& [factor, mult] : dec.factors) {
        if (factor(p) == 0) {
            r = mult;
            if (factor.degree() > 1) rest.push_back(mult);
        } else {
            rest.push_back(mult);
        }
    }
    if (r == 0 || rest.empty()) return std::nullopt;
    unsigned long n0 = 0;
    for (unsigned long m : rest) n0 = std::gcd(n0, m);
    for (unsigned long n = n0; n >= 2; --n) {
        if (n0 % n != 0) continue;
        if (std::gcd(r, n) != 1) continue;
        GLForm form;
        form.r = r;
        form.n = n;
        form.rational_witness = p;
        form.witness_description = to_string(p);
        return form;
    }
    return std::nullopt;
}

// Divisor-shape test over the quotient ring K = Q[y]/(q) at the fixed
// point y (q a squarefree factor of F(z)-z with no rational roots).
std::optional<GLForm> gl_at_quotient_factor(const Poly& F, const Poly& q) {
    QuotientRing K{q.monic()};
    // multiplicity r of (X - y) in F(X) - y: first nonvanishing derivative
    Poly y_elem = Poly::variable();
    unsigned long r = 0;
    Poly deriv = F;
    for (long t = 1; t <= F.degree(); ++t) {
        deriv = deriv.derivative();
        Poly val = K.reduce(compose(deriv, y_elem));
        if (!val.is_zero()) {
            // must be invertible for a uniform multiplicity across the roots
            (void)K.inv(val);
            r = static_cast<unsigned long>(t);
            break;
        }
    }
    if (r == 0) throw std::logic_error("gl search: fixed-point multiplicity not found");

    // S(X) = (F(X) - y) / (X - y)^r over K
    QPoly G = qp_from(F);
    // subtract y (the class of the variable) from the constant coefficient
    if (G.c.empty()) G.c.push_back(Poly(Rational(0)));
    G.c[0] = K.reduce(G.c[0] - y_elem);
    G.trim(K);
    QPoly lin;  // X - y
    lin.c = {Poly(Rational(0)) - y_elem, Poly(Rational(1))};
    for (unsigned long t = 0; t < r; ++t) G = qp_exact_div(K, G, lin);
    if (G.degree() < 1) return std::nullopt;  // pure (X-y)^d: exceptional shape
    G = qp_scale(K, G, K.inv(G.c.back()));    // monic

    unsigned long n0 = 0;
    for (const auto& [deg, mult] : qp_yun_multiplicities(K, G)) {
        (void)deg;
        n0 = std::gcd(n0, mult);
    }
    for (unsigned long n = n0; n >= 2; --n) {
        if (n0 % n != 0) continue;
        if (std::gcd(r, n) != 1) continue;
        GLForm form;
        form.r = r;
        form.n = n;
        form.witness_description = "root of " + q.monic().str();
        return form;
    }
    return std::nullopt;
}

}  // namespace

GLResult generalized_lattes_form(const PolyMap& F) {
    if (F.degree() < 2) throw std::invalid_argument("classify: degree >= 2 required");
    GLResult out;
    ExceptionalResult exc = is_exceptional(F);
    if (exc.exceptional) {
        out.is_gl = true;
        out.via_exceptional = true;
        return out;
    }
    Poly fixed = F.poly - Poly::variable();
    for (const auto& [factor, mult] : squarefree(fixed).factors) {
        Poly rem = factor;
        for (const Rational& p : extract_rational_roots(rem)) {
            if (auto form = gl_at_rational_point(F.poly, p)) {
                out.is_gl = true;
                out.form = form;
                return out;
            }
        }
        if (rem.degree() >= 1) {
            if (auto form = gl_at_quotient_factor(F.poly, rem)) {
                out.is_gl = true;
                out.form = form;
                return out;
            }
        }
    }
    return out;
}

RamificationPortrait ramification_portrait(const std::vector<PolyMap>& maps) {
    if (maps.empty() || maps.size() > 2)
        throw std::invalid_argument("ramification_portrait: one or two maps required");
    RamificationPortrait out;
    for (const PolyMap& m : maps) out.degrees.push_back(m.degree());

    // per map: list of (local degree e+1, value polynomial R_q)
    struct CritData {
        unsigned long local_degree;
        Poly values;  // monic in t, degree = number of critical points carried
    };
    std::vector<std::vector<CritData>> crit(maps.size());
    std::vector<Poly> all_radicals;
    for (std::size_t mi = 0; mi < maps.size(); ++mi) {
        const Poly& f = maps[mi].poly;
        if (f.degree() < 2) continue;  // degree-1 maps carry the trivial portrait
        for (const auto& [q, e] : squarefree(f.derivative()).factors) {
            Poly Rq = resultant_in_t(q, f).monic();
            crit[mi].push_back(CritData{e + 1, Rq});
            all_radicals.push_back(radical(Rq));
        }
    }
    std::vector<Poly> basis = coprime_basis(all_radicals);

    for (const Poly& c : basis) {
        RamificationClass cls;
        cls.value_factor = c;
        for (std::size_t mi = 0; mi < maps.size(); ++mi) {
            std::vector<unsigned long> parts;
            unsigned long covered = 0;
            for (const CritData& cd : crit[mi]) {
                Poly rem = cd.values;
                unsigned long mu = 0;
                while (true) {
                    PolyDivMod dm = rem.divmod(c);
                    if (!dm.remainder.is_zero()) break;
                    rem = dm.quotient;
                    ++mu;
                }
                if (poly_gcd(c, rem).degree() > 0)
                    throw FactorRefinementNeeded("ambiguous value class - refine factorization", c);
                for (unsigned long t = 0; t < mu; ++t) {
                    parts.push_back(cd.local_degree);
                    covered += cd.local_degree;
                }
            }
            unsigned long deg = static_cast<unsigned long>(maps[mi].degree());
            if (covered > deg) throw std::logic_error("ramification portrait: fiber overflow");
            while (covered < deg) {
                parts.push_back(1);
                ++covered;
            }
            std::sort(parts.rbegin(), parts.rend());
            cls.profiles.push_back(std::move(parts));
        }
        out.classes.push_back(std::move(cls));
    }

    // degree bookkeeping: sum of (part - 1) over all finite classes = deg - 1
    for (std::size_t mi = 0; mi < maps.size(); ++mi) {
        long total = 0;
        for (const RamificationClass& cls : out.classes) {
            long per_point = 0;
            for (unsigned long part : cls.profiles[mi]) per_point += static_cast<long>(part) - 1;
            total += cls.value_factor.degree() * per_point;
        }
        if (total != maps[mi].degree() - 1)
            throw std::logic_error("ramification portrait: degree bookkeeping failed");
    }
    return out;
}

long genus_hFH(const PolyMap& F, const PolyMap& H) {
    RamificationPortrait port = ramification_portrait({F, H});
    const long m = F.degree();
    const long n = H.degree();
    long r = 0;
    long gcd_sum = 0;
    for (const RamificationClass& cls : port.classes) {
        r += cls.value_factor.degree();
        long per_point = 0;
        for (unsigned long a : cls.profiles[0])
            for (unsigned long b : cls.profiles[1]) per_point += static_cast<long>(std::gcd(a, b));
        gcd_sum += cls.value_factor.degree() * per_point;
    }
    long rhs = static_cast<long>(std::gcd(m, n)) - (r - 1) * m * n + gcd_sum;
    long two_g = 2 - rhs;
    if (two_g % 2 != 0) throw std::logic_error("genus_hFH: formula value not even");
    return two_g / 2;
}

long genus_hF(const PolyMap& F) {
    if (F.degree() < 2) throw std::invalid_argument("genus_hF: degree >= 2 required");
    RamificationPortrait port = ramification_portrait({F});
    const long m = F.degree();
    long r = 0;
    long gcd_sum = 0;
    for (const RamificationClass& cls : port.classes) {
        r += cls.value_factor.degree();
        long per_point = 0;
        for (unsigned long a : cls.profiles[0])
            for (unsigned long b : cls.profiles[0]) per_point += static_cast<long>(std::gcd(a, b));
        gcd_sum += cls.value_factor.degree() * per_point;
    }
    long rhs = m - (r - 1) * m * m + gcd_sum;
    long two_g = 4 - rhs;
    if (two_g % 2 != 0) throw std::logic_error("genus_hF: formula value not even");
    return two_g / 2;
}

}  // namespace multispec
