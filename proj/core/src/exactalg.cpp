#include "multispec/exactalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "multispec/modular.hpp"

namespace multispec {

namespace {

using ZPoly = std::vector<Integer>;  // ascending, trimmed

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;  // 0 only for the zero polynomial
}

// Exact pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const long delta = static_cast<long>(a.size()) - 1 - db;
    const Integer& lb = b.back();
    ZPoly r = a;
    long steps = 0;
    while (static_cast<long>(r.size()) - 1 >= db) {
        Integer top = r.back();
        r.pop_back();
        for (auto& c : r) c *= lb;
        std::size_t shift = r.size() - static_cast<std::size_t>(db);
        for (long i = 0; i < db; ++i) r[shift + static_cast<std::size_t>(i)] -= top * b[static_cast<std::size_t>(i)];
        trim(r);
        ++steps;
    }
    // Degree may have dropped more than one per step; pad the multiplier so
    // the result is exactly lc(b)^(delta+1) * a mod b.
    Integer extra;
    mpz_pow_ui(extra.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
    for (auto& c : r) c *= extra;
    return r;
}

}  // namespace

Rational resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.is_constant()) {
        // Res(c, B) = c^deg B
        Rational r = 1;
        for (long i = 0; i < b.degree(); ++i) r *= a.coeff(0);
        return r;
    }
    if (b.is_constant()) {
        // Res(A, c) = c^deg A
        Rational r = 1;
        for (long i = 0; i < a.degree(); ++i) r *= b.coeff(0);
        return r;
    }

    // Clear denominators: A = An/da, B = Bn/db with An,Bn in Z[z].
    Poly::Cleared ca = a.cleared();
    Poly::Cleared cb = b.cleared();
    const long m = a.degree();
    const long n = b.degree();
    // Res(A,B) = Res(An,Bn) / (da^n * db^m)
    Rational scale = 1;
    for (long i = 0; i < n; ++i) scale *= Rational(ca.den);
    for (long i = 0; i < m; ++i) scale *= Rational(cb.den);

    ZPoly A = ca.coeffs, B = cb.coeffs;
    trim(A);
    trim(B);

    // Subresultant PRS (Cohen, Alg. 3.3.7).
    int sign = 1;
    if (A.size() < B.size()) {
        std::swap(A, B);
        if ((m % 2) == 1 && (n % 2) == 1) sign = -sign;
    }
    Integer contA = content(A), contB = content(B);
    Integer content_factor = 1;
    {
        // Res(cA', B) = c^degB Res(A',B), similarly for B.
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), contA.get_mpz_t(), static_cast<unsigned long>(B.size() - 1));
        content_factor *= t;
        mpz_pow_ui(t.get_mpz_t(), contB.get_mpz_t(), static_cast<unsigned long>(A.size() - 1));
        content_factor *= t;
        for (auto& c : A) c /= contA;
        for (auto& c : B) c /= contB;
    }

    Integer g = 1, h = 1;
    while (true) {
        long dA = static_cast<long>(A.size()) - 1;
        long dB = static_cast<long>(B.size()) - 1;
        long delta = dA - dB;
        if ((dA % 2) == 1 && (dB % 2) == 1) sign = -sign;
        ZPoly R = pseudo_rem(A, B);
        if (R.empty()) return 0;  // common root
        Integer gh;  // g * h^delta
        {
            Integer hp;
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
            gh = g * hp;
        }
        for (auto& c : R) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), gh.get_mpz_t());
            c = q;
        }
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        {
            // h = lc(A)^delta * h^(1-delta) exactly
            Integer gp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            if (delta == 0) {
                // h unchanged times 1
            } else if (delta == 1) {
                h = gp;
            } else {
                Integer hp;
                mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
            }
        }
        if (B.size() == 1) {
            long dA2 = static_cast<long>(A.size()) - 1;
            Integer s;
            mpz_pow_ui(s.get_mpz_t(), B.back().get_mpz_t(), static_cast<unsigned long>(dA2));
            Integer hp;
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(dA2 - 1));
            Integer resz;
            mpz_divexact(resz.get_mpz_t(), s.get_mpz_t(), hp.get_mpz_t());
            Rational out = Rational(resz) * Rational(content_factor);
            if (sign < 0) out = -out;
            out /= scale;
            out.canonicalize();
            return out;
        }
    }
}

Poly SquarefreeDecomposition::reassemble() const {
    Poly out(unit);
    for (const auto& [f, e] : factors) out = out * f.pow(e);
    return out;
}

Poly SquarefreeDecomposition::radical() const {
    Poly out(Rational(1));
    for (const auto& [f, e] : factors) out = out * f;
    return out;
}

SquarefreeDecomposition squarefree(const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    SquarefreeDecomposition out;
    out.unit = a.leading();
    if (a.is_constant()) {
        out.unit = a.coeff(0);
        return out;
    }
    Poly f = a.monic();
    // Yun's algorithm.
    Poly fp = f.derivative();
    Poly a0 = poly_gcd(f, fp);
    Poly b = f.exact_div(a0);
    Poly c = fp.exact_div(a0);
    Poly d = c - b.derivative();
    unsigned long i = 1;
    while (!(b.is_constant())) {
        Poly g = poly_gcd(b, d);
        if (g.degree() > 0) out.factors.emplace_back(g, i);
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Poly radical(const Poly& a) { return squarefree(a).radical(); }

bool radical_divides(const Poly& a, const Poly& b) {
    if (a.is_constant()) return true;
    if (b.is_zero()) return true;
    Poly ra = radical(a);
    Poly g = poly_gcd(ra, b);
    return g == ra;
}

std::vector<Poly> coprime_basis(const std::vector<Poly>& inputs) {
    std::vector<Poly> basis;
    for (const Poly& raw : inputs) {
        if (raw.is_zero()) throw std::invalid_argument("coprime_basis: zero input");
        if (raw.is_constant()) continue;
        std::vector<Poly> pending{radical(raw)};
        while (!pending.empty()) {
            Poly f = std::move(pending.back());
            pending.pop_back();
            if (f.degree() < 1) continue;
            bool split = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                Poly g = poly_gcd(f, basis[i]);
                if (g.degree() < 1) continue;
                if (g == basis[i]) {
                    f = f.exact_div(g);
                    if (f.degree() < 1) {
                        split = true;
                        break;
                    }
                    continue;
                }
                // basis[i] splits as g * (basis[i]/g)
                Poly rest = basis[i].exact_div(g).monic();
                basis[i] = g.monic();
                basis.push_back(rest);
                pending.push_back(std::move(f));
                split = true;
                break;
            }
            if (!split && f.degree() >= 1) basis.push_back(f.monic());
        }
    }
    std::sort(basis.begin(), basis.end(), [](const Poly& x, const Poly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        for (long i = x.degree(); i >= 0; --i) {
            if (x.coeff(static_cast<std::size_t>(i)) != y.coeff(static_cast<std::size_t>(i)))
                return x.coeff(static_cast<std::size_t>(i)) < y.coeff(static_cast<std::size_t>(i));
        }
        return false;
    });
    return basis;
}

namespace {

Rational int_abs_bound(const std::vector<Integer>& v) {
    Integer m = 0;
    for (const auto& c : v) {
        Integer a = abs(c);
        if (a > m) m = a;
    }
    return Rational(m);
}

}  // namespace

Poly charpoly_mod(const Poly& b, const Poly& a) {
    if (a.degree() < 1) throw std::invalid_argument("charpoly_mod: modulus must be nonconstant");
    const std::size_t m = static_cast<std::size_t>(a.degree());

    Poly::Cleared ca = a.cleared();
    std::vector<Integer> An = ca.coeffs;  // lc = An[m]
    // Clear B's denominators: B = Bn / bd with Bn in Z[z].
    Poly::Cleared cbn = b.cleared();
    std::vector<Integer> Bn = cbn.coeffs;
    Integer bd = cbn.den;
    while (!Bn.empty() && Bn.back() == 0) Bn.pop_back();
    const long degB = static_cast<long>(Bn.size()) - 1;

    // T(w) = a^{deg Bn} * bd^m * charpoly(w), an integer polynomial.
    Integer S;
    {
        Integer t1, t2;
        mpz_pow_ui(t1.get_mpz_t(), An[m].get_mpz_t(), degB >= 0 ? static_cast<unsigned long>(degB) : 0);
        mpz_pow_ui(t2.get_mpz_t(), bd.get_mpz_t(), static_cast<unsigned long>(m));
        S = t1 * t2;
    }

    // Coefficient bound for T: |charpoly_j| <= C(m,j) Mb^{m-j} <= (1+Mb)^m
    // with Mb a bound on |B(z_i)| over roots z_i of A (Cauchy root bound).
    Rational bound;
    {
        Rational R = 1;  // root bound: 1 + max|An_i|/|An_m|
        Rational lc = Rational(abs(An[m]));
        Rational mx = 0;
        for (std::size_t i = 0; i < m; ++i) {
            Rational t = Rational(abs(An[i])) / lc;
            if (t > mx) mx = t;
        }
        R = 1 + mx;
        Rational Mb = 0, Rp = 1;
        for (std::size_t j = 0; j < Bn.size(); ++j) {
            Mb += Rational(abs(Bn[j])) * Rp;
            Rp *= R;
        }
        Mb /= Rational(bd);
        Rational onep = 1 + Mb;
        bound = Rational(abs(S));
        for (std::size_t i = 0; i < m; ++i) bound *= onep;
    }

    PrimeSource primes;
    CrtVector crt(m + 1);
    std::vector<Integer> stable_snapshot;
    int stable_count = 0;
    Poly result;
    while (true) {
        std::uint64_t p = primes.next();
        if (mpz_divisible_ui_p(An[m].get_mpz_t(), p) || mpz_divisible_ui_p(bd.get_mpz_t(), p))
            continue;  // bad prime
        PrimeField fp(p);
        ModPoly am(m + 1), bm;
        for (std::size_t i = 0; i <= m; ++i) am[i] = fp.reduce(An[i]);
        bm.resize(Bn.size());
        for (std::size_t i = 0; i < Bn.size(); ++i) bm[i] = fp.reduce(Bn[i]);
        while (!bm.empty() && bm.back() == 0) bm.pop_back();
        std::vector<std::uint64_t> cp = charpoly_mult_mod(bm, am, fp);
        // charpoly of mult-by-(Bn/bd): scale variable — charpoly_{B}(w) =
        // bd^{-m} charpoly_{Bn}(bd w); then T = S * charpoly_B. Work with
        // T's image directly: T(w) mod p = S * bd^{-m} * cp(bd w) mod p.
        std::uint64_t bdm = fp.reduce(Integer(bd));
        std::uint64_t Sm = fp.reduce(S);
        std::uint64_t bdmm = fp.pow(bdm, m);
        std::uint64_t factor = fp.mul(Sm, fp.inv(bdmm));
        std::vector<std::uint64_t> img(m + 1);
        std::uint64_t bdpow = fp.one();
        for (std::size_t i = 0; i <= m; ++i) {
            std::uint64_t ci = fp.to_mont(cp[i]);
            img[i] = fp.from_mont(fp.mul(fp.mul(factor, ci), bdpow));
            bdpow = fp.mul(bdpow, bdm);
        }
        crt.add_image(img, p);

        bool stable = (!stable_snapshot.empty() && stable_snapshot == crt.values());
        if (stable)
            ++stable_count;
        else {
            stable_count = 0;
            stable_snapshot = crt.values();
        }
        bool bounded = Rational(crt.modulus()) > 2 * bound;
        if (stable_count >= 2 || bounded) {
            const std::vector<Integer>& T = crt.values();
            if (bounded) {
                for (const auto& c : T)
                    if (Rational(abs(c)) > bound) throw std::logic_error("charpoly_mod: coefficient bound violated");
            }
            std::vector<Rational> coeffs(m + 1);
            for (std::size_t i = 0; i <= m; ++i) {
                coeffs[i] = Rational(T[i]) / Rational(S);
                coeffs[i].canonicalize();
            }
            result = Poly(coeffs);
            if (result.degree() != static_cast<long>(m) || result.leading() != 1) {
                if (stable_count >= 2 && !bounded) {
                    // unlucky stabilization: keep going
                    stable_count = 0;
                    continue;
                }
                throw std::logic_error("charpoly_mod: result not monic of expected degree");
            }
            return result;
        }
    }
}

}  // namespace multispec
