#include "multispec/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "multispec/exactalg.hpp"

namespace multispec {

namespace {

using cplx = std::complex<long double>;  // extended precision keeps the
// Newton-residual certification floor well below double-precision tol

cplx horner(const std::vector<cplx>& coeffs, const cplx& x) {
    cplx acc = 0.0L;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

// Aberth-Ehrlich on a squarefree monic polynomial given by double
// coefficients (ascending).
std::vector<cplx> aberth(const std::vector<cplx>& coeffs, long double tol) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<cplx> dcoeffs(n);
    for (std::size_t i = 1; i <= n; ++i) dcoeffs[i - 1] = coeffs[i] * static_cast<long double>(i);

    // Fujiwara root bound 2 * max_k |a_{n-k}|^{1/k} (monic input): a much
    // tighter initial shell than the Cauchy bound when coefficients are
    // huge, which keeps the iteration well conditioned.
    long double radius = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        long double a = std::abs(coeffs[i]);
        if (a > 0.0L) radius = std::max(radius, std::pow(a, 1.0L / static_cast<long double>(n - i)));
    }
    radius = radius > 0.0L ? 2.0L * radius : 1.0L;
    std::vector<cplx> z(n);
    const long double golden = 0.618033988749894848L;
    for (std::size_t i = 0; i < n; ++i) {
        long double angle = 2.0L * static_cast<long double>(M_PI) *
                            (static_cast<long double>(i) / n + golden * i);
        z[i] = std::polar(radius * (0.5L + 0.5L * static_cast<long double>(i + 1) / n), angle) +
               cplx(0.3L, 0.2L);
    }

    const int max_iter = 3000;
    for (int iter = 0; iter < max_iter; ++iter) {
        long double worst = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            cplx pv = horner(coeffs, z[i]);
            cplx dv = horner(dcoeffs, z[i]);
            if (dv == cplx(0.0L)) {
                z[i] += cplx(1e-6L, 1e-6L);
                worst = 1.0L;
                continue;
            }
            cplx newton = pv / dv;
            cplx rep = 0.0L;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) rep += 1.0L / (z[i] - z[j]);
            }
            cplx denom = 1.0L - newton * rep;
            cplx corr = denom == cplx(0.0L) ? newton : newton / denom;
            z[i] -= corr;
            long double rel = std::abs(corr) / std::max(1.0L, std::abs(z[i]));
            worst = std::max(worst, rel);
        }
        if (worst < tol * 0.25L) break;
    }

    // Certification: Newton residual |p(z)/p'(z)| below tol at every root
    // (squarefree polynomial, so the correction bounds the distance to a
    // root up to a condition factor absorbed in the margin).
    for (std::size_t i = 0; i < n; ++i) {
        cplx pv = horner(coeffs, z[i]);
        cplx dv = horner(dcoeffs, z[i]);
        if (dv == cplx(0.0L) || !(std::abs(pv / dv) <= tol * std::max(1.0L, std::abs(z[i]))))
            throw std::runtime_error("precision exhausted");
    }
    return z;
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const Poly& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");
    if (!(tol > 0)) throw std::invalid_argument("complex_roots: tol must be positive");
    std::vector<std::complex<double>> out;
    if (p.is_constant()) return out;
    SquarefreeDecomposition dec = squarefree(p);
    for (const auto& [factor, mult] : dec.factors) {
        Poly f = factor.monic();
        std::vector<cplx> coeffs(f.coeffs().size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            // full extended-precision conversion; get_d() would round the
            // coefficients to double and cap the attainable root accuracy
            const Rational& c = f.coeff(i);
            long double num = std::strtold(c.get_num().get_str().c_str(), nullptr);
            long double den = std::strtold(c.get_den().get_str().c_str(), nullptr);
            coeffs[i] = num / den;
        }
        std::vector<cplx> roots;
        if (f.degree() == 1) {
            roots.push_back(-coeffs[0]);
        } else {
            roots = aberth(coeffs, static_cast<long double>(tol));
        }
        for (const cplx& r : roots)
            for (unsigned long t = 0; t < mult; ++t)
                out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    return out;
}

}  // namespace multispec
