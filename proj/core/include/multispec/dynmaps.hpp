#ifndef MULTISPEC_DYNMAPS_HPP
#define MULTISPEC_DYNMAPS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "multispec/poly.hpp"

namespace multispec {

// A polynomial map of the Riemann sphere; degree >= 1, dynamical
// operations additionally require degree >= 2.
struct PolyMap {
    Poly poly;

    explicit PolyMap(Poly p);
    long degree() const { return poly.degree(); }
};

// Certificate for an algebraic scale alpha: alpha^g = rho together with the
// verified power-consistency relations recorded in `checks`. Constructed
// only after every check has passed.
struct RootCertificate {
    unsigned long g = 1;
    Rational rho;
    std::vector<std::string> checks;
};

// Affine map z -> scale*(z + pre_shift) + shift. Rational-scale maps are
// normalized to pre_shift = 0, i.e. z -> scale*z + shift; the pre_shift
// slot carries the centering shift only when the scale is a certificate
// (the exact map is then alpha*(z + pre_shift) + shift for any root alpha
// of the certificate).
struct AffineMap {
    std::variant<Rational, RootCertificate> scale = Rational(1);
    Rational pre_shift = 0;
    Rational shift = 0;

    bool has_rational_scale() const { return std::holds_alternative<Rational>(scale); }
    const Rational& rational_scale() const { return std::get<Rational>(scale); }

    static AffineMap identity() { return AffineMap{}; }
    static AffineMap linear(const Rational& a, const Rational& b);

    // Total for rational scales; throws for certificate scales.
    AffineMap inverse() const;
    AffineMap compose(const AffineMap& inner) const;  // this after inner
    Rational operator()(const Rational& x) const;
};

// A finite group of affine symmetries sharing a common fixed point. Each
// element class (root_order e, shift c) stands for the phi(e) maps
// z -> zeta*(z - c) + c with zeta a primitive e-th root of unity; the
// identity is the class e = 1.
struct SymmetryElementClass {
    unsigned long root_order = 1;
    Rational shift = 0;
};

struct SymmetryGroup {
    unsigned long order = 1;
    std::vector<SymmetryElementClass> elements;  // sorted by root_order
    // True when the group was assembled from finitely many iterate levels
    // and stabilization beyond the bound is not certified.
    bool bounded_evidence = false;
};

// sigma o f o sigma^{-1}; sigma must have rational scale.
PolyMap conjugate(const PolyMap& f, const AffineMap& sigma);

// Decides affine conjugacy over the complex numbers; returns a witness
// sigma with g = sigma o f o sigma^{-1} when one exists. Rational witnesses
// are verified by direct conjugation; algebraic scales come back as a
// RootCertificate with pre/post shifts filled in.
std::optional<AffineMap> conjugacy_test(const PolyMap& f, const PolyMap& g);

// Chebyshev polynomial T_d normalized by T_d(z + 1/z scaled): T_1 = z,
// T_2 = z^2 - 2, T_{n+1} = z*T_n - T_{n-1}.
PolyMap chebyshev(unsigned long d);

// Normal form P_{c,a} of degree d: derivative is exactly z * prod(z - c_i),
// constant term a^d; c must have d-2 entries.
PolyMap build_Pca(const std::vector<Rational>& c, const Rational& a, unsigned long d);

// Affine symmetries sigma with f^{ok} o sigma = f^{ok}, aggregated over
// k = 1..iterate_bound (bounded evidence for the full symmetry group of
// the iterated family). Power maps z^d additionally carry a full circle
// of symmetries; the enumeration captures exactly the finite subgroup with
// a^D = 1 that the coefficient comparison allows.
SymmetryGroup sigma_group(const PolyMap& f, unsigned long iterate_bound);

// Affine sigma with sigma o f = f o sigma.
SymmetryGroup commuting_linear(const PolyMap& f);

struct OrbitResult {
    std::vector<Rational> points;  // x, f(x), ..., f^{on}(x)
    bool escaped = false;
    long escape_index = -1;  // first i with |x_i| > escape radius
    Rational escape_radius;
};

// Forward orbit with escape certification: |f(t)| > |t| whenever
// |t| > R_esc = 1 + (sum of |a_j|, j < d) / |a_d|.
OrbitResult orbit(const PolyMap& f, const Rational& x, unsigned long n);

// e-th cyclotomic polynomial via the divisibility sieve
// x^e - 1 = prod over m | e of Phi_m.
Poly cyclotomic(unsigned long e);

}  // namespace multispec

#endif
