#ifndef MULTISPEC_POLY_HPP
#define MULTISPEC_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "multispec/rational.hpp"

namespace multispec {

// Dense univariate polynomial over Rational, coefficients stored by
// ascending degree. The zero polynomial is the empty vector; otherwise the
// leading coefficient is nonzero.
class Poly;

// Result of Euclidean division.
struct PolyDivMod;

class Poly {
   public:
    Poly() = default;
    explicit Poly(const Rational& constant);
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    // The monomial z.
    static Poly variable();
    // c * z^k.
    static Poly monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }

    Rational operator()(const Rational& x) const;  // Horner evaluation
    Poly derivative() const;
    Poly pow(unsigned long e) const;

    // Euclidean division; divisor must be nonzero.
    PolyDivMod divmod(const Poly& divisor) const;
    // Division known to be exact; throws std::logic_error on a nonzero
    // remainder.
    Poly exact_div(const Poly& divisor) const;

    Poly monic() const;  // nonzero input

    // Clears denominators: returns integer coefficient vector n and positive
    // den with *this = (sum n_i z^i) / den.
    struct Cleared {
        std::vector<Integer> coeffs;
        Integer den;
    };
    Cleared cleared() const;

    std::string str(const std::string& var = "z") const;

   private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

// f(g(z)), computed by Horner over Poly.
Poly compose(const Poly& f, const Poly& g);
// f^{compose n}; n = 0 gives z.
Poly iterate(const Poly& f, unsigned long n);

// gcd over Q, returned monic (or zero when both inputs are zero). Uses the
// primitive PRS over the integers to keep intermediate growth down.
Poly poly_gcd(const Poly& a, const Poly& b);

// Newton interpolation through distinct nodes.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace multispec

#endif
