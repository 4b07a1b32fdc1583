#ifndef MULTISPEC_CLASSIFY_HPP
#define MULTISPEC_CLASSIFY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multispec/dynmaps.hpp"
#include "multispec/poly.hpp"

namespace multispec {

// Raised when a squarefree but reducible factor cannot be handled uniformly
// (its roots demonstrably carry different data); the offending factor is
// attached so a caller could refine it.
class FactorRefinementNeeded : public std::runtime_error {
   public:
    FactorRefinementNeeded(const std::string& what, Poly factor)
        : std::runtime_error(what), offending_factor(std::move(factor)) {}
    Poly offending_factor;
};

// One critical-value class: the squarefree factor carrying the values, and
// the fiber partition of each map above any single root of the factor (all
// roots of one class carry identical profiles; anything else is an error).
struct RamificationClass {
    Poly value_factor;  // monic squarefree in the target variable
    std::vector<std::vector<unsigned long>> profiles;  // one partition per map, parts descending
};

struct RamificationPortrait {
    std::vector<long> degrees;  // map degrees, in input order
    std::vector<RamificationClass> classes;
};

// Witness of the generalized Lattes normal form z^r * R(z)^n.
struct GLForm {
    unsigned long r = 1;
    unsigned long n = 2;
    std::optional<Rational> rational_witness;  // the fixed point, when rational
    std::string witness_description;           // quotient-ring description otherwise
};

struct GLResult {
    bool is_gl = false;
    std::optional<GLForm> form;     // absent for the exceptional short-circuit
    bool via_exceptional = false;
};

enum class ExceptionalTag { none, power, chebyshev_plus, chebyshev_minus };

struct ExceptionalResult {
    bool exceptional = false;
    ExceptionalTag tag = ExceptionalTag::none;
    std::optional<AffineMap> witness;
};

// deg(radical(Res_z(F'(z), F(z) - t))): number of distinct finite critical
// values.
unsigned long distinct_critical_values_count(const PolyMap& F);

// Exactly d-1 distinct finite critical values.
bool is_presimple(const PolyMap& F);

// Conjugate to z^d, T_d, or -T_d.
ExceptionalResult is_exceptional(const PolyMap& F);

// Searches the fixed points of F for the z^r * R(z)^n divisor shape;
// exceptional maps short-circuit to a positive verdict without a form.
GLResult generalized_lattes_form(const PolyMap& F);

// The cubic family lambda^2 z^3 + lambda(3mu+2b) z^2 + (mu+b)(3mu+b) z
// + (mu/lambda)(mu^2+2 mu b+b^2-1), conjugate to z(az+b)^2 by construction.
PolyMap gl_cubic_family(const Rational& lambda, const Rational& b, const Rational& mu);

RamificationPortrait ramification_portrait(const std::vector<PolyMap>& maps);

// Genus of the fiber-product curves via the gcd formulas over the joint
// ramification portrait. The formula value is returned unconditionally;
// on reducible curves it is a formula value, not a geometric genus.
long genus_hFH(const PolyMap& F, const PolyMap& H);
long genus_hF(const PolyMap& F);

}  // namespace multispec

#endif
