#ifndef MULTISPEC_EXACTALG_HPP
#define MULTISPEC_EXACTALG_HPP

#include <utility>
#include <vector>

#include "multispec/poly.hpp"

namespace multispec {

// Res(A,B) = lc(A)^deg(B) * prod_{A(r)=0} B(r). Zero iff A and B share a
// root. Computed by the subresultant PRS on integer-cleared inputs.
Rational resultant(const Poly& a, const Poly& b);

struct SquarefreeDecomposition {
    // unit * prod factor^multiplicity reproduces the input; factors are
    // monic, squarefree, pairwise coprime, nonconstant, multiplicities
    // strictly increasing.
    Rational unit;
    std::vector<std::pair<Poly, unsigned long>> factors;

    Poly reassemble() const;
    Poly radical() const;
};

// Yun's algorithm (characteristic 0).
SquarefreeDecomposition squarefree(const Poly& a);

// Product of distinct monic irreducible factors.
Poly radical(const Poly& a);

// True iff every root of a is a root of b.
bool radical_divides(const Poly& a, const Poly& b);

// gcd-free refinement: pairwise-coprime squarefree monic polynomials such
// that each squarefree input is a scalar times a product of basis elements.
std::vector<Poly> coprime_basis(const std::vector<Poly>& inputs);

// Characteristic polynomial (monic in a fresh variable w, degree = deg A)
// of the multiplication-by-B operator on Q[z]/(A); equals
// prod (w - B(z_i))^{m_i} over roots z_i of A. Multi-modular CRT with
// Hessenberg charpolys over word-size prime fields.
Poly charpoly_mod(const Poly& b, const Poly& a);

}  // namespace multispec

#endif
