#ifndef MULTISPEC_NUMERIC_HPP
#define MULTISPEC_NUMERIC_HPP

#include <complex>
#include <vector>

#include "multispec/poly.hpp"

namespace multispec {

// All complex roots of p with multiplicity, isolated to accuracy tol.
// Multiplicities are recovered exactly through the squarefree
// decomposition; each squarefree factor is handled by the Aberth-Ehrlich
// simultaneous iteration with a certified Newton-residual check. Throws
// std::runtime_error("precision exhausted") when certification fails.
std::vector<std::complex<double>> complex_roots(const Poly& p, double tol);

}  // namespace multispec

#endif
