#ifndef MULTISPEC_RITT_HPP
#define MULTISPEC_RITT_HPP

#include <vector>

#include "multispec/dynmaps.hpp"
#include "multispec/poly.hpp"

namespace multispec {

// The pair P = z^r R(z^k), Q = z^r R(z)^k obtained by swapping the factor
// across z^k; satisfies Q o z^k = z^k o P.
struct RittPair {
    unsigned long r = 1;
    unsigned long k = 1;
    Poly R;
    Poly P;
    Poly Q;
};

// Arithmetic-progression parameters: c1 is the minimal n >= 1 with
// gcd(r(r^n - 1), k) = 1, d the multiplicative order of r modulo k. When
// valid, the spectra of P and Q agree at every level c1 + N*d.
struct ProgressionParams {
    unsigned long c1 = 0;
    unsigned long d = 0;
    bool valid = false;
};

struct ProgressionLevelResult {
    unsigned long level = 0;
    bool guaranteed_good = false;  // gcd(r^level - 1, k) = 1
    bool in_progression = false;   // level = c1 + N*d for some N >= 0
    bool equal = false;
};

struct ProgressionReport {
    ProgressionParams params;
    std::vector<ProgressionLevelResult> levels;  // 1..max level scanned
    bool all_good_levels_equal = true;
    bool truncated = false;  // size cap cut the scan short
    unsigned long requested_terms = 0;
    unsigned long verified_terms = 0;
};

RittPair build_ritt_pair(unsigned long r, unsigned long k, const Poly& R);

// Replaces R = z^l R0 by its unit part R0 (R0(0) != 0) and r by r + l*k;
// P and Q are unchanged.
RittPair normalize_pair(const RittPair& pair);

ProgressionParams progression_params(unsigned long r, unsigned long k);

// Q^{on} o z^k = z^k o P^{on} as exact polynomial identity.
bool semiconjugacy_check(const RittPair& pair, unsigned long n);

// ((Q^{on})'(z^k) - (P^{on})'(z)) * z^{k-1} = 0 modulo P^{on}(z) - z.
bool multiplier_congruence_check(const RittPair& pair, unsigned long n);

// gcd(r^n - 1, k) = 1: the sufficient condition for S_n(P) = S_n(Q).
bool good_level(unsigned long r, unsigned long k, unsigned long n);

// End-to-end verification: computes both spectra independently at the first
// `terms` progression levels and scans all levels below the largest one.
ProgressionReport verify_progression(const RittPair& pair, unsigned long terms);

}  // namespace multispec

#endif
