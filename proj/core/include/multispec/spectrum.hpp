#ifndef MULTISPEC_SPECTRUM_HPP
#define MULTISPEC_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "multispec/dynmaps.hpp"
#include "multispec/poly.hpp"

namespace multispec {

// Monic finite-part characteristic polynomial of the level-n multipliers:
// its roots with multiplicity are the multipliers of the finite fixed
// points of f^{on}; infinity contributes one extra multiplier 0, tracked by
// the flag rather than a factor.
struct MultiplierPoly {
    unsigned long level = 1;
    Poly charpoly;  // monic in w, degree d^n
    bool includes_infinity = true;
};

// Elementary symmetric functions sigma_1..sigma_{d^n+1} of the full
// multiplier multiset; the last entry is always 0 for polynomial maps.
struct SpectrumLevel {
    unsigned long level = 1;
    std::vector<Rational> sigmas;
};

struct SpectrumCompare {
    bool equal = true;
    std::optional<unsigned long> first_diff;
};

struct SacReport {
    unsigned long count = 0;
    std::vector<std::pair<unsigned long, unsigned long>> per_period;  // (period, cycles)
    bool certified_complete = true;
    unsigned long bound = 0;
    std::vector<std::string> caveats;
};

// The d^n size cap; reads MULTISPEC_SIZE_CAP when set, default 2000.
unsigned long spectrum_size_cap();

MultiplierPoly multiplier_charpoly(const PolyMap& f, unsigned long n);

SpectrumLevel spectrum_level(const PolyMap& f, unsigned long n);
SpectrumLevel spectrum_from_charpoly(const MultiplierPoly& mp);

SpectrumCompare spectra_equal_up_to(const PolyMap& f, const PolyMap& g, unsigned long m);

// spectra_equal_up_to on the k-th iterates: the bounded probe of
// stable-spectrum equality.
SpectrumCompare compare_iterates(const PolyMap& f, const PolyMap& g, unsigned long k,
                                 unsigned long m);

SacReport superattracting_cycle_count(const PolyMap& f, unsigned long bound);

// True iff every root of the level-n multiplier charpoly of f is a root of
// the one of g (set containment of finite multipliers).
bool spectrum_containment(const PolyMap& f, const PolyMap& g, unsigned long n);

// Numeric oracle: sorted moduli of the level-n multipliers (0 appended for
// infinity); never used for exact equality claims.
std::vector<double> length_spectrum_numeric(const PolyMap& f, unsigned long n, double tol);

}  // namespace multispec

#endif
