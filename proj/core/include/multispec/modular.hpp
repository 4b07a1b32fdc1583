#ifndef MULTISPEC_MODULAR_HPP
#define MULTISPEC_MODULAR_HPP

#include <cstdint>
#include <vector>

#include "multispec/poly.hpp"

namespace multispec {

// Word-size prime field in Montgomery form; p is an odd prime below 2^62.
class PrimeField {
   public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t to_mont(std::uint64_t a) const;    // a < p
    std::uint64_t from_mont(std::uint64_t a) const;  // inverse map

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    // Montgomery product.
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t one() const { return r1_; }
    std::uint64_t inv(std::uint64_t a) const;  // a != 0, Montgomery domain
    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;  // Montgomery domain

    // Reduction of arbitrary-precision values; results in Montgomery form.
    // Rational denominators must be invertible mod p.
    std::uint64_t reduce(const Integer& v) const;
    std::uint64_t reduce(const Rational& v) const;

   private:
    std::uint64_t redc(unsigned __int128 t) const {
        std::uint64_t m = static_cast<std::uint64_t>(t) * pinv_;
        unsigned __int128 u = t + static_cast<unsigned __int128>(m) * p_;
        std::uint64_t r = static_cast<std::uint64_t>(u >> 64);
        return r >= p_ ? r - p_ : r;
    }
    std::uint64_t p_;
    std::uint64_t pinv_;  // -p^{-1} mod 2^64... stored as p^{-1}-complement, see ctor
    std::uint64_t r1_;    // 2^64 mod p
    std::uint64_t r2_;    // 2^128 mod p
};

// Dense polynomial over a prime field, Montgomery-form coefficients,
// ascending degree, trimmed.
using ModPoly = std::vector<std::uint64_t>;

ModPoly mod_reduce(const Poly& f, const PrimeField& fp);
ModPoly mod_rem(ModPoly a, const ModPoly& b, const PrimeField& fp);

// Characteristic polynomial of the multiplication-by-b operator on
// F_p[z]/(a), monic of degree deg a, via Hessenberg reduction. Returns
// ordinary (non-Montgomery) residues, ascending degree, length deg(a)+1.
std::vector<std::uint64_t> charpoly_mult_mod(const ModPoly& b, const ModPoly& a, const PrimeField& fp);

// Deterministic ascending sequence of word-size primes starting above
// 2^61; callers skip primes that divide leading data.
class PrimeSource {
   public:
    PrimeSource();
    std::uint64_t next();

   private:
    Integer cursor_;
};

// CRT accumulator for a vector of symmetric-range integers.
class CrtVector {
   public:
    explicit CrtVector(std::size_t size);
    void add_image(const std::vector<std::uint64_t>& residues, std::uint64_t p);
    // Symmetric-range representatives for the current modulus.
    const std::vector<Integer>& values() const { return values_; }
    const Integer& modulus() const { return modulus_; }

   private:
    std::vector<Integer> values_;  // in [-M/2, M/2)
    Integer modulus_;
};

}  // namespace multispec

#endif
