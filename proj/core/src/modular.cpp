#include "multispec/modular.hpp"

#include <stdexcept>

namespace multispec {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || (p & 1) == 0 || p >= (1ull << 62)) throw std::invalid_argument("bad prime field modulus");
    // Newton iteration for p^{-1} mod 2^64, then negate.
    std::uint64_t inv = p;
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    pinv_ = ~inv + 1;  // -p^{-1} mod 2^64
    Integer r1 = (Integer(1) << 64) % p;
    Integer r2 = (r1 * r1) % p;
    r1_ = r1.get_ui();
    r2_ = r2.get_ui();
}

std::uint64_t PrimeField::to_mont(std::uint64_t a) const { return mul(a, r2_); }

std::uint64_t PrimeField::from_mont(std::uint64_t a) const { return redc(a); }

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const {
    std::uint64_t acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero residue");
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const Integer& v) const {
    Integer m = v % p_;  // sign of v
    if (m < 0) m += p_;
    return to_mont(m.get_ui());
}

std::uint64_t PrimeField::reduce(const Rational& v) const {
    std::uint64_t num = reduce(Integer(v.get_num()));
    std::uint64_t den = reduce(Integer(v.get_den()));
    if (den == 0) throw std::domain_error("denominator vanishes mod p");
    return mul(num, inv(den));
}

ModPoly mod_reduce(const Poly& f, const PrimeField& fp) {
    ModPoly out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fp.reduce(f.coeffs()[i]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, const PrimeField& fp) {
    if (b.empty()) throw std::invalid_argument("mod_rem by zero");
    const std::size_t db = b.size() - 1;
    std::uint64_t lcinv = fp.inv(b.back());
    while (a.size() > db) {
        std::uint64_t f = fp.mul(a.back(), lcinv);
        if (f != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i < db; ++i) a[shift + i] = fp.sub(a[shift + i], fp.mul(f, b[i]));
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() <= db) break;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<std::uint64_t> charpoly_mult_mod(const ModPoly& b, const ModPoly& a, const PrimeField& fp) {
    if (a.size() < 2) throw std::invalid_argument("charpoly_mult_mod: constant modulus");
    const std::size_t m = a.size() - 1;
    // monic modulus
    ModPoly am(a);
    {
        std::uint64_t lcinv = fp.inv(am.back());
        for (auto& c : am) c = fp.mul(c, lcinv);
    }
    ModPoly col = mod_rem(b, am, fp);

    // Multiplication matrix, row-major: M[i][j] = coeff of z^i in z^j*b mod a.
    std::vector<std::uint64_t> M(m * m, 0);
    auto put_col = [&](std::size_t j, const ModPoly& v) {
        for (std::size_t i = 0; i < v.size(); ++i) M[i * m + j] = v[i];
    };
    put_col(0, col);
    ModPoly cur(col);
    cur.resize(m, 0);
    for (std::size_t j = 1; j < m; ++j) {
        // cur <- z*cur mod am (am monic, degree m)
        std::uint64_t top = cur[m - 1];
        for (std::size_t i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (std::size_t i = 0; i < m; ++i) cur[i] = fp.sub(cur[i], fp.mul(top, am[i]));
        }
        put_col(j, cur);
    }

    // Hessenberg reduction by similarity transforms.
    for (std::size_t k = 0; k + 2 < m; ++k) {
        std::size_t pivot = m;
        for (std::size_t i = k + 1; i < m; ++i) {
            if (M[i * m + k] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == m) continue;
        if (pivot != k + 1) {
            for (std::size_t j = 0; j < m; ++j) std::swap(M[pivot * m + j], M[(k + 1) * m + j]);
            for (std::size_t i = 0; i < m; ++i) std::swap(M[i * m + pivot], M[i * m + k + 1]);
        }
        std::uint64_t pinv = fp.inv(M[(k + 1) * m + k]);
        for (std::size_t i = k + 2; i < m; ++i) {
            std::uint64_t f = fp.mul(M[i * m + k], pinv);
            if (f == 0) continue;
            const std::uint64_t* src = &M[(k + 1) * m];
            std::uint64_t* dst = &M[i * m];
            for (std::size_t j = k; j < m; ++j) dst[j] = fp.sub(dst[j], fp.mul(f, src[j]));
            // column operation: col_{k+1} += f * col_i
            for (std::size_t r = 0; r < m; ++r) {
                M[r * m + k + 1] = fp.add(M[r * m + k + 1], fp.mul(f, M[r * m + i]));
            }
        }
    }

    // Characteristic polynomials of leading principal minors of the
    // Hessenberg matrix (Cohen, Alg. 2.2.9). p[k] has degree k.
    std::vector<std::vector<std::uint64_t>> p(m + 1);
    p[0] = {fp.one()};
    for (std::size_t k = 1; k <= m; ++k) {
        const std::size_t r = k - 1;  // matrix row/col index of the new minor
        std::vector<std::uint64_t>& out = p[k];
        out.assign(k + 1, 0);
        // (x - H[r][r]) * p[k-1]
        const auto& prev = p[k - 1];
        for (std::size_t i = 0; i < prev.size(); ++i) {
            out[i + 1] = fp.add(out[i + 1], prev[i]);
            out[i] = fp.sub(out[i], fp.mul(M[r * m + r], prev[i]));
        }
        // minus sum over lower minors weighted by subdiagonal products
        std::uint64_t prod = fp.one();
        for (std::size_t i = r; i >= 1; --i) {
            prod = fp.mul(prod, M[i * m + (i - 1)]);
            if (prod == 0) break;
            std::uint64_t w = fp.mul(M[(i - 1) * m + r], prod);
            if (w == 0) continue;
            const auto& pi = p[i - 1];
            for (std::size_t t = 0; t < pi.size(); ++t) out[t] = fp.sub(out[t], fp.mul(w, pi[t]));
        }
    }

    std::vector<std::uint64_t> result(m + 1);
    for (std::size_t i = 0; i <= m; ++i) result[i] = fp.from_mont(p[m][i]);
    return result;
}

PrimeSource::PrimeSource() : cursor_(Integer(1) << 61) {}

std::uint64_t PrimeSource::next() {
    mpz_nextprime(cursor_.get_mpz_t(), cursor_.get_mpz_t());
    if (cursor_ >= (Integer(1) << 62)) throw std::runtime_error("prime source exhausted");
    return cursor_.get_ui();
}

CrtVector::CrtVector(std::size_t size) : values_(size, Integer(0)), modulus_(1) {}

void CrtVector::add_image(const std::vector<std::uint64_t>& residues, std::uint64_t p) {
    if (residues.size() != values_.size()) throw std::invalid_argument("CRT image size mismatch");
    Integer pz(0);
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    if (modulus_ == 1) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            Integer r(0);
            std::uint64_t ri = residues[i];
            mpz_import(r.get_mpz_t(), 1, 1, sizeof(ri), 0, 0, &ri);
            if (r * 2 >= pz) r -= pz;
            values_[i] = r;
        }
        modulus_ = pz;
        return;
    }
    Integer minv;
    if (mpz_invert(minv.get_mpz_t(), modulus_.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::logic_error("CRT moduli not coprime");
    Integer newmod = modulus_ * pz;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        Integer r(0);
        std::uint64_t ri = residues[i];
        mpz_import(r.get_mpz_t(), 1, 1, sizeof(ri), 0, 0, &ri);
        Integer t = ((r - values_[i]) * minv) % pz;
        if (t < 0) t += pz;
        Integer v = values_[i] + modulus_ * t;
        // symmetric range
        if (v * 2 >= newmod) v -= newmod;
        if (v * 2 < -newmod) v += newmod;
        values_[i] = v;
    }
    modulus_ = newmod;
}

}  // namespace multispec
