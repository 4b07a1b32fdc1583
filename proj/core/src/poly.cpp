#include "multispec/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace multispec {

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::variable() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
    if (c == 0) return Poly();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::pow(unsigned long e) const {
    Poly result(Rational(1));
    Poly base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

PolyDivMod Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly rem(*this);
    long dd = divisor.degree();
    if (rem.degree() < dd) return {Poly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
    const Rational& lc = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        long shift = rem.degree() - dd;
        Rational factor = rem.leading() / lc;
        q[static_cast<std::size_t>(shift)] = factor;
        // rem -= factor * z^shift * divisor, in place
        for (long i = 0; i <= dd; ++i) {
            rem.coeffs_[static_cast<std::size_t>(i + shift)] -=
                factor * divisor.coeffs_[static_cast<std::size_t>(i)];
        }
        rem.trim();
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& divisor) const {
    PolyDivMod dm = divmod(divisor);
    if (!dm.remainder.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return dm.quotient;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
    Poly r(*this);
    Rational inv = 1 / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

Poly::Cleared Poly::cleared() const {
    Integer den(1);
    for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Integer scaled = coeffs_[i].get_num() * (den / coeffs_[i].get_den());
        out[i] = scaled;
    }
    return {std::move(out), den};
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1 || a == -1) && i > 0;
        if (!unit) {
            os << a.get_str();
            if (i > 0) os << "*";
        } else if (a == -1) {
            os << "-";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly compose(const Poly& f, const Poly& g) {
    Poly acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc *= g;
        acc += Poly(*it);
    }
    return acc;
}

Poly iterate(const Poly& f, unsigned long n) {
    Poly acc = Poly::variable();
    for (unsigned long i = 0; i < n; ++i) acc = compose(f, acc);
    return acc;
}

namespace {

// Content (gcd of coefficients) of an integer vector, nonnegative.
Integer int_content(const std::vector<Integer>& v) {
    Integer g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Pseudo-remainder over Z: lc(b)^(da-db+1) * a mod b.
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const Integer& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long shift = static_cast<long>(a.size()) - 1 - db;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (long i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Integer> u = a.cleared().coeffs;
    std::vector<Integer> v = b.cleared().coeffs;
    if (u.size() < v.size()) std::swap(u, v);
    // primitive PRS
    auto primitive = [](std::vector<Integer>& w) {
        Integer c = int_content(w);
        if (c > 1)
            for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    };
    primitive(u);
    primitive(v);
    while (!v.empty()) {
        std::vector<Integer> r = pseudo_rem(u, v);
        primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = Rational(u[i]);
    return Poly(std::move(out)).monic();
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    const std::size_t n = xs.size();
    // Newton divided differences.
    std::vector<Rational> dd(ys);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    Poly result;
    for (std::size_t i = n; i-- > 0;) {
        result *= Poly({-xs[i], Rational(1)});
        result += Poly(dd[i]);
    }
    return result;
}

}  // namespace multispec
