#include "talex/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace talex {

namespace {

// Dense rational polynomials, ascending coefficients, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder over Q[x]; q need not be monic.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    Poly q;
    if (b.empty()) throw ZeroInverse("polynomial division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (a.size() < b.size()) break;
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

std::vector<long> divisors(long m) {
    std::vector<long> d;
    for (long i = 1; i * i <= m; ++i) {
        if (m % i == 0) {
            d.push_back(i);
            if (i != m / i) d.push_back(m / i);
        }
    }
    return d;
}

// Reduce a dense polynomial in zeta mod Phi_m in place, then resize to phi(m).
void reduce_mod_phi(Poly& v, long m) {
    const Poly& phi = cyclotomic_polynomial(m);
    const size_t deg = phi.size() - 1;  // = euler_phi(m), phi is monic
    for (size_t i = v.size(); i-- > deg;) {
        Rational c = v[i];
        if (c == 0) continue;
        v[i] = 0;
        for (size_t j = 0; j < deg; ++j) v[i - deg + j] -= c * phi[j];
    }
    v.resize(deg, Rational(0));
}

// zeta_m^j as reduced coordinates, j taken mod m.
Poly zeta_power(long m, long j) {
    j %= m;
    if (j < 0) j += m;
    Poly v(static_cast<size_t>(j) + 1, Rational(0));
    v[static_cast<size_t>(j)] = 1;
    reduce_mod_phi(v, m);
    return v;
}

}  // namespace

long euler_phi(long m) {
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(long m) {
    static std::map<long, Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw Error("cyclotomic polynomial: modulus must be positive");

    // Compute bottom-up over the divisor lattice so every Phi_f needed by a
    // division is already cached.
    std::vector<long> ds = divisors(m);
    std::sort(ds.begin(), ds.end());
    for (long d : ds) {
        if (cache.count(d)) continue;
        Poly num(static_cast<size_t>(d) + 1, Rational(0));
        num[0] = -1;
        num[static_cast<size_t>(d)] = 1;  // x^d - 1
        for (long f : divisors(d)) {
            if (f == d) continue;
            auto [q, r] = divmod(num, cache.at(f));
            if (!r.empty()) throw Error("cyclotomic polynomial: inexact division");
            num = std::move(q);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

Cyclo Cyclo::zero(long m) {
    if (m < 1) throw Error("cyclotomic modulus must be positive");
    return Cyclo(m, Poly(static_cast<size_t>(euler_phi(m)), Rational(0)));
}

Cyclo Cyclo::one(long m) {
    return rational(Rational(1), m);
}

Cyclo Cyclo::rational(const Rational& q, long m) {
    Cyclo c = zero(m);
    c.coords_[0] = q;
    return c;
}

Cyclo Cyclo::integer(long v, long m) {
    return rational(Rational(v), m);
}

Cyclo Cyclo::zeta(long m, long k) {
    if (m < 1) throw Error("cyclotomic modulus must be positive");
    return Cyclo(m, zeta_power(m, k));
}

Cyclo Cyclo::sqrt_minus_one(long m) {
    if (m % 4 != 0) throw ModulusMismatch("sqrt(-1) needs 4 | m");
    return zeta(m, m / 4);
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (coords_[0] != 1) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw NonRationalValue("element of Q(zeta) is not rational");
    return coords_[0];
}

Cyclo Cyclo::operator-() const {
    Poly v = coords_;
    for (auto& c : v) c = -c;
    return Cyclo(modulus_, std::move(v));
}

Cyclo Cyclo::operator+(const Cyclo& rhs) const {
    if (modulus_ != rhs.modulus_) throw ModulusMismatch("cyclotomic modulus mismatch in +");
    Poly v = coords_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += rhs.coords_[i];
    return Cyclo(modulus_, std::move(v));
}

Cyclo Cyclo::operator-(const Cyclo& rhs) const {
    if (modulus_ != rhs.modulus_) throw ModulusMismatch("cyclotomic modulus mismatch in -");
    Poly v = coords_;
    for (size_t i = 0; i < v.size(); ++i) v[i] -= rhs.coords_[i];
    return Cyclo(modulus_, std::move(v));
}

Cyclo Cyclo::operator*(const Cyclo& rhs) const {
    if (modulus_ != rhs.modulus_) throw ModulusMismatch("cyclotomic modulus mismatch in *");
    Poly a = coords_, b = rhs.coords_;
    trim(a);
    trim(b);
    Poly v = mul(a, b);
    v.resize(std::max<size_t>(v.size(), coords_.size()), Rational(0));
    reduce_mod_phi(v, modulus_);
    return Cyclo(modulus_, std::move(v));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw ZeroInverse("inverse of zero in Q(zeta)");
    // Extended Euclid against Phi_m; Phi_m is irreducible so the last nonzero
    // remainder is a nonzero constant.
    Poly r0 = cyclotomic_polynomial(modulus_);
    Poly r1 = coords_;
    trim(r1);
    Poly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r2] = divmod(r0, r1);
        Poly qs = mul(q, s1);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r2);
        s1 = std::move(s2);
        if (r1.empty()) throw Error("cyclotomic inverse: unexpected common factor with Phi_m");
    }
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    reduce_mod_phi(s1, modulus_);
    return Cyclo(modulus_, std::move(s1));
}

Cyclo Cyclo::conjugate() const {
    // Galois action zeta -> zeta^(m-1).
    Poly acc(coords_.size(), Rational(0));
    for (size_t k = 0; k < coords_.size(); ++k) {
        if (coords_[k] == 0) continue;
        Poly p = zeta_power(modulus_, static_cast<long>(k) * (modulus_ - 1));
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += coords_[k] * p[i];
    }
    return Cyclo(modulus_, std::move(acc));
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo base = *this;
    Cyclo acc = one(modulus_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Cyclo Cyclo::embedded(long m2) const {
    if (m2 % modulus_ != 0) throw ModulusMismatch("embedding needs modulus | target modulus");
    if (m2 == modulus_) return *this;
    const long stride = m2 / modulus_;
    Poly acc(static_cast<size_t>(euler_phi(m2)), Rational(0));
    for (size_t k = 0; k < coords_.size(); ++k) {
        if (coords_[k] == 0) continue;
        Poly p = zeta_power(m2, static_cast<long>(k) * stride);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += coords_[k] * p[i];
    }
    return Cyclo(m2, std::move(acc));
}

int Cyclo::leading_coordinate_sign() const {
    for (const auto& c : coords_)
        if (c != 0) return sgn(c);
    return 0;
}

}  // namespace talex
