#pragma once

#include <cstdint>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace cqh {

struct unsupported_error : std::runtime_error {
    unsupported_error(const std::string &what) : std::runtime_error(what) {}
};

// Polynomials are coefficient vectors in ascending degree order.

template <typename K>
K poly_eval(const std::vector<K> &p, const K &x) {
    K acc = x.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Characteristic polynomial det(x I - A) by the Samuelson-Berkowitz scheme:
// division free, so it works over any exact field including small
// characteristic. Returned monic, ascending.
template <typename K>
std::vector<K> charpoly(const Matrix<K> &a) {
    if (a.rows() != a.cols()) throw dimension_error("charpoly: matrix not square");
    std::size_t n = a.rows();
    const K z = a.field();
    std::vector<K> c{z.one()};
    for (std::size_t r = 1; r <= n; ++r) {
        // w[0..r] = first column of the Toeplitz factor for the r-th leading
        // principal submatrix: 1, -a_rr, -R S, -R M S, -R M^2 S, ...
        std::vector<K> w(r + 1, z);
        w[0] = z.one();
        w[1] = -a(r - 1, r - 1);
        std::vector<K> s(r - 1, z);
        for (std::size_t i = 0; i + 1 < r; ++i) s[i] = a(i, r - 1);
        for (std::size_t j = 2; j <= r; ++j) {
            K dot = z;
            for (std::size_t i = 0; i + 1 < r; ++i) dot += a(r - 1, i) * s[i];
            w[j] = -dot;
            if (j < r) {
                std::vector<K> ns(r - 1, z);
                for (std::size_t i = 0; i + 1 < r; ++i)
                    for (std::size_t k = 0; k + 1 < r; ++k) ns[i] += a(i, k) * s[k];
                s = std::move(ns);
            }
        }
        std::vector<K> nc(r + 1, z);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < c.size() && j <= i; ++j) nc[i] += w[i - j] * c[j];
        c = std::move(nc);
    }
    // c holds the coefficients highest degree first; flip to ascending
    std::vector<K> p(c.rbegin(), c.rend());
    return p;
}

// All roots of p lying in the coefficient field, each listed once.
template <typename K>
std::vector<K> poly_roots(const std::vector<K> &p);

namespace detail {

inline std::vector<mpz_class> divisors_or_throw(mpz_class n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::domain_error("divisors of zero");
    std::vector<std::pair<mpz_class, unsigned>> fac;
    mpz_class m = n;
    for (mpz_class d = 2; d * d <= m; ++d) {
        if (d > 1000000) {
            throw unsupported_error("integer factorization out of supported range");
        }
        unsigned e = 0;
        while (m % d == 0) { m /= d; ++e; }
        if (e) fac.push_back({d, e});
    }
    if (m > 1) fac.push_back({m, 1});
    std::vector<mpz_class> divs{1};
    for (auto &[q, e] : fac) {
        std::size_t base = divs.size();
        mpz_class pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

} // namespace detail

// Rational roots via the rational root theorem on the cleared-denominator
// integer polynomial.
template <>
inline std::vector<Rational> poly_roots<Rational>(const std::vector<Rational> &p) {
    std::size_t deg = p.size();
    while (deg > 0 && p[deg - 1].is_zero()) --deg;
    if (deg == 0) return {};
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < deg && p[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 == deg) return roots; // only the monomial was left
    mpz_class lcm = 1;
    for (std::size_t i = low; i < deg; ++i)
        lcm = lcm / gcd(lcm, p[i].raw().get_den()) * p[i].raw().get_den();
    std::vector<mpz_class> ic(deg - low);
    for (std::size_t i = low; i < deg; ++i) {
        mpq_class q = p[i].raw() * lcm;
        ic[i - low] = q.get_num();
    }
    auto nums = detail::divisors_or_throw(ic.front());
    auto dens = detail::divisors_or_throw(ic.back());
    for (const mpz_class &nu : nums)
        for (const mpz_class &de : dens) {
            if (gcd(nu, de) != 1) continue;
            for (int sign : {1, -1}) {
                mpq_class cand(sign * nu, de);
                cand.canonicalize();
                Rational r(cand);
                if (poly_eval(p, r).is_zero()) {
                    bool seen = false;
                    for (const Rational &x : roots) seen = seen || x == r;
                    if (!seen) roots.push_back(r);
                }
            }
        }
    return roots;
}

// Prime field roots by scanning residues; the moduli this library meets in
// practice are small, anything huge is refused rather than guessed at.
template <>
inline std::vector<Fp> poly_roots<Fp>(const std::vector<Fp> &p) {
    std::size_t deg = p.size();
    while (deg > 0 && p[deg - 1].is_zero()) --deg;
    if (deg == 0) return {};
    uint64_t m = p[0].modulus();
    if (m > (uint64_t(1) << 20))
        throw unsupported_error("root scan over F_p needs p <= 2^20");
    std::vector<Fp> roots;
    for (uint64_t v = 0; v < m; ++v) {
        Fp x(v, m);
        if (poly_eval(p, x).is_zero()) roots.push_back(x);
    }
    return roots;
}

} // namespace cqh
