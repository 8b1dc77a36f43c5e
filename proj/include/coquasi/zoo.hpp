#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "coquasi/bialgebra.hpp"

// A small catalogue of concrete coquasi Hopf algebras: group algebras, the
// four-dimensional Sweedler algebra, Taft algebras, and cyclic group algebras
// twisted by a nontrivial 3-cocycle.  Every constructor returns structure
// constants that pass the full axiom checker; the tests enforce this.

namespace cqh {

class not_a_group : public std::runtime_error {
  public:
    explicit not_a_group(const std::string &what) : std::runtime_error(what) {}
};

class char_two : public std::runtime_error {
  public:
    explicit char_two(const std::string &what) : std::runtime_error(what) {}
};

class bad_root : public std::runtime_error {
  public:
    explicit bad_root(const std::string &what) : std::runtime_error(what) {}
};

namespace detail {

// q^n == 1 and q^k != 1 for 0 < k < n
template <typename K>
void require_primitive_root(const K &q, std::size_t n) {
    K pw = q;
    for (std::size_t k = 1; k < n; ++k) {
        if (pw == q.one())
            throw bad_root("root has order " + std::to_string(k) + ", expected " +
                           std::to_string(n));
        pw = pw * q;
    }
    if (pw != q.one()) throw bad_root("not an " + std::to_string(n) + "-th root of unity");
}

template <typename K>
K scalar_pow(const K &x, std::size_t e) {
    K r = x.one();
    for (std::size_t k = 0; k < e; ++k) r = r * x;
    return r;
}

} // namespace detail

// The group algebra kG for a finite group given by its multiplication table:
// table[i][j] is the index of the product of elements i and j.  Basis elements
// are group-like, the antipode inverts, and the associator is trivial.
template <typename K>
CoquasiHopf<K> group_algebra(const std::vector<std::vector<std::size_t>> &table, const K &z,
                             std::vector<std::string> names = {}) {
    std::size_t n = table.size();
    if (n == 0) throw not_a_group("empty multiplication table");
    for (const auto &row : table) {
        if (row.size() != n) throw not_a_group("multiplication table is not square");
        for (std::size_t v : row)
            if (v >= n) throw not_a_group("multiplication table entry out of range");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw not_a_group("multiplication table is not associative");
    std::size_t id = n;
    for (std::size_t e = 0; e < n && id == n; ++e) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j)
            if (table[e][j] != j || table[j][e] != j) ok = false;
        if (ok) id = e;
    }
    if (id == n) throw not_a_group("multiplication table has no identity");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (table[i][j] == id && table[j][i] == id) inv[i] = j;
        if (inv[i] == n) throw not_a_group("element " + std::to_string(i) + " has no inverse");
    }

    Coalgebra<K> co(n, z);
    for (std::size_t i = 0; i < n; ++i) {
        co.names[i] = names.empty() ? "g" + std::to_string(i) : names[i];
        co.counit[i] = z.one();
        co.add_delta(i, i, i, z.one());
    }
    Matrix<K> p(n, n * n, z);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(table[i][j], i * n + j) = z.one();
    std::vector<K> unit(n, z);
    unit[id] = z.one();
    CoquasiBialgebra<K> b{co, p, unit, {}};
    b.assoc = trivial_assoc(b);

    Matrix<K> s(n, n, z);
    for (std::size_t i = 0; i < n; ++i) s(inv[i], i) = z.one();
    return {b, {s, co.counit, co.counit}};
}

inline std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

template <typename K>
CoquasiHopf<K> cyclic_group(std::size_t n, const K &z) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i)
        names[i] = (i == 0) ? "1" : (i == 1 ? "g" : "g" + std::to_string(i));
    return group_algebra(cyclic_group_table(n), z, names);
}

// S3 presented as r^a s^b with r^3 = s^2 = 1 and s r = r^2 s.
inline std::vector<std::vector<std::size_t>> symmetric3_table() {
    auto idx = [](std::size_t a, std::size_t b) { return b * 3 + a; };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 3; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    std::size_t e = b ? (3 - c) % 3 : c;
                    t[idx(a, b)][idx(c, d)] = idx((a + e) % 3, (b + d) % 2);
                }
    return t;
}

template <typename K>
CoquasiHopf<K> symmetric3(const K &z) {
    return group_algebra(symmetric3_table(), z,
                         {"1", "r", "r2", "s", "rs", "r2s"});
}

// The four-dimensional algebra with basis {1, g, x, gx}, relations g^2 = 1,
// x^2 = 0, xg = -gx, comultiplication determined by group-like g and
// Delta x = x(x)1 + g(x)x, and antipode S(g) = g, S(x) = -gx.
template <typename K>
CoquasiHopf<K> sweedler_h4(const K &z) {
    if (z.one() + z.one() == z.zero()) throw char_two("Sweedler algebra needs characteristic != 2");
    K one = z.one();
    Coalgebra<K> co(4, z);
    co.names = {"1", "g", "x", "gx"};
    co.counit = {one, one, z.zero(), z.zero()};
    co.add_delta(0, 0, 0, one);
    co.add_delta(1, 1, 1, one);
    co.add_delta(2, 2, 0, one);
    co.add_delta(2, 1, 2, one);
    co.add_delta(3, 3, 1, one);
    co.add_delta(3, 0, 3, one);

    Matrix<K> p(4, 16, z);
    auto set = [&](std::size_t i, std::size_t j, std::size_t r, const K &c) { p(r, i * 4 + j) = c; };
    for (std::size_t j = 0; j < 4; ++j) set(0, j, j, one);
    for (std::size_t i = 1; i < 4; ++i) set(i, 0, i, one);
    set(1, 1, 0, one);
    set(1, 2, 3, one);
    set(1, 3, 2, one);
    set(2, 1, 3, -one);
    set(3, 1, 2, -one);

    std::vector<K> unit = {one, z.zero(), z.zero(), z.zero()};
    CoquasiBialgebra<K> b{co, p, unit, {}};
    b.assoc = trivial_assoc(b);

    Matrix<K> s(4, 4, z);
    s(0, 0) = one;
    s(1, 1) = one;
    s(3, 2) = -one;
    s(2, 3) = one;
    return {b, {s, co.counit, co.counit}};
}

// Taft algebra of dimension n^2 over a field containing a primitive n-th root
// of unity q: generators g, x with g^n = 1, x^n = 0, xg = q gx; g group-like
// and Delta x = x(x)1 + g(x)x.  The comultiplication on the monomial basis
// g^a x^b is computed inside the tensor-square algebra rather than spelled
// out through q-binomials.
template <typename K>
CoquasiHopf<K> taft(std::size_t n, const K &q) {
    if (n < 2) throw bad_root("Taft algebra needs n >= 2");
    detail::require_primitive_root(q, n);
    K z = q.zero();
    K one = q.one();
    std::size_t m = n * n;
    auto idx = [n](std::size_t a, std::size_t b) { return b * n + a; };

    Matrix<K> p(m, m * m, z);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    if (b + d >= n) continue;
                    p(idx((a + c) % n, b + d), idx(a, b) * m + idx(c, d)) =
                        detail::scalar_pow(q, b * c);
                }

    auto mulv = [&](const std::vector<K> &x, const std::vector<K> &y) {
        std::vector<K> out(m, z);
        for (std::size_t i = 0; i < m; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (y[j].is_zero()) continue;
                for (std::size_t r = 0; r < m; ++r)
                    if (!p(r, i * m + j).is_zero()) out[r] += p(r, i * m + j) * x[i] * y[j];
            }
        }
        return out;
    };
    // product on the tensor square, (a(x)b)(c(x)d) = ac(x)bd
    auto mulv2 = [&](const std::vector<K> &x, const std::vector<K> &y) {
        std::vector<K> out(m * m, z);
        for (std::size_t i1 = 0; i1 < m; ++i1)
            for (std::size_t i2 = 0; i2 < m; ++i2) {
                if (x[i1 * m + i2].is_zero()) continue;
                for (std::size_t j1 = 0; j1 < m; ++j1)
                    for (std::size_t j2 = 0; j2 < m; ++j2) {
                        if (y[j1 * m + j2].is_zero()) continue;
                        K c = x[i1 * m + i2] * y[j1 * m + j2];
                        for (std::size_t r = 0; r < m; ++r) {
                            if (p(r, i1 * m + j1).is_zero()) continue;
                            for (std::size_t t = 0; t < m; ++t)
                                if (!p(t, i2 * m + j2).is_zero())
                                    out[r * m + t] += c * p(r, i1 * m + j1) * p(t, i2 * m + j2);
                        }
                    }
            }
        return out;
    };

    std::vector<K> unit2(m * m, z);
    unit2[idx(0, 0) * m + idx(0, 0)] = one;
    std::vector<K> dg(m * m, z);
    dg[idx(1, 0) * m + idx(1, 0)] = one;
    std::vector<K> dx(m * m, z);
    dx[idx(0, 1) * m + idx(0, 0)] = one;
    dx[idx(1, 0) * m + idx(0, 1)] = one;

    Coalgebra<K> co(m, z);
    std::vector<K> dga = unit2;
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<K> cur = dga;
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t l = 0; l < m; ++l)
                for (std::size_t r = 0; r < m; ++r)
                    if (!cur[l * m + r].is_zero()) co.add_delta(idx(a, b), l, r, cur[l * m + r]);
            cur = mulv2(cur, dx);
        }
        dga = mulv2(dga, dg);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::string name;
            if (a == 1) name += "g";
            if (a > 1) name += "g" + std::to_string(a);
            if (b == 1) name += "x";
            if (b > 1) name += "x" + std::to_string(b);
            co.names[idx(a, b)] = name.empty() ? "1" : name;
            co.counit[idx(a, b)] = (b == 0) ? one : z;
        }
    co.normalize();

    std::vector<K> unit(m, z);
    unit[idx(0, 0)] = one;
    CoquasiBialgebra<K> b{co, p, unit, {}};
    b.assoc = trivial_assoc(b);

    // antipode: S(g) = g^{n-1}, S(x) = -g^{n-1}x, extended as an algebra
    // anti-morphism, so S(g^a x^b) = S(x)^b S(g)^a
    std::vector<K> sg(m, z);
    sg[idx(n - 1, 0)] = one;
    std::vector<K> sx(m, z);
    sx[idx(n - 1, 1)] = -one;
    Matrix<K> s(m, m, z);
    std::vector<K> sxb = unit;
    for (std::size_t b2 = 0; b2 < n; ++b2) {
        std::vector<K> col = sxb;
        for (std::size_t a = 0; a < n; ++a) {
            s.set_col(idx(a, b2), col);
            col = mulv(col, sg);
        }
        sxb = mulv(sxb, sx);
    }
    return {b, {s, co.counit, co.counit}};
}

// Cyclic group algebra k(Z/n) with the 3-cocycle associator
// phi(g^i (x) g^j (x) g^k) = zeta^{i [(j+k)/n]} for a primitive n-th root
// zeta.  The antipode still inverts the group, with alpha the counit and
// beta(g^i) = phi(g^i (x) g^{-i} (x) g^i) = zeta^i, which is the unique
// normalization compatible with the antipode equations.
template <typename K>
CoquasiHopf<K> cyclic_cocycle_coquasi(std::size_t n, const K &zeta) {
    if (n == 0) throw bad_root("group order must be positive");
    detail::require_primitive_root(zeta, n);
    K z = zeta.zero();
    auto h = cyclic_group(n, z);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                h.b.assoc[(i * n + j) * n + k] = detail::scalar_pow(zeta, i * ((j + k) / n));
    for (std::size_t i = 0; i < n; ++i) h.ant.beta[i] = detail::scalar_pow(zeta, i);
    return h;
}

} // namespace cqh
