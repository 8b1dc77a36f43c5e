#pragma once

#include <random>

#include "coquasi/bialgebra.hpp"
#include "coquasi/comodule.hpp"

// Hand-built reference algebras, kept independent of the zoo constructors so
// each side can vouch for the other.

namespace testutil {

using namespace cqh;

// group algebra of Z/n
template <typename K>
CoquasiBialgebra<K> zn_bialgebra(std::size_t n, const K &z) {
    Coalgebra<K> co(n, z);
    for (std::size_t i = 0; i < n; ++i) {
        co.names[i] = (i == 0) ? "1" : (i == 1 ? "g" : "g" + std::to_string(i));
        co.counit[i] = z.one();
        co.add_delta(i, i, i, z.one());
    }
    Matrix<K> p(n, n * n, z);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p((i + j) % n, i * n + j) = z.one();
    std::vector<K> unit(n, z);
    unit[0] = z.one();
    CoquasiBialgebra<K> b{co, p, unit, {}};
    b.assoc = trivial_assoc(b);
    return b;
}

// group algebra of Z/2 with the nontrivial 3-cocycle as associator:
// phi(g^i (x) g^j (x) g^k) = -1 exactly when i = j = k = 1
template <typename K>
CoquasiBialgebra<K> z2_twisted_bialgebra(const K &z) {
    auto b = zn_bialgebra(2, z);
    b.assoc[7] = -z.one();
    return b;
}

template <typename K>
Antipode<K> z2_twisted_antipode(const K &z) {
    Antipode<K> a{Matrix<K>::identity(2, z), {z.one(), z.one()}, {z.one(), -z.one()}};
    return a;
}

template <typename K>
Antipode<K> zn_antipode(std::size_t n, const K &z) {
    Matrix<K> s(n, n, z);
    for (std::size_t i = 0; i < n; ++i) s((n - i) % n, i) = z.one();
    return {s, std::vector<K>(n, z.one()), std::vector<K>(n, z.one())};
}

template <typename K>
K small_scalar(const K &z, long long v) {
    K r = z.zero();
    for (long long i = 0; i < v; ++i) r += z.one();
    for (long long i = 0; i > v; --i) r -= z.one();
    return r;
}

template <typename K, typename R>
Matrix<K> random_invertible(std::size_t n, const K &z, R &rng) {
    std::uniform_int_distribution<long long> d(-2, 2);
    for (;;) {
        Matrix<K> t(n, n, z);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t(i, j) = small_scalar(z, d(rng));
        if (rank(t) == n) return t;
    }
}

// one-dimensional right comodule on a group-like element
template <typename K>
Bicomodule<K> line_comodule(const Coalgebra<K> &c, const std::vector<K> &g) {
    Matrix<K> rho(c.dim(), 1, c.field());
    for (std::size_t b = 0; b < c.dim(); ++b) rho(b, 0) = g[b];
    return right_comodule(c, rho);
}

// two-dimensional right comodule spanned by a group-like g and a skew
// primitive x with coaction x |-> x (x) 1 + g (x) x
template <typename K>
Bicomodule<K> skew_pair_comodule(const Coalgebra<K> &c, const std::vector<K> &unit,
                                 std::size_t g_idx, std::size_t x_idx) {
    const K &z = c.field();
    std::size_t h = c.dim();
    Matrix<K> rho(2 * h, 2, z);
    rho(0 * h + g_idx, 0) = z.one();
    for (std::size_t b = 0; b < h; ++b) rho(1 * h + b, 1) = unit[b];
    rho(0 * h + x_idx, 1) = z.one();
    return right_comodule(c, rho);
}

// direct sum of random building blocks up to maxdim, transported along a
// random change of basis
template <typename K, typename R>
Bicomodule<K> random_right_comodule(const std::vector<Bicomodule<K>> &blocks, std::size_t maxdim,
                                    R &rng) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
    Bicomodule<K> m = blocks[pick(rng)];
    while (m.dim() < maxdim && rng() % 3 != 0) {
        const auto &b = blocks[pick(rng)];
        if (m.dim() + b.dim() > maxdim) break;
        m = direct_sum(m, b);
    }
    return conjugate(m, random_invertible(m.dim(), m.field(), rng));
}

} // namespace testutil
