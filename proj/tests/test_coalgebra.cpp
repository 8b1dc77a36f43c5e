#include <doctest.h>

#include <random>

#include "coquasi/coalgebra.hpp"

using namespace cqh;

namespace {

// group coalgebra of Z/2: basis {1, g}, both group-like
template <typename K>
Coalgebra<K> z2_group_coalgebra(const K &z) {
    Coalgebra<K> c(2, z);
    c.names = {"1", "g"};
    c.counit = {z.one(), z.one()};
    c.add_delta(0, 0, 0, z.one());
    c.add_delta(1, 1, 1, z.one());
    return c;
}

// coalgebra of functions on Z/n: Delta(d_a) = sum_{b+c=a} d_b (x) d_c
template <typename K>
Coalgebra<K> zn_function_coalgebra(std::size_t n, const K &z) {
    Coalgebra<K> c(n, z);
    for (std::size_t a = 0; a < n; ++a) {
        c.names[a] = "d" + std::to_string(a);
        c.counit[a] = (a == 0) ? z.one() : z.zero();
        for (std::size_t b = 0; b < n; ++b) c.add_delta(a, b, (a + n - b) % n, z.one());
    }
    return c;
}

} // namespace

TEST_SUITE("coalgebra") {

TEST_CASE("group coalgebra passes the axioms") {
    auto c = z2_group_coalgebra(Rational(0));
    CHECK(check_coalgebra(c).empty());
    auto d = zn_function_coalgebra(3, Fp(0, 7));
    CHECK(check_coalgebra(d).empty());
}

TEST_CASE("axiom checks produce witnesses on corrupted data") {
    Rational z(0);

    Coalgebra<Rational> broken(2, z);
    broken.counit = {z.one(), z.one()};
    broken.add_delta(0, 0, 0, z.one());
    broken.add_delta(1, 0, 1, z.one());
    broken.add_delta(1, 1, 1, z.one()); // Delta(g) = 1|g + g|g: not coassociative
    auto bad = check_coalgebra(broken);
    REQUIRE(!bad.empty());
    CHECK(bad[0].find("coassociativity") != std::string::npos);

    Coalgebra<Rational> nocounit(2, z);
    nocounit.counit = {z.one(), z.zero()};
    nocounit.add_delta(0, 0, 0, z.one());
    nocounit.add_delta(1, 1, 1, z.one()); // eps(g) = 0 kills the counit law
    auto bad2 = check_coalgebra(nocounit);
    REQUIRE(!bad2.empty());
    CHECK(bad2[0].find("counit") != std::string::npos);
}

TEST_CASE("charpoly and rational roots") {
    Rational z(0);
    auto m = Matrix<Rational>::from_rows({{2, 0}, {0, 3}}, z);
    auto p = charpoly(m);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Rational(6));
    CHECK(p[1] == Rational(-5));
    CHECK(p[2] == Rational(1));

    // (2x - 1)(3x + 2)(x - 4)
    std::vector<Rational> q{Rational(8), Rational(-6), Rational(-23), Rational(6)};
    auto roots = poly_roots(q);
    REQUIRE(roots.size() == 3);
    auto has = [&](const Rational &r) {
        for (const auto &x : roots)
            if (x == r) return true;
        return false;
    };
    CHECK(has(Rational(1, 2)));
    CHECK(has(Rational(-2, 3)));
    CHECK(has(Rational(4)));
}

TEST_CASE("charpoly over a prime field") {
    Fp z(0, 7);
    auto m = Matrix<Fp>::from_rows({{0, 1}, {1, 0}}, z);
    auto p = charpoly(m); // x^2 - 1
    auto roots = poly_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0].residue() == 1 && roots[1].residue() == 6) ||
           (roots[0].residue() == 6 && roots[1].residue() == 1)));
}

TEST_CASE("grouplikes of the group coalgebra are the group") {
    auto c = z2_group_coalgebra(Rational(0));
    auto g = grouplikes(c);
    REQUIRE(g.size() == 2);
    for (const auto &v : g) CHECK(is_grouplike(c, v));
}

TEST_CASE("grouplikes of function coalgebras are characters") {
    // over Q only the trivial character of Z/3 exists
    auto c = zn_function_coalgebra(3, Rational(0));
    auto g = grouplikes(c);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});

    // over F_7 the cube roots of unity 1, 2, 4 give three characters
    auto d = zn_function_coalgebra(3, Fp(0, 7));
    auto h = grouplikes(d);
    REQUIRE(h.size() == 3);
    for (const auto &v : h) {
        CHECK(is_grouplike(d, v));
        CHECK(v[0].is_one());
        CHECK(v[1] * v[1] == v[2]);
        CHECK((v[1] * v[2]).is_one());
    }

    // and over Q the sign character of Z/2 survives
    auto e = zn_function_coalgebra(2, Rational(0));
    auto ge = grouplikes(e);
    REQUIRE(ge.size() == 2);
    bool saw_sign = false, saw_triv = false;
    for (const auto &v : ge) {
        if (v[1] == Rational(1)) saw_triv = true;
        if (v[1] == Rational(-1)) saw_sign = true;
    }
    CHECK(saw_triv);
    CHECK(saw_sign);
}

TEST_CASE("grouplike enumeration refuses large dimensions") {
    Coalgebra<Rational> c(9, Rational(0));
    CHECK_THROWS_AS(grouplikes(c), unsupported_error);
}

TEST_CASE("convolution algebra structure") {
    auto c = z2_group_coalgebra(Rational(0));
    std::vector<Rational> sign{Rational(1), Rational(-1)};
    CHECK(convolve(c, sign, sign) == c.counit);
    CHECK(conv_inverse(c, sign) == sign);

    std::vector<Rational> f{Rational(1), Rational(0)};
    CHECK_THROWS_AS(conv_inverse(c, f), not_convolution_invertible);
}

TEST_CASE("convolution is associative and unital on tensor squares") {
    auto base = zn_function_coalgebra(2, Fp(0, 5));
    auto c = tensor_power(base, 2);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long long> d(0, 4);
    for (int t = 0; t < 10; ++t) {
        std::vector<Fp> f(c.dim(), c.field()), g(c.dim(), c.field()), h(c.dim(), c.field());
        for (std::size_t i = 0; i < c.dim(); ++i) {
            f[i] = c.field().from_int(d(rng));
            g[i] = c.field().from_int(d(rng));
            h[i] = c.field().from_int(d(rng));
        }
        CHECK(convolve(c, convolve(c, f, g), h) == convolve(c, f, convolve(c, g, h)));
        CHECK(convolve(c, c.counit, f) == f);
        CHECK(convolve(c, f, c.counit) == f);
    }
}

TEST_CASE("the associator of a 2-cocycle inverts to itself") {
    auto z2 = z2_group_coalgebra(Rational(0));
    auto c3 = tensor_power(z2, 3);
    REQUIRE(c3.dim() == 8);
    std::vector<Rational> phi(8, Rational(1));
    phi[7] = Rational(-1); // the g|g|g slot
    auto inv = conv_inverse(c3, phi);
    CHECK(inv == phi);
}

TEST_CASE("iterated coproducts as matrices") {
    auto c = z2_group_coalgebra(Fp(0, 7));
    CHECK(delta_power_mat(c, 0).is_identity());
    CHECK(delta_power_mat(c, 1) == mat_delta(c));
    auto d2 = delta_power_mat(c, 2);
    REQUIRE(d2.rows() == 8);
    REQUIRE(d2.cols() == 2);
    CHECK(d2(0, 0).is_one());
    CHECK(d2(7, 1).is_one());
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (!d2(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 2);
}

TEST_CASE("cop swaps the coproduct legs") {
    auto c = zn_function_coalgebra(3, Rational(0));
    auto o = cop(c);
    CHECK(check_coalgebra(o).empty());
    auto sw = swap_matrix(3, 3, Rational(0));
    CHECK(mat_delta(o) == sw * mat_delta(c));
    CHECK(mat_delta(cop(o)) == mat_delta(c));
}

TEST_CASE("leg-wise composition agrees with dense kron") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> d(-4, 4);
    Rational z(0);
    auto rnd = [&](std::size_t r, std::size_t c) {
        Matrix<Rational> m(r, c, z);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = z.from_int(d(rng));
        return m;
    };
    auto a = rnd(2, 3), b = rnd(4, 2), c = rnd(3, 3);
    auto big = kron(kron(a, b), c);
    std::vector<Rational> f(2 * 4 * 3, z), v(3 * 2 * 3, z);
    for (auto &x : f) x = z.from_int(d(rng));
    for (auto &x : v) x = z.from_int(d(rng));

    auto viaLegs = row_compose(f, {&a, &b, &c});
    auto viaDense = mat_apply(big.transposed(), f);
    CHECK(viaLegs == viaDense);

    auto colLegs = col_compose({&a, &b, &c}, v);
    auto colDense = mat_apply(big, v);
    CHECK(colLegs == colDense);
}

} // TEST_SUITE
