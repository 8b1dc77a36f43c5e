#include <doctest.h>

#include "coquasi/zoo.hpp"
#include "test_util.hpp"

using namespace cqh;

namespace {

const Rational Q;
const Fp F7{0, 7};

template <typename K>
void check_same_structure(const CoquasiHopf<K> &a, const CoquasiHopf<K> &b) {
    CHECK(a.b.co.names == b.b.co.names);
    CHECK(mat_delta(a.b.co) == mat_delta(b.b.co));
    CHECK(a.b.co.counit == b.b.co.counit);
    CHECK(a.b.product == b.b.product);
    CHECK(a.b.unit == b.b.unit);
    CHECK(a.b.assoc == b.b.assoc);
    CHECK(a.ant.s == b.ant.s);
    CHECK(a.ant.alpha == b.ant.alpha);
    CHECK(a.ant.beta == b.ant.beta);
}

} // namespace

TEST_SUITE("zoo") {

TEST_CASE("cyclic group algebras pass the axiom suite") {
    auto z2 = cyclic_group(2, Q);
    CHECK(check_coquasi_hopf(z2).empty());
    CHECK(grouplikes(z2.b.co).size() == 2);

    auto z3 = cyclic_group(3, F7);
    CHECK(check_coquasi_hopf(z3).empty());
    CHECK(has_trivial_assoc(z3.b));
}

TEST_CASE("the S3 group algebra passes and is noncommutative") {
    auto h = symmetric3(Q);
    CHECK(h.b.dim() == 6);
    CHECK(check_coquasi_hopf(h).empty());

    std::vector<Rational> r(6, Q), s(6, Q);
    r[1] = Q.one();
    s[3] = Q.one();
    auto rs = mul(h.b, r, s);
    auto sr = mul(h.b, s, r);
    CHECK(rs != sr);
    CHECK(rs[4] == Q.one());
    CHECK(sr[5] == Q.one());
}

TEST_CASE("group_algebra rejects tables that are not groups") {
    CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 1}}, Q), not_a_group);
    CHECK_THROWS_AS(group_algebra({{0, 1, 2}, {1, 2, 0}, {2, 2, 2}}, Q), not_a_group);
    CHECK_THROWS_AS(group_algebra({{0, 1}, {0, 1}}, Q), not_a_group);
    CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 5}}, Q), not_a_group);
    CHECK_THROWS_AS(group_algebra(std::vector<std::vector<std::size_t>>{}, Q), not_a_group);

    // a relabeled Z/2 whose identity sits at index 1 is still a group
    auto h = group_algebra({{1, 0}, {0, 1}}, Q);
    CHECK(check_coquasi_hopf(h).empty());
    CHECK(h.b.unit[1] == Q.one());
}

TEST_CASE("the Sweedler algebra passes and has an order four antipode") {
    auto h = sweedler_h4(Q);
    CHECK(check_coquasi_hopf(h).empty());

    auto s2 = h.ant.s * h.ant.s;
    CHECK(s2 != Matrix<Rational>::identity(4, Q));
    CHECK(s2 * s2 == Matrix<Rational>::identity(4, Q));

    auto gl = grouplikes(h.b.co);
    REQUIRE(gl.size() == 2);

    CHECK_THROWS_AS(sweedler_h4(Fp{0, 2}), char_two);
}

TEST_CASE("taft(2,-1) recovers the Sweedler algebra") {
    auto t = taft(2, Rational(-1));
    check_same_structure(t, sweedler_h4(Q));
}

TEST_CASE("the dimension nine Taft algebra over F7") {
    auto h = taft(3, Fp{2, 7});
    CHECK(h.b.dim() == 9);
    CHECK(h.b.co.names[1] == "g");
    CHECK(h.b.co.names[3] == "x");
    CHECK(h.b.co.names[8] == "g2x2");
    CHECK(check_coquasi_hopf(h).empty());

    // S^2 sends h to g^{-1} h g, so S has order exactly six
    std::vector<Fp> g(9, F7), g2(9, F7);
    g[1] = F7.one();
    g2[2] = F7.one();
    Matrix<Fp> conj(9, 9, F7);
    for (std::size_t i = 0; i < 9; ++i) {
        std::vector<Fp> e(9, F7);
        e[i] = F7.one();
        conj.set_col(i, mul(h.b, g2, mul(h.b, e, g)));
    }
    auto s2 = h.ant.s * h.ant.s;
    auto eye = Matrix<Fp>::identity(9, F7);
    CHECK(s2 == conj);
    CHECK(s2 != eye);
    CHECK(s2 * s2 != eye);
    CHECK(s2 * s2 * s2 == eye);

    // classical Hopf case: the monoidal structure on S collapses
    CHECK(chi_s(h) == fun_tensor(h.b.co.counit, h.b.co.counit));
}

TEST_CASE("taft rejects non-primitive roots") {
    CHECK_THROWS_AS(taft(3, Rational(2)), bad_root);
    CHECK_THROWS_AS(taft(3, Rational(1)), bad_root);
    CHECK_THROWS_AS(taft(3, Fp{2, 13}), bad_root);
    CHECK_THROWS_AS(taft(4, Fp{2, 7}), bad_root);
    CHECK_THROWS_AS(taft(1, Rational(1)), bad_root);
    CHECK_NOTHROW(taft(2, Fp{6, 7}));
}

TEST_CASE("cyclic cocycle algebra matches the hand-built twisted fixture") {
    auto h = cyclic_cocycle_coquasi(2, Rational(-1));
    CHECK(h.b.assoc[7] == Rational(-1));
    CHECK(h.b.assoc[0] == Q.one());

    auto b = testutil::z2_twisted_bialgebra(Q);
    auto ant = testutil::z2_twisted_antipode(Q);
    check_same_structure(h, CoquasiHopf<Rational>{b, ant});
    CHECK(check_coquasi_hopf(h).empty());
}

TEST_CASE("cyclic cocycle algebra of order three over F7") {
    auto h = cyclic_cocycle_coquasi(3, Fp{2, 7});
    CHECK(check_coquasi_hopf(h).empty());
    CHECK(!has_trivial_assoc(h.b));
    CHECK(h.ant.beta[1] == Fp(2, 7));
    CHECK(h.ant.beta[2] == Fp(4, 7));

    // beta must twist along with the associator: the pointwise inverse
    // normalization fails the antipode equations once n > 2
    auto wrong = h.ant;
    wrong.beta[1] = Fp(4, 7);
    wrong.beta[2] = Fp(2, 7);
    CHECK(!check_antipode(h.b, wrong).empty());
}

TEST_CASE("a de-normalized associator is rejected") {
    auto h = cyclic_cocycle_coquasi(2, Rational(-1));
    h.b.assoc[(0 * 2 + 1) * 2 + 1] = Rational(-1);
    auto bad = check_coquasi(h.b);
    REQUIRE(!bad.empty());
    bool found = false;
    for (const auto &msg : bad)
        if (msg.find("first slot") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("cyclic_cocycle_coquasi rejects bad roots") {
    CHECK_THROWS_AS(cyclic_cocycle_coquasi(2, Rational(1)), bad_root);
    CHECK_THROWS_AS(cyclic_cocycle_coquasi(4, Fp{2, 7}), bad_root);
    CHECK_THROWS_AS(cyclic_cocycle_coquasi(0, Rational(1)), bad_root);
}

} // TEST_SUITE
