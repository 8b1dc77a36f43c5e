#pragma once

#include <string>
#include <vector>

#include "coalgebra.hpp"

namespace cqh {

// Coquasi bialgebra on a finite basis. The product is an n x n^2 matrix
// whose column c*n + d holds the coordinates of e_c e_d; the associator is a
// functional on the triple tensor power, stored in row-major leg order.
template <typename K>
struct CoquasiBialgebra {
    Coalgebra<K> co;
    Matrix<K> product;
    std::vector<K> unit;
    std::vector<K> assoc;

    std::size_t dim() const { return co.dim(); }
    const K &field() const { return co.field(); }
};

template <typename K>
struct Antipode {
    Matrix<K> s;
    std::vector<K> alpha, beta;
};

template <typename K>
struct CoquasiHopf {
    CoquasiBialgebra<K> b;
    Antipode<K> ant;

    std::size_t dim() const { return b.dim(); }
    const K &field() const { return b.field(); }
};

template <typename K>
Matrix<K> mat_unit(const CoquasiBialgebra<K> &b) {
    Matrix<K> u(b.dim(), 1, b.field());
    u.set_col(0, b.unit);
    return u;
}

// the one-dimensional coquasi bialgebra on the base field
template <typename K>
CoquasiBialgebra<K> trivial_bialgebra(const K &z) {
    auto co = trivial_coalgebra(z);
    Matrix<K> p(1, 1, z);
    p(0, 0) = z.one();
    return {co, p, {z.one()}, {z.one()}};
}

template <typename K>
std::vector<K> trivial_assoc(const CoquasiBialgebra<K> &b) {
    auto ee = fun_tensor(b.co.counit, b.co.counit);
    return fun_tensor(ee, b.co.counit);
}

template <typename K>
bool has_trivial_assoc(const CoquasiBialgebra<K> &b) {
    return b.assoc == trivial_assoc(b);
}

// product of two coordinate vectors
template <typename K>
std::vector<K> mul(const CoquasiBialgebra<K> &b, const std::vector<K> &x,
                   const std::vector<K> &y) {
    return mat_apply(b.product, fun_tensor(x, y));
}

template <typename K>
std::vector<std::string> check_coquasi(const CoquasiBialgebra<K> &b) {
    std::vector<std::string> bad = check_coalgebra(b.co);
    std::size_t n = b.dim();
    if (b.product.rows() != n || b.product.cols() != n * n || b.unit.size() != n ||
        b.assoc.size() != n * n * n) {
        bad.push_back("structure constant shapes are inconsistent");
        return bad;
    }
    const K z = b.field();
    auto eye = Matrix<K>::identity(n, z);
    auto u = mat_unit(b);

    auto c2 = tensor(b.co, b.co);
    if (mat_delta(b.co) * b.product != kron(b.product, b.product) * mat_delta(c2))
        bad.push_back("product is not a coalgebra morphism (coproduct side)");
    if (row_compose(b.co.counit, {&b.product}) != c2.counit)
        bad.push_back("product is not a coalgebra morphism (counit side)");
    if (!is_grouplike(b.co, b.unit)) bad.push_back("unit is not group-like");
    if (b.product * kron(u, eye) != eye) bad.push_back("left unit law fails");
    if (b.product * kron(eye, u) != eye) bad.push_back("right unit law fails");

    auto c3 = tensor_power(b.co, 3);
    auto left_first = b.product * kron(b.product, eye);
    auto right_first = b.product * kron(eye, b.product);
    if (conv_op_fun(c3, left_first, b.assoc) != conv_fun_op(c3, b.assoc, right_first))
        bad.push_back("associator does not intertwine the two triple products");

    auto c4 = tensor_power(b.co, 4);
    auto g1 = row_compose(b.assoc, {&b.product, &eye, &eye});
    auto g2 = row_compose(b.assoc, {&eye, &eye, &b.product});
    auto f1 = fun_tensor(b.assoc, b.co.counit);
    auto f2 = row_compose(b.assoc, {&eye, &b.product, &eye});
    auto f3 = fun_tensor(b.co.counit, b.assoc);
    if (convolve(c4, g1, g2) != convolve(c4, f1, convolve(c4, f2, f3)))
        bad.push_back("associator fails the cocycle identity");

    auto eps2 = fun_tensor(b.co.counit, b.co.counit);
    if (row_compose(b.assoc, {&eye, &u, &eye}) != eps2)
        bad.push_back("associator is not normalized at the unit");
    if (row_compose(b.assoc, {&u, &eye, &eye}) != eps2)
        bad.push_back("associator does not vanish on the unit in the first slot");
    if (row_compose(b.assoc, {&eye, &eye, &u}) != eps2)
        bad.push_back("associator does not vanish on the unit in the third slot");

    try {
        conv_inverse(c3, b.assoc);
    } catch (const not_convolution_invertible &) {
        bad.push_back("associator is not convolution invertible");
    }
    return bad;
}

// The coquasi bialgebra on the co-opposite coalgebra with the opposite
// product and the fully reversed associator.
template <typename K>
CoquasiBialgebra<K> circ(const CoquasiBialgebra<K> &b) {
    std::size_t n = b.dim();
    CoquasiBialgebra<K> o{cop(b.co), b.product * swap_matrix(n, n, b.field()), b.unit,
                          std::vector<K>(n * n * n, b.field())};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                o.assoc[(i * n + j) * n + k] = b.assoc[(k * n + j) * n + i];
    return o;
}

// For an antipode (S, alpha, beta) of H, (S, beta, alpha) is an antipode of
// the co-opposite-opposite bialgebra.
template <typename K>
Antipode<K> circ_antipode(const Antipode<K> &a) {
    return {a.s, a.beta, a.alpha};
}

template <typename K>
std::vector<std::string> check_antipode(const CoquasiBialgebra<K> &b, const Antipode<K> &ant) {
    std::vector<std::string> bad;
    std::size_t n = b.dim();
    const K z = b.field();
    if (ant.s.rows() != n || ant.s.cols() != n || ant.alpha.size() != n ||
        ant.beta.size() != n) {
        bad.push_back("antipode shapes are inconsistent");
        return bad;
    }
    auto eye = Matrix<K>::identity(n, z);
    auto sw = swap_matrix(n, n, z);

    if (mat_delta(b.co) * ant.s != kron(ant.s, ant.s) * sw * mat_delta(b.co))
        bad.push_back("S is not a coalgebra morphism from the co-opposite");
    if (row_compose(b.co.counit, {&ant.s}) != b.co.counit)
        bad.push_back("S does not preserve the counit");

    // sum S(h1) alpha(h2) h3 = alpha(h) 1 and sum h1 beta(h2) S(h3) = beta(h) 1
    Matrix<K> alpha_m(1, n, z), beta_m(1, n, z);
    for (std::size_t i = 0; i < n; ++i) {
        alpha_m(0, i) = ant.alpha[i];
        beta_m(0, i) = ant.beta[i];
    }
    auto d2 = delta_power_mat(b.co, 2);
    auto mid_alpha = kron(eye, kron(alpha_m, eye)) * d2; // n^2 x n
    auto mid_beta = kron(eye, kron(beta_m, eye)) * d2;
    auto lhs1 = b.product * kron(ant.s, eye) * mid_alpha;
    auto lhs2 = b.product * kron(eye, ant.s) * mid_beta;
    auto u = mat_unit(b);
    Matrix<K> rhs1(n, n, z), rhs2(n, n, z);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rhs1(i, j) = b.unit[i] * ant.alpha[j];
            rhs2(i, j) = b.unit[i] * ant.beta[j];
        }
    if (lhs1 != rhs1) bad.push_back("first antipode equation fails");
    if (lhs2 != rhs2) bad.push_back("second antipode equation fails");

    // the two zig-zag equations through the associator
    auto c3 = tensor_power(b.co, 3);
    std::vector<K> phi_inv;
    try {
        phi_inv = conv_inverse(c3, b.assoc);
    } catch (const not_convolution_invertible &) {
        bad.push_back("associator is not convolution invertible");
        return bad;
    }
    auto zig = row_compose(phi_inv, {&eye, &ant.s, &eye}); // on legs (h1, h3, h5)
    auto zag = row_compose(b.assoc, {&ant.s, &eye, &ant.s});
    std::vector<K> lhs3(n, z), lhs4(n, z);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto &[t, c] : sparse_delta_power(b.co, i, 4)) {
            lhs3[i] += c * zig[(t[0] * n + t[2]) * n + t[4]] * ant.beta[t[1]] * ant.alpha[t[3]];
            lhs4[i] += c * zag[(t[0] * n + t[2]) * n + t[4]] * ant.alpha[t[1]] * ant.beta[t[3]];
        }
    }
    if (lhs3 != b.co.counit) bad.push_back("third antipode equation fails");
    if (lhs4 != b.co.counit) bad.push_back("fourth antipode equation fails");
    return bad;
}

template <typename K>
std::vector<std::string> check_coquasi_hopf(const CoquasiHopf<K> &h) {
    auto bad = check_coquasi(h.b);
    auto bad2 = check_antipode(h.b, h.ant);
    bad.insert(bad.end(), bad2.begin(), bad2.end());
    return bad;
}

template <typename K>
Matrix<K> antipode_inverse(const CoquasiHopf<K> &h) {
    try {
        return invert(h.ant.s);
    } catch (const singular_matrix_error &) {
        throw singular_matrix_error("antipode is not invertible");
    }
}

// Check a lax monoidal structure (chi, rho) on a coalgebra morphism
// f : C -> D between coquasi bialgebras, including invertibility of chi.
template <typename K>
std::vector<std::string> check_monoidal_morphism(const CoquasiBialgebra<K> &c,
                                                 const CoquasiBialgebra<K> &d,
                                                 const Matrix<K> &f, const std::vector<K> &chi,
                                                 const K &rho) {
    std::vector<std::string> bad;
    std::size_t n = c.dim();
    const K z = c.field();
    if (f.rows() != d.dim() || f.cols() != n || chi.size() != n * n) {
        bad.push_back("monoidal structure shapes are inconsistent");
        return bad;
    }
    auto eye = Matrix<K>::identity(n, z);

    if (mat_delta(d.co) * f != kron(f, f) * mat_delta(c.co))
        bad.push_back("f is not a coalgebra morphism (coproduct side)");
    if (row_compose(d.co.counit, {&f}) != c.co.counit)
        bad.push_back("f is not a coalgebra morphism (counit side)");

    auto c2 = tensor(c.co, c.co);
    auto lhs = conv_fun_op(c2, chi, d.product * kron(f, f));
    auto rhs = conv_op_fun(c2, f * c.product, chi);
    if (lhs != rhs) bad.push_back("chi does not intertwine the products");
    if (mat_apply(f, c.unit) != d.unit) bad.push_back("f does not preserve the unit");

    auto c3 = tensor_power(c.co, 3);
    auto phi_d_fff = row_compose(d.assoc, {&f, &f, &f});
    auto chi_pid = row_compose(chi, {&c.product, &eye});
    auto chi_idp = row_compose(chi, {&eye, &c.product});
    auto l3 = convolve(c3, phi_d_fff, convolve(c3, fun_tensor(chi, c.co.counit), chi_pid));
    auto r3 = convolve(c3, fun_tensor(c.co.counit, chi), convolve(c3, chi_idp, c.assoc));
    if (l3 != r3) bad.push_back("chi fails the associator compatibility");

    auto u = mat_unit(c);
    auto left_unit = row_compose(chi, {&u, &eye});
    auto right_unit = row_compose(chi, {&eye, &u});
    for (auto &x : left_unit) x *= rho;
    for (auto &x : right_unit) x *= rho;
    if (left_unit != c.co.counit || right_unit != c.co.counit)
        bad.push_back("rho does not normalize chi at the unit");

    try {
        conv_inverse(c2, chi);
    } catch (const not_convolution_invertible &) {
        bad.push_back("chi is not convolution invertible");
    }
    return bad;
}

// Monoidal structure of a composite g f from structures on g : D -> E and
// f : C -> D: chi = (chi_g o (f (x) f)) * chi_f, rho = rho_f rho_g.
template <typename K>
std::pair<std::vector<K>, K> compose_monoidal(const Coalgebra<K> &c_co, const Matrix<K> &f,
                                              const std::vector<K> &chi_g, const K &rho_g,
                                              const std::vector<K> &chi_f, const K &rho_f) {
    auto c2 = tensor(c_co, c_co);
    auto pulled = row_compose(chi_g, {&f, &f});
    return {convolve(c2, pulled, chi_f), rho_f * rho_g};
}

// The canonical monoidal structure on S viewed as a morphism from the
// co-opposite-opposite bialgebra into H; all Sweedler legs below refer to
// the coproduct of H itself.
template <typename K>
std::vector<K> chi_s(const CoquasiHopf<K> &h) {
    const auto &b = h.b;
    std::size_t n = b.dim();
    const K z = b.field();
    auto eye = Matrix<K>::identity(n, z);
    const Matrix<K> &s = h.ant.s;

    auto c3 = tensor_power(b.co, 3);
    auto phi_inv = conv_inverse(c3, b.assoc);

    auto p_ss = b.product * kron(s, s); // u (x) v -> S(u) S(v)
    auto sp = s * b.product;            // u (x) v -> S(uv)

    auto a1 = row_compose(phi_inv, {&s, &s, &eye});       // legs (y3, x3, x5)
    auto a3 = row_compose(b.assoc, {&p_ss, &eye, &eye});  // legs (y2, x2, x6, y5)
    auto a5 = row_compose(h.ant.beta, {&b.product});      // legs (x8, y7)
    auto a6 = row_compose(b.assoc, {&p_ss, &b.product, &sp}); // (y1,x1,x7,y6,x9,y8)

    std::vector<K> out(n * n, z);
    for (std::size_t i = 0; i < n; ++i) {
        auto xt = sparse_delta_power(b.co, i, 8);
        for (std::size_t j = 0; j < n; ++j) {
            auto yt = sparse_delta_power(b.co, j, 7);
            K acc = z;
            for (const auto &[x, cx] : xt)
                for (const auto &[y, cy] : yt) {
                    K v = cx * cy;
                    v *= a1[(y[2] * n + x[2]) * n + x[4]];
                    if (v.is_zero()) continue;
                    v *= h.ant.alpha[x[3]];
                    v *= a3[((y[1] * n + x[1]) * n + x[5]) * n + y[4]];
                    if (v.is_zero()) continue;
                    v *= h.ant.alpha[y[3]];
                    v *= a5[x[7] * n + y[6]];
                    v *= a6[((((y[0] * n + x[0]) * n + x[6]) * n + y[5]) * n + x[8]) * n + y[7]];
                    acc += v;
                }
            out[i * n + j] = acc;
        }
    }
    return out;
}

} // namespace cqh
