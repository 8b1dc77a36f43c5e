#pragma once

#include <map>
#include <string>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "solve.hpp"

namespace cqh {

struct not_convolution_invertible : std::runtime_error {
    not_convolution_invertible(const std::string &what) : std::runtime_error(what) {}
};

template <typename K>
struct CoTerm {
    std::size_t left, right;
    K coeff;
};

// Coalgebra given by structure constants on a finite basis:
//   Delta(e_i) = sum over delta[i] of coeff * e_left (x) e_right
//   eps(e_i)   = counit[i]
template <typename K>
struct Coalgebra {
    std::vector<std::string> names;
    std::vector<std::vector<CoTerm<K>>> delta;
    std::vector<K> counit;

    Coalgebra(std::size_t n, const K &sample)
        : names(n), delta(n), counit(n, sample.zero()), fz_(sample.zero()) {
        for (std::size_t i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
    }

    std::size_t dim() const { return counit.size(); }
    const K &field() const { return fz_; }

    void add_delta(std::size_t i, std::size_t left, std::size_t right, const K &c) {
        if (!c.is_zero()) delta[i].push_back({left, right, c});
    }

    // merge duplicate (left, right) pairs and drop zero terms
    void normalize() {
        for (auto &terms : delta) {
            std::vector<CoTerm<K>> merged;
            for (const auto &t : terms) {
                bool found = false;
                for (auto &m : merged)
                    if (m.left == t.left && m.right == t.right) {
                        m.coeff += t.coeff;
                        found = true;
                        break;
                    }
                if (!found) merged.push_back(t);
            }
            std::erase_if(merged, [](const CoTerm<K> &t) { return t.coeff.is_zero(); });
            terms = std::move(merged);
        }
    }

private:
    K fz_;
};

// Delta as a dense dim^2 x dim matrix; tensor slot (j, k) sits at row j*dim + k.
template <typename K>
Matrix<K> mat_delta(const Coalgebra<K> &c) {
    std::size_t n = c.dim();
    Matrix<K> m(n * n, n, c.field());
    for (std::size_t i = 0; i < n; ++i)
        for (const auto &t : c.delta[i]) m(t.left * n + t.right, i) += t.coeff;
    return m;
}

// Iterated coproduct as a dense dim^(k+1) x dim matrix, expanding the first
// leg each round; coassociativity makes the nesting order immaterial.
// k = 0 gives the identity.
template <typename K>
Matrix<K> delta_power_mat(const Coalgebra<K> &c, std::size_t k) {
    std::size_t n = c.dim();
    std::size_t rows = 1;
    for (std::size_t i = 0; i <= k; ++i) rows *= n;
    Matrix<K> m(rows, n, c.field());
    struct Term { std::vector<std::size_t> idx; K coeff; };
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> terms{{{i}, c.field().one()}};
        for (std::size_t step = 0; step < k; ++step) {
            std::vector<Term> next;
            for (const auto &t : terms)
                for (const auto &d : c.delta[t.idx[0]]) {
                    Term nt{{d.left, d.right}, t.coeff * d.coeff};
                    nt.idx.insert(nt.idx.end(), t.idx.begin() + 1, t.idx.end());
                    next.push_back(std::move(nt));
                }
            terms = std::move(next);
        }
        for (const auto &t : terms) {
            std::size_t row = 0;
            for (std::size_t x : t.idx) row = row * n + x;
            m(row, i) += t.coeff;
        }
    }
    return m;
}

template <typename K>
std::vector<std::string> check_coalgebra(const Coalgebra<K> &c) {
    std::vector<std::string> bad;
    std::size_t n = c.dim();
    const K z = c.field();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<K> acc(n * n * n, z);
        for (const auto &t : c.delta[i]) {
            for (const auto &u : c.delta[t.left])
                acc[(u.left * n + u.right) * n + t.right] += t.coeff * u.coeff;
            for (const auto &u : c.delta[t.right])
                acc[(t.left * n + u.left) * n + u.right] -= t.coeff * u.coeff;
        }
        for (std::size_t w = 0; w < acc.size(); ++w)
            if (!acc[w].is_zero()) {
                std::size_t a = w / (n * n), b = (w / n) % n, d = w % n;
                bad.push_back("coassociativity fails on " + c.names[i] + ": coefficient " +
                              acc[w].str() + " left over at " + c.names[a] + "|" + c.names[b] +
                              "|" + c.names[d]);
                break;
            }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<K> l(n, z), r(n, z);
        for (const auto &t : c.delta[i]) {
            l[t.right] += c.counit[t.left] * t.coeff;
            r[t.left] += c.counit[t.right] * t.coeff;
        }
        for (std::size_t j = 0; j < n; ++j) {
            K want = (i == j) ? z.one() : z;
            if (l[j] != want) {
                bad.push_back("left counit law fails on " + c.names[i]);
                break;
            }
            if (r[j] != want) {
                bad.push_back("right counit law fails on " + c.names[i]);
                break;
            }
        }
    }
    return bad;
}

// Co-opposite: swap the two output legs of Delta.
template <typename K>
Coalgebra<K> cop(const Coalgebra<K> &c) {
    Coalgebra<K> o(c.dim(), c.field());
    o.names = c.names;
    o.counit = c.counit;
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (const auto &t : c.delta[i]) o.add_delta(i, t.right, t.left, t.coeff);
    return o;
}

// Tensor product coalgebra on basis e_i (x) f_a at index i*dim(d) + a.
template <typename K>
Coalgebra<K> tensor(const Coalgebra<K> &c, const Coalgebra<K> &d) {
    std::size_t nc = c.dim(), nd = d.dim();
    Coalgebra<K> t(nc * nd, c.field());
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t a = 0; a < nd; ++a) {
            std::size_t idx = i * nd + a;
            t.names[idx] = c.names[i] + "|" + d.names[a];
            t.counit[idx] = c.counit[i] * d.counit[a];
            for (const auto &u : c.delta[i])
                for (const auto &v : d.delta[a])
                    t.add_delta(idx, u.left * nd + v.left, u.right * nd + v.right,
                                u.coeff * v.coeff);
        }
    return t;
}

template <typename K>
Coalgebra<K> trivial_coalgebra(const K &sample) {
    Coalgebra<K> c(1, sample);
    c.names[0] = "1";
    c.counit[0] = sample.one();
    c.add_delta(0, 0, 0, sample.one());
    return c;
}

template <typename K>
Coalgebra<K> tensor_power(const Coalgebra<K> &c, std::size_t k) {
    if (k == 0) return trivial_coalgebra(c.field());
    Coalgebra<K> t = c;
    for (std::size_t i = 1; i < k; ++i) t = tensor(t, c);
    return t;
}

// Functionals on a coalgebra are plain coordinate rows; they form an
// associative algebra under convolution with the counit as unit.
template <typename K>
K eval(const std::vector<K> &f, const std::vector<K> &v) {
    if (f.size() != v.size() || f.empty())
        throw dimension_error("functional/vector length mismatch");
    K acc = f[0].zero();
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * v[i];
    return acc;
}

template <typename K>
std::vector<K> convolve(const Coalgebra<K> &c, const std::vector<K> &f, const std::vector<K> &g) {
    if (f.size() != c.dim() || g.size() != c.dim())
        throw dimension_error("convolution operand length mismatch");
    std::vector<K> h(c.dim(), c.field());
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (const auto &t : c.delta[i]) h[i] += t.coeff * f[t.left] * g[t.right];
    return h;
}

// Two-sided convolution inverse. The defining equations f * g = eps are
// linear in g; the solution, when it exists, is checked from both sides
// before it is returned.
template <typename K>
std::vector<K> conv_inverse(const Coalgebra<K> &c, const std::vector<K> &f) {
    if (f.size() != c.dim()) throw dimension_error("functional length mismatch");
    if (f == c.counit) return f;
    std::size_t n = c.dim();
    Matrix<K> m(n, n, c.field());
    for (std::size_t i = 0; i < n; ++i)
        for (const auto &t : c.delta[i]) m(i, t.right) += t.coeff * f[t.left];
    auto sol = solve(m, c.counit);
    if (!sol.has_solution())
        throw not_convolution_invertible("no right convolution inverse exists");
    const std::vector<K> &g = *sol.particular;
    if (convolve(c, f, g) != c.counit || convolve(c, g, f) != c.counit)
        throw not_convolution_invertible("one-sided inverse is not two-sided");
    return g;
}

template <typename K>
std::vector<K> fun_tensor(const std::vector<K> &f, const std::vector<K> &g) {
    std::vector<K> h;
    h.reserve(f.size() * g.size());
    for (const K &a : f)
        for (const K &b : g) h.push_back(a * b);
    return h;
}

// Convolution of an operator with a functional: (t * f)(x) = sum t(x_1) f(x_2).
template <typename K>
Matrix<K> conv_op_fun(const Coalgebra<K> &c, const Matrix<K> &t, const std::vector<K> &f) {
    if (t.cols() != c.dim() || f.size() != c.dim())
        throw dimension_error("conv_op_fun shape mismatch");
    Matrix<K> out(t.rows(), c.dim(), c.field());
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (const auto &d : c.delta[i]) {
            K w = d.coeff * f[d.right];
            if (w.is_zero()) continue;
            for (std::size_t r = 0; r < t.rows(); ++r) out(r, i) += w * t(r, d.left);
        }
    return out;
}

// (f * t)(x) = sum f(x_1) t(x_2).
template <typename K>
Matrix<K> conv_fun_op(const Coalgebra<K> &c, const std::vector<K> &f, const Matrix<K> &t) {
    if (t.cols() != c.dim() || f.size() != c.dim())
        throw dimension_error("conv_fun_op shape mismatch");
    Matrix<K> out(t.rows(), c.dim(), c.field());
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (const auto &d : c.delta[i]) {
            K w = d.coeff * f[d.left];
            if (w.is_zero()) continue;
            for (std::size_t r = 0; r < t.rows(); ++r) out(r, i) += w * t(r, d.right);
        }
    return out;
}

// gamma -> x = sum x_1 gamma(x_2), as a matrix acting on coordinates.
template <typename K>
Matrix<K> harpoon_left(const Coalgebra<K> &c, const std::vector<K> &gamma) {
    if (gamma.size() != c.dim()) throw dimension_error("harpoon functional length mismatch");
    Matrix<K> m(c.dim(), c.dim(), c.field());
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (const auto &d : c.delta[i]) m(d.left, i) += d.coeff * gamma[d.right];
    return m;
}

// x <- gamma = sum gamma(x_1) x_2.
template <typename K>
Matrix<K> harpoon_right(const Coalgebra<K> &c, const std::vector<K> &gamma) {
    if (gamma.size() != c.dim()) throw dimension_error("harpoon functional length mismatch");
    Matrix<K> m(c.dim(), c.dim(), c.field());
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (const auto &d : c.delta[i]) m(d.right, i) += d.coeff * gamma[d.left];
    return m;
}

// Iterated coproduct of one basis element in merged sparse form:
// pairs of (index tuple of length k+1, coefficient).
template <typename K>
std::vector<std::pair<std::vector<std::size_t>, K>>
sparse_delta_power(const Coalgebra<K> &c, std::size_t i, std::size_t k) {
    std::map<std::vector<std::size_t>, K> acc;
    acc.emplace(std::vector<std::size_t>{i}, c.field().one());
    for (std::size_t step = 0; step < k; ++step) {
        std::map<std::vector<std::size_t>, K> next;
        for (const auto &[idx, coeff] : acc)
            for (const auto &d : c.delta[idx[0]]) {
                std::vector<std::size_t> nidx{d.left, d.right};
                nidx.insert(nidx.end(), idx.begin() + 1, idx.end());
                K w = coeff * d.coeff;
                auto it = next.find(nidx);
                if (it == next.end())
                    next.emplace(std::move(nidx), w);
                else
                    it->second += w;
            }
        acc = std::move(next);
    }
    std::vector<std::pair<std::vector<std::size_t>, K>> out;
    out.reserve(acc.size());
    for (auto &[idx, coeff] : acc)
        if (!coeff.is_zero()) out.emplace_back(idx, coeff);
    return out;
}

template <typename K>
bool is_grouplike(const Coalgebra<K> &c, const std::vector<K> &v) {
    std::size_t n = c.dim();
    if (v.size() != n) return false;
    const K z = c.field();
    std::vector<K> dv(n * n, z);
    K e = z;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto &t : c.delta[i]) dv[t.left * n + t.right] += v[i] * t.coeff;
        e += c.counit[i] * v[i];
    }
    if (!e.is_one()) return false;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (dv[j * n + k] != v[j] * v[k]) return false;
    return true;
}

// Complete enumeration of group-like elements, for dimension at most 8.
//
// A group-like c is a simultaneous eigenvector of the operators
// L_k = (id (x) e^k) Delta with eigenvalue tuple equal to its own
// coordinates. Candidate eigenvalues come from exactly computed
// characteristic polynomials; branches refine a subspace per partial tuple,
// and the survivors are filtered through the definition directly.
template <typename K>
std::vector<std::vector<K>> grouplikes(const Coalgebra<K> &c) {
    std::size_t n = c.dim();
    if (n > 8) throw unsupported_error("grouplike enumeration supports dimension <= 8");
    const K z = c.field();
    std::vector<Matrix<K>> ops(n, Matrix<K>(n, n, z));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto &t : c.delta[i]) ops[t.right](t.left, i) += t.coeff;

    struct State {
        Matrix<K> space;
        std::vector<K> tuple;
    };
    std::vector<State> states{{Matrix<K>::identity(n, z), {}}};
    for (std::size_t k = 0; k < n; ++k) {
        auto eigs = poly_roots(charpoly(ops[k]));
        std::vector<State> next;
        for (const auto &st : states)
            for (const K &lam : eigs) {
                Matrix<K> b = ops[k] * st.space - st.space.scaled(lam);
                auto ker = kernel_basis(b);
                if (ker.cols() == 0) continue;
                State ns{st.space * ker, st.tuple};
                ns.tuple.push_back(lam);
                next.push_back(std::move(ns));
            }
        states = std::move(next);
    }
    std::vector<std::vector<K>> out;
    for (const auto &st : states)
        if (is_grouplike(c, st.tuple)) out.push_back(st.tuple);
    return out;
}

} // namespace cqh
