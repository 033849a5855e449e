#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "phinforge/matrix.hpp"
#include "phinforge/rational.hpp"
#include "phinforge/scalars.hpp"

namespace phinforge {

namespace detail {

/// Column Hermite form of an integer matrix (entries held as Rationals with
/// denominator 1) whose columns span a full-rank lattice. Works on wide
/// matrices; returns the square upper-triangular basis with positive diagonal
/// and off-diagonal entries reduced modulo the diagonal of their row.
inline Mat<Rational> hermite_columns(Mat<Rational> m) {
    int n = m.rows();
    int w = m.cols();
    if (w < n) throw std::invalid_argument("not a full lattice generating set");
    // eliminate from the bottom row up; pivot for row r lives in column r
    for (int row = n - 1; row >= 0; --row) {
        int limit = row + (w - n);  // working columns 0..limit hold the remaining lattice
        while (true) {
            int nz = -1;
            for (int c = 0; c < limit; ++c)
                if (!m(row, c).is_zero()) { nz = c; break; }
            if (nz < 0) break;
            if (m(row, limit).is_zero()) {
                for (int i = 0; i < n; ++i) std::swap(m(i, limit), m(i, nz));
                continue;
            }
            BigInt q, rmd;
            BigInt::divmod(m(row, nz).num(), m(row, limit).num(), q, rmd);
            Rational qq(q, BigInt(1));
            for (int i = 0; i < n; ++i) m(i, nz) -= qq * m(i, limit);
            if (!m(row, nz).is_zero())
                for (int i = 0; i < n; ++i) std::swap(m(i, limit), m(i, nz));
        }
        if (m(row, limit).is_zero()) throw std::logic_error("singular lattice basis");
        if (m(row, limit).is_negative())
            for (int i = 0; i < n; ++i) m(i, limit) = -m(i, limit);
    }
    // extract the square tail and reduce above-diagonal entries
    std::vector<int> tail;
    for (int c = w - n; c < w; ++c) tail.push_back(c);
    Mat<Rational> h = m.columns(tail);
    for (int row = n - 1; row >= 0; --row)
        for (int c = row + 1; c < n; ++c) {
            if (h(row, c).is_zero()) continue;
            BigInt q, rmd;
            BigInt::divmod(h(row, c).num(), h(row, row).num(), q, rmd);
            if (rmd.is_negative()) q = q - BigInt(1);
            Rational qq(q, BigInt(1));
            for (int i = 0; i < n; ++i) h(i, c) -= qq * h(i, row);
        }
    return h;
}

inline bool all_divisible(const Mat<Rational>& m, long long p) {
    BigInt bp(p);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            BigInt q, r;
            BigInt::divmod(m(i, j).num(), bp, q, r);
            if (!r.is_zero()) return false;
        }
    return true;
}

}  // namespace detail

/// Homothety class of a full-rank lattice: the canonical representative sits
/// inside the standard lattice with p-power index and is not contained in p
/// times the standard lattice; its Hermite basis is the identifier.
struct LatticeClass {
    int d = 1;
    long long p = 2;
    Mat<Rational> basis;

    bool operator==(const LatticeClass& o) const { return d == o.d && p == o.p && basis == o.basis; }
    bool operator<(const LatticeClass& o) const {
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) {
                const Rational &a = basis(i, j), &b = o.basis(i, j);
                if (a != b) return a < b;
            }
        return false;
    }

    /// Valuation of the index in the standard lattice, modulo d+1.
    int type() const {
        Rational det = determinant(basis, Rational(1));
        return static_cast<int>(det.valuation(BigInt(p)) % (d + 1));
    }
};

/// Canonicalizes an integer generating matrix of a full-rank lattice
/// commensurable with the standard one (p-power index up to scaling).
inline LatticeClass canonical_lattice(int d, long long p, Mat<Rational> gen) {
    Mat<Rational> h = detail::hermite_columns(std::move(gen));
    while (detail::all_divisible(h, p)) {
        Rational inv(1, p);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) h(i, j) *= inv;
    }
    LatticeClass lc;
    lc.d = d;
    lc.p = p;
    lc.basis = std::move(h);
    return lc;
}

inline LatticeClass standard_lattice(int d, long long p) {
    return canonical_lattice(d, p, Mat<Rational>::identity(d + 1, Rational(1)));
}

/// True when the classes admit representatives with p L1 strictly inside L2
/// strictly inside L1, i.e. the vertices are adjacent in the building.
inline bool adjacent(const LatticeClass& a, const LatticeClass& b) {
    if (a == b) return false;
    // scale b's representative so that b is inside a with p a inside b... try
    // all scalings that put the index of b in a within (0, d+1).
    Mat<Rational> ainv;
    if (!solve(a.basis, Mat<Rational>::identity(a.d + 1, Rational(1)), ainv, Rational(1)))
        throw std::logic_error("singular basis");
    Mat<Rational> x = ainv * b.basis;  // coordinates of b in a
    // minimal p-valuation of the entries tells how far to rescale
    long long minval = 1 << 20;
    BigInt bp(a.p);
    for (int i = 0; i <= a.d; ++i)
        for (int j = 0; j <= a.d; ++j) {
            if (x(i, j).is_zero()) continue;
            long long v = x(i, j).valuation(bp);
            minval = std::min(minval, v);
        }
    // after scaling by p^{-minval}, b sits inside a and not inside p a
    Rational scale = minval >= 0 ? Rational(1, BigInt::pow(bp, static_cast<unsigned long long>(minval)))
                                 : Rational(BigInt::pow(bp, static_cast<unsigned long long>(-minval)), BigInt(1));
    Mat<Rational> xs = x.scaled(scale);
    // integrality means containment
    for (int i = 0; i <= a.d; ++i)
        for (int j = 0; j <= a.d; ++j)
            if (!xs(i, j).is_integer()) return false;
    Rational det = determinant(xs, Rational(1));
    long long idx = det.valuation(bp);
    if (idx <= 0 || idx > a.d) return false;
    // p a inside scaled b: a-coordinates of p a in scaled b must be integral
    Mat<Rational> xinv;
    if (!solve(xs, Mat<Rational>::identity(a.d + 1, Rational(1)), xinv, Rational(1))) return false;
    Mat<Rational> back = xinv.scaled(Rational(a.p));
    for (int i = 0; i <= a.d; ++i)
        for (int j = 0; j <= a.d; ++j)
            if (!back(i, j).is_integer()) return false;
    return true;
}

/// Finite simplicial chunk with pointed-simplex bookkeeping. A k-simplex
/// stores its vertex tuple in canonical cyclic order (sorted by type for
/// lattice complexes; as listed for abstract complexes).
struct BuildingComplex {
    int d = 1;
    long long p = 0;  // 0 for abstract complexes
    int vertex_count = 0;
    std::vector<LatticeClass> lattices;
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim][index] = vertex tuple
    std::vector<int> interior_panel;  // indices into simplices[d-1] whose cofaces are all present

    int count(int k) const {
        if (k < 0 || k >= static_cast<int>(simplices.size())) return 0;
        return static_cast<int>(simplices[static_cast<size_t>(k)].size());
    }

    int simplex_index(int k, std::vector<int> tuple) const {
        std::vector<int> sorted = tuple;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < count(k); ++i) {
            std::vector<int> other = simplices[static_cast<size_t>(k)][static_cast<size_t>(i)];
            std::sort(other.begin(), other.end());
            if (other == sorted) return i;
        }
        return -1;
    }
};

/// Cochain of a fixed degree with values in Q^coeff_dim, one value per
/// simplex at its canonical pointing. Rotating the pointing one step along
/// the cyclic order multiplies the value by (-1)^d.
struct Cochain {
    int degree = 0;
    int coeff_dim = 1;
    std::vector<std::vector<Rational>> values;  // [simplexIndex][coefficient coordinate]
};

inline Cochain zero_cochain(const BuildingComplex& bc, int degree, int coeff_dim = 1) {
    Cochain c;
    c.degree = degree;
    c.coeff_dim = coeff_dim;
    c.values.assign(static_cast<size_t>(bc.count(degree)),
                    std::vector<Rational>(static_cast<size_t>(coeff_dim)));
    return c;
}

namespace detail {

/// Lifted row bases of all proper nonzero subspaces of F_p^(d+1), via
/// row-echelon enumeration.
inline std::vector<std::vector<std::vector<long long>>> proper_subspaces(int d, long long p) {
    int n = d + 1;
    std::vector<std::vector<std::vector<long long>>> out;
    for (int k = 1; k <= d; ++k) {
        std::vector<int> comb(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
        while (true) {
            std::vector<std::pair<int, int>> free_pos;
            for (int r = 0; r < k; ++r)
                for (int c = comb[static_cast<size_t>(r)] + 1; c < n; ++c) {
                    bool is_pivot_col = false;
                    for (int rr = 0; rr < k; ++rr)
                        if (comb[static_cast<size_t>(rr)] == c) is_pivot_col = true;
                    if (!is_pivot_col) free_pos.push_back({r, c});
                }
            long long total = 1;
            for (size_t i = 0; i < free_pos.size(); ++i) total *= p;
            for (long long code = 0; code < total; ++code) {
                std::vector<std::vector<long long>> rows(
                    static_cast<size_t>(k), std::vector<long long>(static_cast<size_t>(n), 0));
                for (int r = 0; r < k; ++r)
                    rows[static_cast<size_t>(r)][static_cast<size_t>(comb[static_cast<size_t>(r)])] = 1;
                long long rem = code;
                for (const auto& [r, c] : free_pos) {
                    rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = rem % p;
                    rem /= p;
                }
                out.push_back(rows);
            }
            int i = k - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return out;
}

inline std::vector<LatticeClass> neighbors(const LatticeClass& lc) {
    int n = lc.d + 1;
    std::vector<LatticeClass> out;
    for (const auto& rows : proper_subspaces(lc.d, lc.p)) {
        Mat<Rational> gen(n, static_cast<int>(rows.size()) + n);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int i = 0; i < n; ++i) {
                Rational v(0);
                for (int c = 0; c < n; ++c)
                    v += Rational(rows[r][static_cast<size_t>(c)]) * lc.basis(i, c);
                gen(i, static_cast<int>(r)) = v;
            }
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < n; ++i)
                gen(i, static_cast<int>(rows.size()) + c) = Rational(lc.p) * lc.basis(i, c);
        out.push_back(canonical_lattice(lc.d, lc.p, gen));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// The ball of the given radius around the standard vertex: all vertices
/// within that graph distance, with every simplex supported on them. Number
/// of chambers through a panel is q+1, which marks interior panels.
inline BuildingComplex ball(int d, long long p, int radius) {
    if (d > 2 || p > 5 || radius > 2)
        throw std::invalid_argument("ball bounds exceeded: need d <= 2, p <= 5, radius <= 2");
    if (!FieldParams::is_prime(p)) throw std::invalid_argument("p must be prime");
    BuildingComplex bc;
    bc.d = d;
    bc.p = p;
    std::map<LatticeClass, int> index;
    std::vector<LatticeClass> verts{standard_lattice(d, p)};
    index.emplace(verts[0], 0);
    std::vector<int> frontier{0};
    for (int step = 0; step < radius; ++step) {
        std::vector<int> next;
        for (int vi : frontier)
            for (const auto& nb : detail::neighbors(verts[static_cast<size_t>(vi)])) {
                if (index.count(nb)) continue;
                int id = static_cast<int>(verts.size());
                index.emplace(nb, id);
                verts.push_back(nb);
                next.push_back(id);
            }
        frontier = next;
    }
    bc.lattices = verts;
    bc.vertex_count = static_cast<int>(verts.size());
    bc.simplices.assign(static_cast<size_t>(d) + 1, {});
    for (int v = 0; v < bc.vertex_count; ++v) bc.simplices[0].push_back({v});
    // adjacency lists from the neighbor enumeration; the building is the
    // clique complex of its incidence graph
    std::vector<std::vector<int>> adj(static_cast<size_t>(bc.vertex_count));
    for (int v = 0; v < bc.vertex_count; ++v)
        for (const auto& nb : detail::neighbors(verts[static_cast<size_t>(v)])) {
            auto it = index.find(nb);
            if (it != index.end() && it->second != v) adj[static_cast<size_t>(v)].push_back(it->second);
        }
    for (auto& lst : adj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    auto order_by_type = [&](std::vector<int> tuple) {
        std::sort(tuple.begin(), tuple.end(), [&](int x, int y) {
            return verts[static_cast<size_t>(x)].type() < verts[static_cast<size_t>(y)].type();
        });
        return tuple;
    };
    for (int a = 0; a < bc.vertex_count; ++a)
        for (int b : adj[static_cast<size_t>(a)])
            if (b > a) bc.simplices[1].push_back(order_by_type({a, b}));
    if (d >= 2) {
        for (const auto& edge : bc.simplices[1]) {
            int a = std::min(edge[0], edge[1]), b = std::max(edge[0], edge[1]);
            std::vector<int> common;
            std::set_intersection(adj[static_cast<size_t>(a)].begin(), adj[static_cast<size_t>(a)].end(),
                                  adj[static_cast<size_t>(b)].begin(), adj[static_cast<size_t>(b)].end(),
                                  std::back_inserter(common));
            for (int c : common)
                if (c > b) bc.simplices[2].push_back(order_by_type({a, b, c}));
        }
    }
    // interior panels: q+1 chambers through each (d-1)-simplex of the full building
    for (int i = 0; i < bc.count(d - 1); ++i) {
        const auto& panel = bc.simplices[static_cast<size_t>(d - 1)][static_cast<size_t>(i)];
        int cofaces = 0;
        for (const auto& top : bc.simplices[static_cast<size_t>(d)]) {
            bool contains = true;
            for (int v : panel)
                if (std::find(top.begin(), top.end(), v) == top.end()) contains = false;
            if (contains) ++cofaces;
        }
        if (cofaces == p + 1) bc.interior_panel.push_back(i);
    }
    return bc;
}

/// Cycle graph on n vertices as an abstract 1-dimensional complex; every
/// vertex is interior.
inline BuildingComplex cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
    BuildingComplex bc;
    bc.d = 1;
    bc.vertex_count = n;
    bc.simplices.assign(2, {});
    for (int v = 0; v < n; ++v) bc.simplices[0].push_back({v});
    for (int v = 0; v < n; ++v) bc.simplices[1].push_back({v, (v + 1) % n});
    for (int v = 0; v < n; ++v) bc.interior_panel.push_back(v);
    return bc;
}

/// Path graph, for contrast: endpoints are boundary panels.
inline BuildingComplex path_graph(int n) {
    if (n < 2) throw std::invalid_argument("path graph needs at least 2 vertices");
    BuildingComplex bc;
    bc.d = 1;
    bc.vertex_count = n;
    bc.simplices.assign(2, {});
    for (int v = 0; v < n; ++v) bc.simplices[0].push_back({v});
    for (int v = 0; v + 1 < n; ++v) bc.simplices[1].push_back({v, v + 1});
    for (int v = 1; v + 1 < n; ++v) bc.interior_panel.push_back(v);
    return bc;
}

namespace detail {

/// Pointed evaluation: value at the pointing that is `rot` steps along the
/// cyclic order from the canonical one picks up (-1)^(d * rot).
inline Rational pointed_sign(int d, int rot) { return (d * rot) % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace detail

/// Coboundary with alternating signs over the faces; face values are read at
/// the pointing inherited from the canonical pointing of the cofaced simplex.
inline Cochain coboundary(const Cochain& c, const BuildingComplex& bc) {
    if (c.degree >= bc.d) throw std::invalid_argument("degree overflow in coboundary");
    Cochain out = zero_cochain(bc, c.degree + 1, c.coeff_dim);
    int k = c.degree + 1;
    for (int si = 0; si < bc.count(k); ++si) {
        const auto& tuple = bc.simplices[static_cast<size_t>(k)][static_cast<size_t>(si)];
        for (int j = 0; j <= k; ++j) {
            std::vector<int> face;
            for (int t = 0; t <= k; ++t)
                if (t != j) face.push_back(tuple[static_cast<size_t>(t)]);
            int fi = bc.simplex_index(k - 1, face);
            if (fi < 0) continue;  // truncation boundary: missing face carries no value
            const auto& stored = bc.simplices[static_cast<size_t>(k - 1)][static_cast<size_t>(fi)];
            // rotation offset of the inherited pointing (face[0]) inside the stored cyclic order
            int pos = -1;
            for (size_t t = 0; t < stored.size(); ++t)
                if (stored[t] == face[0]) pos = static_cast<int>(t);
            if (pos < 0) throw std::logic_error("face vertex not found");
            Rational sign = detail::pointed_sign(bc.d, pos) * (j % 2 == 0 ? Rational(1) : Rational(-1));
            for (int m = 0; m < c.coeff_dim; ++m)
                out.values[static_cast<size_t>(si)][static_cast<size_t>(m)] +=
                    sign * c.values[static_cast<size_t>(fi)][static_cast<size_t>(m)];
        }
    }
    return out;
}

/// Harmonicity of a top-degree cochain: the pointed sums over cofaces of every
/// interior panel vanish. Complexes whose panels are all boundary are rejected.
inline bool is_harmonic(const Cochain& f, const BuildingComplex& bc) {
    if (f.degree != bc.d) throw std::invalid_argument("harmonicity is a top-degree condition");
    if (bc.interior_panel.empty())
        throw std::invalid_argument("truncation boundary; restrict to interior");
    for (int pi : bc.interior_panel) {
        const auto& panel = bc.simplices[static_cast<size_t>(bc.d - 1)][static_cast<size_t>(pi)];
        for (int v : panel) {
            std::vector<Rational> sum(static_cast<size_t>(f.coeff_dim));
            for (int ti = 0; ti < bc.count(bc.d); ++ti) {
                const auto& top = bc.simplices[static_cast<size_t>(bc.d)][static_cast<size_t>(ti)];
                bool contains = true;
                for (int pv : panel)
                    if (std::find(top.begin(), top.end(), pv) == top.end()) contains = false;
                if (!contains) continue;
                int pos = -1;
                for (size_t t = 0; t < top.size(); ++t)
                    if (top[t] == v) pos = static_cast<int>(t);
                if (pos < 0) throw std::logic_error("pointing vertex not in coface");
                Rational sign = detail::pointed_sign(bc.d, pos);
                for (int m = 0; m < f.coeff_dim; ++m)
                    sum[static_cast<size_t>(m)] += sign * f.values[static_cast<size_t>(ti)][static_cast<size_t>(m)];
            }
            for (const auto& s : sum)
                if (!s.is_zero()) return false;
        }
    }
    return true;
}

/// Matrix of the coboundary from degree k to k+1 on coordinates
/// (simplex index) x (coefficient coordinate).
inline Mat<Rational> coboundary_matrix(const BuildingComplex& bc, int k, int coeff_dim) {
    int rows = bc.count(k + 1) * coeff_dim;
    int cols = bc.count(k) * coeff_dim;
    Mat<Rational> m(rows, cols);
    for (int fi = 0; fi < bc.count(k); ++fi)
        for (int mcoord = 0; mcoord < coeff_dim; ++mcoord) {
            Cochain e = zero_cochain(bc, k, coeff_dim);
            e.values[static_cast<size_t>(fi)][static_cast<size_t>(mcoord)] = Rational(1);
            Cochain de = coboundary(e, bc);
            for (int si = 0; si < bc.count(k + 1); ++si)
                for (int mm = 0; mm < coeff_dim; ++mm)
                    m(si * coeff_dim + mm, fi * coeff_dim + mcoord) =
                        de.values[static_cast<size_t>(si)][static_cast<size_t>(mm)];
        }
    return m;
}

/// Discrete Hodge decomposition of the top cochain space: harmonic space =
/// kernel of the adjoint of the coboundary, exact space = its image; the two
/// are exact complements. The inner product defaults to the orthonormal one
/// on pointed simplices; a supplied Gram matrix must be positive definite.
struct HodgeDecomposition {
    Mat<Rational> harmonic;  // columns: basis of the harmonic space
    Mat<Rational> exact;     // columns: basis of the coboundary image
};

inline HodgeDecomposition hodge_decompose(const BuildingComplex& bc, int coeff_dim = 1,
                                          const Mat<Rational>* gram = nullptr) {
    int d = bc.d;
    Mat<Rational> delta = coboundary_matrix(bc, d - 1, coeff_dim);
    int n = delta.rows();
    Mat<Rational> g = gram ? *gram : Mat<Rational>::identity(n, Rational(1));
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("inner product shape mismatch");
    if (g != g.transpose() || rank(g) != n) throw std::invalid_argument("degenerate inner product");
    // positive definiteness: leading principal minors positive
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx;
        for (int i = 0; i < k; ++i) idx.push_back(i);
        Rational minor = determinant(g.submatrix(idx, idx), Rational(1));
        if (!(minor > Rational(0))) throw std::invalid_argument("degenerate inner product");
    }
    HodgeDecomposition out;
    out.exact = image_basis(delta);
    out.harmonic = kernel_basis(delta.transpose() * g, Rational(1));
    // complements exactly
    if (out.exact.cols() + out.harmonic.cols() != n)
        throw std::logic_error("decomposition dimensions do not sum");
    if (rank(Mat<Rational>::hconcat(out.exact, out.harmonic)) != n)
        throw std::logic_error("decomposition is not direct");
    return out;
}

/// The quotient map to top cohomology, restricted to the harmonic space:
/// a square change-of-coordinates matrix that must be invertible.
struct TopCohomologyModel {
    Mat<Rational> quotient_basis;  // columns completing the exact space
    Mat<Rational> map;             // harmonic basis expressed in quotient coordinates
    bool bijective = false;
};

inline TopCohomologyModel res_gamma_model(const BuildingComplex& bc, int coeff_dim = 1,
                                          const Mat<Rational>* gram = nullptr) {
    HodgeDecomposition hd = hodge_decompose(bc, coeff_dim, gram);
    int n = hd.exact.rows();
    // complete the exact basis to a full basis; quotient coordinates are the
    // coefficients on the completing columns
    Mat<Rational> full = hd.exact;
    std::vector<int> extra;
    for (int i = 0; i < n && full.cols() < n; ++i) {
        Mat<Rational> e(n, 1);
        e(i, 0) = Rational(1);
        Mat<Rational> cand = Mat<Rational>::hconcat(full, e);
        if (rank(cand) == cand.cols()) {
            full = cand;
            extra.push_back(i);
        }
    }
    TopCohomologyModel out;
    out.quotient_basis = Mat<Rational>(n, static_cast<int>(extra.size()));
    for (size_t k = 0; k < extra.size(); ++k) out.quotient_basis(extra[k], static_cast<int>(k)) = Rational(1);
    // express harmonic columns in the full basis; keep the quotient block
    Mat<Rational> coords;
    if (!solve(full, hd.harmonic, coords, Rational(1))) throw std::logic_error("basis completion failed");
    int q = static_cast<int>(extra.size());
    out.map = Mat<Rational>(q, hd.harmonic.cols());
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < hd.harmonic.cols(); ++j)
            out.map(i, j) = coords(hd.exact.cols() + i, j);
    out.bijective = (q == hd.harmonic.cols()) && (rank(out.map) == q);
    return out;
}

/// Applies the quotient map to a single harmonic cochain.
inline std::vector<Rational> res_gamma_class(const BuildingComplex& bc, const Cochain& f,
                                             int coeff_dim = 1) {
    TopCohomologyModel model = res_gamma_model(bc, coeff_dim);
    HodgeDecomposition hd = hodge_decompose(bc, coeff_dim);
    int n = hd.exact.rows();
    Mat<Rational> vec(n, 1);
    for (int si = 0; si < bc.count(bc.d); ++si)
        for (int m = 0; m < coeff_dim; ++m)
            vec(si * coeff_dim + m, 0) = f.values[static_cast<size_t>(si)][static_cast<size_t>(m)];
    Mat<Rational> full = Mat<Rational>::hconcat(hd.exact, model.quotient_basis);
    Mat<Rational> coords;
    if (!solve(full, vec, coords, Rational(1))) throw std::logic_error("vector outside the space");
    std::vector<Rational> out;
    for (int i = 0; i < model.quotient_basis.cols(); ++i)
        out.push_back(coords(hd.exact.cols() + i, 0));
    return out;
}

}  // namespace phinforge
