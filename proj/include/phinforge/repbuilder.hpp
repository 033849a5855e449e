#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "phinforge/matrix.hpp"
#include "phinforge/rational.hpp"
#include "phinforge/weights.hpp"

namespace phinforge {

namespace detail {

/// Sparse integer matrix, row-major; entries stay small during projector assembly.
struct SparseInt {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> row;  // (col, value)

    SparseInt() = default;
    SparseInt(int r, int c) : rows(r), cols(c), row(static_cast<size_t>(r)) {}

    static SparseInt identity(int n) {
        SparseInt m(n, n);
        for (int i = 0; i < n; ++i) m.row[static_cast<size_t>(i)].push_back({i, 1});
        return m;
    }

    void add(int r, int c, long long v) {
        if (v == 0) return;
        auto& rw = row[static_cast<size_t>(r)];
        for (auto& e : rw)
            if (e.first == c) {
                e.second += v;
                return;
            }
        rw.push_back({c, v});
    }

    friend SparseInt operator*(const SparseInt& a, const SparseInt& b) {
        SparseInt r(a.rows, b.cols);
        std::vector<long long> acc(static_cast<size_t>(b.cols), 0);
        std::vector<int> touched;
        for (int i = 0; i < a.rows; ++i) {
            touched.clear();
            for (const auto& [k, av] : a.row[static_cast<size_t>(i)])
                for (const auto& [j, bv] : b.row[static_cast<size_t>(k)]) {
                    if (acc[static_cast<size_t>(j)] == 0) touched.push_back(j);
                    acc[static_cast<size_t>(j)] += av * bv;
                }
            for (int j : touched) {
                if (acc[static_cast<size_t>(j)] != 0)
                    r.row[static_cast<size_t>(i)].push_back({j, acc[static_cast<size_t>(j)]});
                acc[static_cast<size_t>(j)] = 0;
            }
        }
        return r;
    }

    bool equals_scaled(const SparseInt& other, long long scale) const {
        if (rows != other.rows || cols != other.cols) return false;
        for (int i = 0; i < rows; ++i) {
            std::map<int, long long> a, b;
            for (const auto& [c, v] : row[static_cast<size_t>(i)])
                if (v != 0) a[c] = v;
            for (const auto& [c, v] : other.row[static_cast<size_t>(i)])
                if (v * scale != 0) b[c] = v * scale;
            if (a != b) return false;
        }
        return true;
    }

    long long trace() const {
        long long t = 0;
        for (int i = 0; i < rows; ++i)
            for (const auto& [c, v] : row[static_cast<size_t>(i)])
                if (c == i) t += v;
        return t;
    }
};

inline void permutations_of(const std::vector<int>& elems, std::vector<std::vector<int>>& out) {
    std::vector<int> perm = elems;
    std::sort(perm.begin(), perm.end());
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline int perm_sign(std::vector<int> p) {
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

}  // namespace detail

/// Irreducible GL(d+1)-module realized as the image of an exact idempotent
/// projector inside the r-th tensor power of the standard representation.
struct Irrep {
    HighestWeight lambda;
    long long r = 0;            // tensor power
    int ambient_dim = 1;        // (d+1)^r
    long long dim = 1;          // rank of the projector, equals the Weyl dimension
    Mat<Rational> projector;    // ambient x ambient, idempotent
    Mat<Rational> basis;        // ambient x dim, columns span the image
};

/// Weyl dimension formula: prod_{0<=i<j<=d} (lambda_i - lambda_j + j - i)/(j - i).
inline long long weyl_dim(const HighestWeight& w) {
    Rational prod(1);
    for (int i = 0; i <= w.d; ++i)
        for (int j = i + 1; j <= w.d; ++j)
            prod *= Rational(w.lambda[static_cast<size_t>(i)] - w.lambda[static_cast<size_t>(j)] + j - i,
                             j - i);
    if (!prod.is_integer()) throw std::logic_error("Weyl dimension not integral");
    return prod.num().to_ll();
}

namespace detail {

/// Standard tableau of shape (lambda_0..lambda_{d-1}) filled column-major:
/// 1..k down the first column, continuing down the next. cells[row] lists the
/// entries of that row, left to right.
struct Tableau {
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> cols;
};

inline Tableau column_major_tableau(const HighestWeight& w) {
    std::vector<long long> shape;
    for (int i = 0; i < w.d; ++i)
        if (w.lambda[static_cast<size_t>(i)] > 0) shape.push_back(w.lambda[static_cast<size_t>(i)]);
    Tableau t;
    if (shape.empty()) return t;
    size_t nrows = shape.size();
    long long ncols = shape[0];
    t.rows.assign(nrows, {});
    t.cols.assign(static_cast<size_t>(ncols), {});
    int next = 1;
    for (long long c = 0; c < ncols; ++c)
        for (size_t r = 0; r < nrows; ++r) {
            if (shape[r] <= c) continue;
            t.rows[r].push_back(next);
            t.cols[static_cast<size_t>(c)].push_back(next);
            ++next;
        }
    return t;
}

/// Number of standard tableaux of the shape, by the hook length formula.
inline long long hook_count(const HighestWeight& w) {
    std::vector<long long> shape;
    for (int i = 0; i < w.d; ++i)
        if (w.lambda[static_cast<size_t>(i)] > 0) shape.push_back(w.lambda[static_cast<size_t>(i)]);
    long long r = 0;
    for (long long s : shape) r += s;
    if (r == 0) return 1;
    Rational result(1);
    for (long long k = 1; k <= r; ++k) result *= Rational(k);
    for (size_t i = 0; i < shape.size(); ++i)
        for (long long j = 0; j < shape[i]; ++j) {
            long long arm = shape[i] - j - 1;
            long long leg = 0;
            for (size_t k = i + 1; k < shape.size(); ++k)
                if (shape[k] > j) ++leg;
            result /= Rational(arm + leg + 1);
        }
    if (!result.is_integer()) throw std::logic_error("hook count not integral");
    return result.num().to_ll();
}

/// Matrix of sigma acting on the r-th tensor power by permuting factors:
/// e_{x_1...x_r} -> e_{y} with y_{sigma(t)} = x_t, indices in base d+1.
inline SparseInt tensor_perm_matrix(const std::vector<int>& sigma, int base, int r, long long sign) {
    int dim = 1;
    for (int i = 0; i < r; ++i) dim *= base;
    SparseInt m(dim, dim);
    std::vector<int> digits(static_cast<size_t>(r));
    for (int x = 0; x < dim; ++x) {
        int tmp = x;
        for (int t = r - 1; t >= 0; --t) {
            digits[static_cast<size_t>(t)] = tmp % base;
            tmp /= base;
        }
        int y = 0;
        // position sigma(t) receives the digit from position t (entries 1-based)
        std::vector<int> out(static_cast<size_t>(r));
        for (int t = 0; t < r; ++t) out[static_cast<size_t>(sigma[static_cast<size_t>(t)] - 1)] = digits[static_cast<size_t>(t)];
        for (int t = 0; t < r; ++t) y = y * base + out[static_cast<size_t>(t)];
        m.add(y, x, sign);
    }
    return m;
}

/// Group sum over the product of symmetric groups on the given index blocks,
/// optionally sign-weighted. Blocks are disjoint subsets of {1..r}.
inline SparseInt group_sum(const std::vector<std::vector<int>>& blocks, int base, int r, bool signed_sum,
                           long long work_bound) {
    int dim = 1;
    for (int i = 0; i < r; ++i) dim *= base;
    // enumerate the product group as tuples of per-block permutations
    std::vector<std::vector<std::vector<int>>> per_block;
    long long total = 1;
    for (const auto& blk : blocks) {
        std::vector<std::vector<int>> perms;
        permutations_of(blk, perms);
        total *= static_cast<long long>(perms.size());
        if (total > work_bound)
            throw std::invalid_argument("size bound exceeded: symmetrizer needs " + std::to_string(total) +
                                        " group elements");
        per_block.push_back(std::move(perms));
    }
    if (per_block.empty()) return SparseInt::identity(dim);
    SparseInt sum(dim, dim);
    std::vector<size_t> idx(per_block.size(), 0);
    std::vector<int> sigma(static_cast<size_t>(r));
    while (true) {
        for (int t = 1; t <= r; ++t) sigma[static_cast<size_t>(t - 1)] = t;
        long long sign = 1;
        for (size_t b = 0; b < per_block.size(); ++b) {
            const auto& blk = blocks[b];
            std::vector<int> sorted = blk;
            std::sort(sorted.begin(), sorted.end());
            const auto& perm = per_block[b][idx[b]];
            for (size_t k = 0; k < sorted.size(); ++k)
                sigma[static_cast<size_t>(sorted[k] - 1)] = perm[k];
            if (signed_sum) sign *= perm_sign(perm);
        }
        SparseInt pm = tensor_perm_matrix(sigma, base, r, sign);
        for (int i = 0; i < dim; ++i)
            for (const auto& [c, v] : pm.row[static_cast<size_t>(i)]) sum.add(i, c, v);
        size_t b = 0;
        for (; b < idx.size(); ++b) {
            if (++idx[b] < per_block[b].size()) break;
            idx[b] = 0;
        }
        if (b == idx.size()) break;
    }
    return sum;
}

}  // namespace detail

/// Builds the irreducible module of the given highest weight inside the
/// r-th tensor power of the standard representation: applies the row
/// symmetrizer and signed column sum of the column-major standard tableau,
/// normalized by the hook-length count so the projector is exactly idempotent.
inline Irrep build_irrep(const HighestWeight& w, long long size_bound = 4096,
                         long long work_bound = 100000) {
    long long r = r_of(w);
    int base = w.d + 1;
    long long ambient = 1;
    for (long long i = 0; i < r; ++i) {
        ambient *= base;
        if (ambient > size_bound)
            throw std::invalid_argument("size bound exceeded: tensor power needs dimension " +
                                        std::to_string(ambient) + " > bound " + std::to_string(size_bound));
    }
    Irrep rep;
    rep.lambda = w;
    rep.r = r;
    rep.ambient_dim = static_cast<int>(ambient);
    if (r == 0) {
        rep.dim = 1;
        rep.projector = Mat<Rational>::identity(1, Rational(1));
        rep.basis = Mat<Rational>::identity(1, Rational(1));
        return rep;
    }

    detail::Tableau tab = detail::column_major_tableau(w);
    detail::SparseInt rowsum = detail::group_sum(tab.rows, base, static_cast<int>(r), false, work_bound);
    detail::SparseInt colsum = detail::group_sum(tab.cols, base, static_cast<int>(r), true, work_bound);
    detail::SparseInt m = rowsum * colsum;

    long long fcount = detail::hook_count(w);
    long long rfact = 1;
    for (long long k = 2; k <= r; ++k) rfact *= k;
    if (rfact % fcount != 0) throw std::logic_error("hook count does not divide r!");
    long long norm = rfact / fcount;  // m / norm is idempotent

    detail::SparseInt m2 = m * m;
    if (!m2.equals_scaled(m, norm)) throw std::logic_error("projector is not idempotent");

    long long tr = m.trace();
    if (tr % norm != 0) throw std::logic_error("projector trace not integral");
    rep.dim = tr / norm;
    long long expected = weyl_dim(w);
    if (rep.dim != expected)
        throw std::logic_error("projector rank " + std::to_string(rep.dim) +
                               " != Weyl dimension " + std::to_string(expected));

    rep.projector = Mat<Rational>(rep.ambient_dim, rep.ambient_dim);
    Rational inv_norm(1, norm);
    for (int i = 0; i < rep.ambient_dim; ++i)
        for (const auto& [c, v] : m.row[static_cast<size_t>(i)])
            rep.projector(i, c) = Rational(v) * inv_norm;
    rep.basis = image_basis(rep.projector);
    if (rep.basis.cols() != rep.dim) throw std::logic_error("image basis rank mismatch");
    return rep;
}

/// Dimensions of the grading by the leading torus coordinate: a tensor
/// monomial with c occurrences of index 0 sits in level s = r - c.
using WeightGrading = std::map<long long, long long>;

inline WeightGrading weight_grading(const Irrep& rep) {
    int base = rep.lambda.d + 1;
    std::map<long long, std::vector<int>> rows_by_level;
    for (int x = 0; x < rep.ambient_dim; ++x) {
        int tmp = x, zeros = 0;
        for (long long t = 0; t < rep.r; ++t) {
            if (tmp % base == 0) ++zeros;
            tmp /= base;
        }
        rows_by_level[rep.r - zeros].push_back(x);
    }
    WeightGrading g;
    long long total = 0;
    for (const auto& [s, rows] : rows_by_level) {
        std::vector<int> allcols(static_cast<size_t>(rep.basis.cols()));
        std::iota(allcols.begin(), allcols.end(), 0);
        long long dim = rank(rep.basis.submatrix(rows, allcols));
        if (dim > 0) {
            g[s] = dim;
            total += dim;
        }
    }
    if (total != rep.dim) throw std::logic_error("grading dimensions do not sum to dim");
    return g;
}

/// Basis of f^s = span of the levels >= s, as columns in the ambient space.
inline Mat<Rational> filtration_step_basis(const Irrep& rep, long long s) {
    int base = rep.lambda.d + 1;
    std::vector<int> keep_rows;
    for (int x = 0; x < rep.ambient_dim; ++x) {
        int tmp = x, zeros = 0;
        for (long long t = 0; t < rep.r; ++t) {
            if (tmp % base == 0) ++zeros;
            tmp /= base;
        }
        if (rep.r - zeros >= s) keep_rows.push_back(x);
    }
    // intersection of the image with the monomial levels >= s; the projector
    // commutes with the torus action, so restricting rows of the basis and
    // re-extracting a column basis computes it
    Mat<Rational> restricted(rep.ambient_dim, rep.basis.cols());
    std::vector<bool> keep(static_cast<size_t>(rep.ambient_dim), false);
    for (int x : keep_rows) keep[static_cast<size_t>(x)] = true;
    // P commutes with the level projection, so level-projecting the image
    // stays inside the image; its span is exactly f^s
    for (int i = 0; i < rep.ambient_dim; ++i)
        if (keep[static_cast<size_t>(i)])
            for (int j = 0; j < rep.basis.cols(); ++j) restricted(i, j) = rep.basis(i, j);
    return image_basis(restricted);
}

/// The matrix u(z): first row (1, -z_1, ..., -z_d), identity below.
inline Mat<Rational> u_bar(int d, const std::vector<Rational>& z) {
    if (static_cast<int>(z.size()) != d) throw std::invalid_argument("z needs d entries");
    Mat<Rational> m = Mat<Rational>::identity(d + 1, Rational(1));
    for (int j = 1; j <= d; ++j) m(0, j) = -z[static_cast<size_t>(j - 1)];
    return m;
}

/// Dimensions of span(u(z)^{tensor r} . f^s) for s from r-lambda_0 to r+1.
/// Independent of z since u(z) is invertible; computed by explicit rank.
inline std::map<long long, long long> twist_filtration(const Irrep& rep, const std::vector<Rational>& z) {
    int d = rep.lambda.d;
    Mat<Rational> u = u_bar(d, z);
    // tensor power of u
    Mat<Rational> ur = Mat<Rational>::identity(1, Rational(1));
    for (long long t = 0; t < rep.r; ++t) {
        Mat<Rational> next(ur.rows() * (d + 1), ur.cols() * (d + 1));
        for (int i = 0; i < ur.rows(); ++i)
            for (int j = 0; j < ur.cols(); ++j) {
                if (ur(i, j).is_zero()) continue;
                for (int a = 0; a <= d; ++a)
                    for (int b = 0; b <= d; ++b) {
                        if (u(a, b).is_zero()) continue;
                        next(i * (d + 1) + a, j * (d + 1) + b) = ur(i, j) * u(a, b);
                    }
            }
        ur = next;
    }
    std::map<long long, long long> dims;
    for (long long s = rep.r - rep.lambda.lambda[0]; s <= rep.r + 1; ++s) {
        Mat<Rational> fs = filtration_step_basis(rep, s);
        dims[s] = fs.cols() == 0 ? 0 : rank(ur * fs);
    }
    return dims;
}

}  // namespace phinforge
