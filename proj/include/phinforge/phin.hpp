#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phinforge/matrix.hpp"
#include "phinforge/scalars.hpp"

namespace phinforge {

/// A chain of subspaces, each given by a column basis in the ambient space.
/// Decreasing chains are indexed 0..len-1 with level(i) containing level(i+1).
struct Filtration {
    bool decreasing = true;
    std::vector<long long> levels;            // filtration indices, strictly monotone
    std::vector<Mat<Rational>> bases;         // one basis per level

    int length() const { return static_cast<int>(levels.size()); }
};

/// Finite-dimensional module with bijective Frobenius matrix phi, nilpotent N
/// and a split filtration recorded as one integer degree per basis vector.
/// The semilinearity of phi is bookkept purely through iterate counts.
struct FilteredPhiNModule {
    FieldParams params;
    int dim = 0;
    ScalarMatrix phi;
    Mat<Rational> nmat;
    std::vector<long long> hodge;                    // degree per basis vector
    std::vector<std::array<int, 4>> labels;          // optional (i, j, s, delta)
    bool twisted = false;                            // built by the twist recipe

    bool has_labels() const { return !labels.empty(); }
};

namespace detail {

inline ScalarMatrix promote(const Mat<Rational>& m, FieldParams fp) {
    ScalarMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = PiScalar(fp, m(i, j));
    return r;
}

inline bool is_nilpotent(const Mat<Rational>& n) {
    Mat<Rational> p = n;
    for (int k = 1; k < n.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * n;
    }
    return p.is_zero();
}

}  // namespace detail

/// Validates the structure relations; throws on violation.
inline void validate_module(const FilteredPhiNModule& m) {
    if (m.phi.rows() != m.dim || m.phi.cols() != m.dim) throw std::invalid_argument("phi shape mismatch");
    if (m.nmat.rows() != m.dim || m.nmat.cols() != m.dim) throw std::invalid_argument("N shape mismatch");
    if (static_cast<int>(m.hodge.size()) != m.dim) throw std::invalid_argument("hodge degree count mismatch");
    if (m.has_labels() && static_cast<int>(m.labels.size()) != m.dim)
        throw std::invalid_argument("label count mismatch");
    if (determinant(m.phi, PiScalar::one(m.params)).is_zero())
        throw std::invalid_argument("non-bijective Frobenius");
    if (!detail::is_nilpotent(m.nmat)) throw std::invalid_argument("N is not nilpotent");
    ScalarMatrix n = detail::promote(m.nmat, m.params);
    ScalarMatrix lhs = n * m.phi;
    ScalarMatrix rhs = (m.phi * n).scaled(PiScalar::p_pow(m.params, 1));
    if (lhs != rhs) throw std::invalid_argument("N phi != p phi N");
}

/// t_N = val_p(det phi).
inline Rational t_N(const FilteredPhiNModule& m) {
    PiScalar det = determinant(m.phi, PiScalar::one(m.params));
    auto v = val_p(det);
    if (!v) throw std::domain_error("singular phi");
    return *v;
}

/// t_H = sum of the filtration degrees.
inline long long t_H(const FilteredPhiNModule& m) {
    long long s = 0;
    for (long long h : m.hodge) s += h;
    return s;
}

/// Basis of the filtration step F^j = span of basis vectors of degree >= j.
inline Mat<Rational> hodge_step_basis(const FilteredPhiNModule& m, long long j) {
    std::vector<int> cols;
    for (int i = 0; i < m.dim; ++i)
        if (m.hodge[static_cast<size_t>(i)] >= j) cols.push_back(i);
    Mat<Rational> b(m.dim, static_cast<int>(cols.size()));
    for (size_t k = 0; k < cols.size(); ++k) b(cols[k], static_cast<int>(k)) = Rational(1);
    return b;
}

/// The monodromy filtration of a nilpotent operator: the unique increasing
/// filtration with N M_k inside M_{k-2} and N^k an isomorphism gr_k -> gr_{-k}.
/// Computed as M_k = sum over j >= 0 of ker(N^{k+j+1}) meet im(N^j).
inline Filtration monodromy_filtration(const Mat<Rational>& nmat) {
    if (nmat.rows() != nmat.cols()) throw std::invalid_argument("N must be square");
    if (!detail::is_nilpotent(nmat)) throw std::invalid_argument("non-nilpotent input");
    int n = nmat.rows();
    Rational one(1);
    // powers of N, kernels and images
    std::vector<Mat<Rational>> pow{Mat<Rational>::identity(n, one)};
    for (int k = 1; k <= n + 1; ++k) pow.push_back(pow.back() * nmat);
    auto ker_of = [&](int k) {
        if (k <= 0) return Mat<Rational>(n, 0);
        if (k > n) return Mat<Rational>::identity(n, one);
        return kernel_basis(pow[static_cast<size_t>(k)], one);
    };
    auto im_of = [&](int k) {
        if (k <= 0) return Mat<Rational>::identity(n, one);
        if (k > n) return Mat<Rational>(n, 0);
        return image_basis(pow[static_cast<size_t>(k)]);
    };
    Filtration f;
    f.decreasing = false;
    for (int k = -n; k <= n; ++k) {
        Mat<Rational> acc(n, 0);
        for (int j = 0; j <= n; ++j) {
            if (k + j + 1 <= 0) continue;
            Mat<Rational> piece = span_intersection(ker_of(k + j + 1), im_of(j), one);
            if (piece.cols() == 0) continue;
            acc = image_basis(Mat<Rational>::hconcat(acc, piece));
        }
        f.levels.push_back(k);
        f.bases.push_back(acc);
    }
    // trim constant tails: keep the range where the filtration actually moves
    while (f.bases.size() > 1 && f.bases.front().cols() == 0 && f.bases[1].cols() == 0) {
        f.bases.erase(f.bases.begin());
        f.levels.erase(f.levels.begin());
    }
    while (f.bases.size() > 1 && f.bases.back().cols() == n &&
           f.bases[f.bases.size() - 2].cols() == n) {
        f.bases.pop_back();
        f.levels.pop_back();
    }
    return f;
}

/// Graded dimensions by level; levels are listed in increasing index order.
inline std::map<long long, long long> graded_dims(const Filtration& f) {
    std::map<long long, long long> g;
    for (int i = 0; i < f.length(); ++i) {
        long long cur = f.bases[static_cast<size_t>(i)].cols();
        long long next = i + 1 < f.length() ? f.bases[static_cast<size_t>(i) + 1].cols() : 0;
        long long prev = i > 0 ? f.bases[static_cast<size_t>(i) - 1].cols() : 0;
        long long delta = f.decreasing ? cur - next : cur - prev;
        if (delta != 0) g[f.levels[static_cast<size_t>(i)]] = delta;
    }
    return g;
}

/// Purity: F^r = image(N^r) = kernel(N^{d+1-r}) for all 0 <= r <= d+1,
/// where F is the given decreasing filtration. Returns the first violated r.
inline std::pair<bool, int> purity_check(const FilteredPhiNModule& m,
                                         const std::vector<Mat<Rational>>& weight_filtration,
                                         int d) {
    if (static_cast<int>(weight_filtration.size()) != d + 2)
        throw std::invalid_argument("weight filtration must list F^0..F^{d+1}");
    Rational one(1);
    Mat<Rational> pow = Mat<Rational>::identity(m.dim, one);
    std::vector<Mat<Rational>> npow{pow};
    for (int k = 1; k <= d + 1; ++k) npow.push_back(npow.back() * m.nmat);
    for (int r = 0; r <= d + 1; ++r) {
        Mat<Rational> img = image_basis(npow[static_cast<size_t>(r)]);
        Mat<Rational> ker = kernel_basis(npow[static_cast<size_t>(d + 1 - r)], one);
        const Mat<Rational>& fr = weight_filtration[static_cast<size_t>(r)];
        if (!same_span(fr, img) || !same_span(fr, ker)) return {false, r};
    }
    return {true, -1};
}

/// Verdict from the weak-admissibility checker.
struct AdmissibilityReport {
    bool admissible = false;
    bool complete_class = false;          // true when the adapted-basis class is exhaustive
    std::vector<int> witness;             // basis indices of a violating subobject
    std::string note;
};

namespace detail {

/// Enumerates subsets of {0..n-1} closed under succ (successor-closed sets),
/// calling fn on each nonempty one. Budget counts emitted sets.
template <class Fn>
inline void enumerate_closed_subsets(const std::vector<std::vector<int>>& succ, long long budget, Fn fn) {
    int n = static_cast<int>(succ.size());
    // closure of each singleton
    std::vector<std::vector<int>> closure(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<bool> mark(static_cast<size_t>(n), false);
        std::vector<int> stack{v};
        mark[static_cast<size_t>(v)] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            closure[static_cast<size_t>(v)].push_back(x);
            for (int y : succ[static_cast<size_t>(x)])
                if (!mark[static_cast<size_t>(y)]) {
                    mark[static_cast<size_t>(y)] = true;
                    stack.push_back(y);
                }
        }
    }
    long long emitted = 0;
    std::vector<int> state(static_cast<size_t>(n), 0);  // 0 undecided, 1 in, -1 out
    std::vector<int> members;
    auto rec = [&](auto&& self, int v) -> void {
        while (v < n && state[static_cast<size_t>(v)] != 0) ++v;
        if (v == n) {
            if (!members.empty()) {
                if (++emitted > budget)
                    throw std::domain_error("enumeration budget exceeded: " + std::to_string(budget) +
                                            " subobjects");
                std::vector<int> sorted = members;
                std::sort(sorted.begin(), sorted.end());
                fn(sorted);
            }
            return;
        }
        // include v: pull in its closure unless blocked by an excluded vertex
        bool blocked = false;
        for (int x : closure[static_cast<size_t>(v)])
            if (state[static_cast<size_t>(x)] == -1) { blocked = true; break; }
        if (!blocked) {
            std::vector<int> added;
            for (int x : closure[static_cast<size_t>(v)])
                if (state[static_cast<size_t>(x)] == 0) {
                    state[static_cast<size_t>(x)] = 1;
                    added.push_back(x);
                    members.push_back(x);
                }
            self(self, v + 1);
            for (int x : added) {
                state[static_cast<size_t>(x)] = 0;
                members.pop_back();
            }
        }
        // exclude v
        state[static_cast<size_t>(v)] = -1;
        self(self, v + 1);
        state[static_cast<size_t>(v)] = 0;
    };
    rec(rec, 0);
}

}  // namespace detail

/// Weak admissibility: t_H = t_N on the whole module and t_H <= t_N on every
/// subobject spanned by a subset of the adapted basis closed under phi and N,
/// extended by any user-supplied subspaces. The adapted-basis class is
/// exhaustive when phi is monomial and N maps basis vectors to multiples of
/// basis vectors; otherwise the verdict is class-restricted.
inline AdmissibilityReport is_weakly_admissible(
    const FilteredPhiNModule& m,
    const std::vector<Mat<Rational>>& extra_subobjects = {},
    long long budget = 1000000) {
    AdmissibilityReport rep;
    Rational tn = t_N(m);
    Rational th(t_H(m));
    if (th != tn) {
        rep.admissible = false;
        rep.witness.resize(static_cast<size_t>(m.dim));
        for (int i = 0; i < m.dim; ++i) rep.witness[static_cast<size_t>(i)] = i;
        rep.note = "t_H != t_N on the full module";
        return rep;
    }

    // successor graph on basis indices: supports of phi- and N-columns
    bool monomial = true;
    std::vector<std::vector<int>> succ(static_cast<size_t>(m.dim));
    for (int c = 0; c < m.dim; ++c) {
        int nonzero = 0;
        for (int r = 0; r < m.dim; ++r) {
            if (!m.phi(r, c).is_zero()) {
                succ[static_cast<size_t>(c)].push_back(r);
                ++nonzero;
            }
        }
        if (nonzero != 1) monomial = false;
        int nn = 0;
        for (int r = 0; r < m.dim; ++r)
            if (!m.nmat(r, c).is_zero()) {
                succ[static_cast<size_t>(c)].push_back(r);
                ++nn;
            }
        if (nn > 1) monomial = false;
    }
    rep.complete_class = monomial;
    if (!monomial) rep.note = "class-restricted verdict: phi or N not adapted to the basis";

    bool ok = true;
    std::vector<int> witness;
    detail::enumerate_closed_subsets(succ, budget, [&](const std::vector<int>& subset) {
        if (!ok) return;
        // t_N of the restriction: determinant of the phi-submatrix
        ScalarMatrix sub = m.phi.submatrix(subset, subset);
        PiScalar det = determinant(sub, PiScalar::one(m.params));
        auto v = val_p(det);
        if (!v) return;  // phi not injective on the span: not a subobject over the field
        Rational sub_tn = *v;
        long long sub_th = 0;
        for (int i : subset) sub_th += m.hodge[static_cast<size_t>(i)];
        if (Rational(sub_th) > sub_tn) {
            ok = false;
            witness = subset;
        }
    });
    if (ok) {
        Rational one_r(1);
        PiScalar one_pi = PiScalar::one(m.params);
        for (const auto& w : extra_subobjects) {
            ScalarMatrix wp = detail::promote(w, m.params);
            // phi- and N-stability
            ScalarMatrix x;
            if (!solve(wp, m.phi * wp, x, one_pi)) continue;
            Mat<Rational> y;
            if (!solve(w, m.nmat * w, y, one_r)) continue;
            auto v = val_p(determinant(x, one_pi));
            if (!v) continue;
            // t_H of the induced filtration: lo*dim(W) + sum_{j>lo} dim(W meet F^j)
            long long lo = *std::min_element(m.hodge.begin(), m.hodge.end());
            long long hi = *std::max_element(m.hodge.begin(), m.hodge.end());
            long long th_w = lo * w.cols();
            for (long long j = lo + 1; j <= hi; ++j)
                th_w += span_intersection(w, hodge_step_basis(m, j), one_r).cols();
            if (Rational(th_w) > *v) {
                ok = false;
                witness.clear();
                break;
            }
        }
    }
    rep.admissible = ok;
    rep.witness = witness;
    if (!ok && rep.note.empty()) rep.note = "violating subobject found";
    return rep;
}

/// One orthogonality requirement: step F^a of m pairs to zero with step F^b of
/// mdual, and the induced pairing F^a x (dual / F^b) is perfect. Component
/// selectors restrict to basis vectors with the given (i, delta); -1 matches all.
struct PairingJump {
    int i = -1;
    int delta = -1;
    long long a = 0;
    long long b = 0;
};

inline bool verify_pairing(const FilteredPhiNModule& m, const FilteredPhiNModule& mdual,
                           const ScalarMatrix& pairing, const std::vector<PairingJump>& jumps) {
    if (pairing.rows() != m.dim || pairing.cols() != mdual.dim)
        throw std::invalid_argument("pairing dimension mismatch");
    PiScalar one = PiScalar::one(m.params);
    // global nondegeneracy
    if (rank(pairing) != m.dim || m.dim != mdual.dim) return false;
    for (const auto& jump : jumps) {
        auto select = [&](const FilteredPhiNModule& mod, long long level) {
            std::vector<int> cols;
            for (int v = 0; v < mod.dim; ++v) {
                if (mod.hodge[static_cast<size_t>(v)] < level) continue;
                if (jump.i >= 0 && mod.has_labels() && mod.labels[static_cast<size_t>(v)][0] != jump.i)
                    continue;
                if (jump.delta >= 0 && mod.has_labels() &&
                    mod.labels[static_cast<size_t>(v)][3] != jump.delta)
                    continue;
                cols.push_back(v);
            }
            return cols;
        };
        auto component = [&](const FilteredPhiNModule& mod) {
            std::vector<int> cols;
            for (int v = 0; v < mod.dim; ++v) {
                if (jump.i >= 0 && mod.has_labels() && mod.labels[static_cast<size_t>(v)][0] != jump.i)
                    continue;
                if (jump.delta >= 0 && mod.has_labels() &&
                    mod.labels[static_cast<size_t>(v)][3] != jump.delta)
                    continue;
                cols.push_back(v);
            }
            return cols;
        };
        std::vector<int> fa = select(m, jump.a);
        std::vector<int> fb = select(mdual, jump.b);
        std::vector<int> comp_dual = component(mdual);
        // orthogonality F^a x F^b -> 0
        ScalarMatrix block = pairing.submatrix(fa, fb);
        if (!block.is_zero()) return false;
        // induced map F^a -> (dual component / F^b)^* must be injective and onto
        ScalarMatrix induced = pairing.submatrix(fa, comp_dual);
        int expected = static_cast<int>(comp_dual.size()) - static_cast<int>(fb.size());
        if (static_cast<int>(fa.size()) != expected) return false;
        if (rank(induced) != static_cast<int>(fa.size())) return false;
    }
    return true;
}

}  // namespace phinforge
