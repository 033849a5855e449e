#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phinforge/phin.hpp"
#include "phinforge/weights.hpp"

namespace phinforge {

/// Inputs for the explicit cohomology models: the group rank d, the field,
/// a normalized weight, the abstract multiplicity mu, and an optional
/// coefficient twist (m, alpha) with alpha a nonzero scalar.
struct DrinfeldParams {
    int d = 1;
    FieldParams params;
    HighestWeight lambda;
    long long mu_value = 1;
    std::optional<std::pair<long long, PiScalar>> twist;

    DrinfeldParams(int d_, FieldParams fp, HighestWeight w, long long mu)
        : d(d_), params(fp), lambda(std::move(w)), mu_value(mu) {
        if (lambda.d != d) throw std::invalid_argument("weight rank mismatch");
        if (mu_value < 1) throw std::invalid_argument("mu_value must be positive");
    }
};

/// The cyclic slope model: a monomial matrix on the f*(d+1) cells (j, i) with
/// per-step scale p^{r}, one extra factor pi^{-r} at the (j=0, i=d) wrap, and
/// its closed-form slope (n(d+1)-1) r / (n(d+1)).
struct SlopeModel {
    ScalarMatrix matrix;
    Rational expected_slope;
    unsigned long long iterate = 1;  // f*(d+1); slopes of matrix^iterate / iterate
};

inline SlopeModel build_MM(const DrinfeldParams& dp) {
    const FieldParams& fp = dp.params;
    int d = dp.d, f = fp.f;
    long long r = r_of(dp.lambda);
    long long n = fp.n();
    int cells = f * (d + 1);
    auto cell = [&](int j, int i) { return j * (d + 1) + i; };
    ScalarMatrix m(cells, cells);
    for (int j = 0; j < f; ++j)
        for (int i = 0; i <= d; ++i) {
            int tj = (j - 1 + f) % f;
            int ti = j == 0 ? (i + 1) % (d + 1) : i;
            PiScalar scale = PiScalar::p_pow(fp, r);
            if (j == 0 && i == d) scale = scale * PiScalar::pi_pow(fp, -r);
            m(cell(tj, ti), cell(j, i)) = scale;
        }
    SlopeModel out;
    out.matrix = m;
    out.iterate = static_cast<unsigned long long>(f) * (d + 1);
    out.expected_slope = Rational((n * (d + 1) - 1) * r, n * (d + 1));
    return out;
}

/// Builds the filtered module attached to the parameters: basis indexed by
/// (i in Z/(d+1), j in Z/f, s in 0..d, t in 1..mu); phi steps (i,j) -> the
/// previous j (advancing i past j=0) with scale p^{r + (d-s)} and a pi^{-r}
/// factor at the (j=0, i=d) wrap; N raises s; filtration degrees are
/// r - lambda_{d-s} + (d-s) on the j=0 block and r + (d-s) elsewhere.
/// Requires e = 1; with a twist the shape follows the twisted recipe below.
inline FilteredPhiNModule build_D(const DrinfeldParams& dp) {
    const FieldParams& fp = dp.params;
    if (fp.e != 1) throw std::invalid_argument("ramified (D, D_K) model unsupported");
    int d = dp.d, f = fp.f;
    long long r = r_of(dp.lambda);
    long long mu = dp.mu_value;

    FilteredPhiNModule m;
    m.params = fp;

    if (dp.twist) {
        // coefficient twist: basis (s in 0..d, t in 1..mu, k in Z/(m f));
        // per-step scale p^{d-s}, the factor alpha once per k-cycle, N raises s.
        long long mm = dp.twist->first;
        const PiScalar& alpha = dp.twist->second;
        if (mm < 1) throw std::invalid_argument("twist iterate must be positive");
        if (alpha.is_zero()) throw std::invalid_argument("twist scalar must be nonzero");
        long long cyc = mm * f;
        int dim = static_cast<int>((d + 1) * mu * cyc);
        m.dim = dim;
        m.twisted = true;
        auto idx = [&](int s, long long t, long long k) {
            return static_cast<int>((static_cast<long long>(s) * mu + t) * cyc + k);
        };
        m.phi = ScalarMatrix(dim, dim);
        m.nmat = Mat<Rational>(dim, dim);
        m.hodge.assign(static_cast<size_t>(dim), 0);
        m.labels.assign(static_cast<size_t>(dim), {0, 0, 0, 0});
        for (int s = 0; s <= d; ++s)
            for (long long t = 0; t < mu; ++t)
                for (long long k = 0; k < cyc; ++k) {
                    int src = idx(s, t, k);
                    PiScalar scale = PiScalar::p_pow(fp, d - s);
                    if (k == cyc - 1) scale = scale * alpha;
                    m.phi(idx(s, t, (k + 1) % cyc), src) = scale;
                    if (s < d) m.nmat(idx(s + 1, t, k), src) = Rational(1);
                    long long va = val_p(alpha)->num().to_ll();  // e = 1: integral
                    m.hodge[static_cast<size_t>(src)] = (d - s) + (k == 0 ? va : 0);
                    m.labels[static_cast<size_t>(src)] = {0, static_cast<int>(k % f), s, 0};
                }
        validate_module(m);
        return m;
    }

    int dim = static_cast<int>(static_cast<long long>(d + 1) * f * (d + 1) * mu);
    m.dim = dim;
    auto idx = [&](int i, int j, int s, long long t) {
        return static_cast<int>((((static_cast<long long>(i) * f + j) * (d + 1) + s) * mu + t));
    };
    m.phi = ScalarMatrix(dim, dim);
    m.nmat = Mat<Rational>(dim, dim);
    m.hodge.assign(static_cast<size_t>(dim), 0);
    m.labels.assign(static_cast<size_t>(dim), {0, 0, 0, 0});
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < f; ++j)
            for (int s = 0; s <= d; ++s)
                for (long long t = 0; t < mu; ++t) {
                    int src = idx(i, j, s, t);
                    int ti = j == 0 ? (i + 1) % (d + 1) : i;
                    int tj = (j - 1 + f) % f;
                    PiScalar scale = PiScalar::p_pow(fp, r + (d - s));
                    if (j == 0 && i == d) scale = scale * PiScalar::pi_pow(fp, -r);
                    m.phi(idx(ti, tj, s, t), src) = scale;
                    if (s < d) m.nmat(idx(i, j, s + 1, t), src) = Rational(1);
                    long long deg = j == 0 ? r - dp.lambda.lambda[static_cast<size_t>(d - s)] + (d - s)
                                           : r + (d - s);
                    m.hodge[static_cast<size_t>(src)] = deg;
                    m.labels[static_cast<size_t>(src)] = {i, j, s, j};  // delta = sigma^j when e = 1
                }
    validate_module(m);

    // construction-time checks: total dimension, the graded iterate order,
    // graded piece sizes, and the nilpotency shape
    long long n = fp.n();
    unsigned long long full = static_cast<unsigned long long>(n) * (d + 1);
    ScalarMatrix iter = m.phi.pow(full, PiScalar::one(fp));
    for (int s = 0; s <= d; ++s) {
        Rational expected(static_cast<long long>(n) * (d + 1) * (d - s) + (n * (d + 1) - 1) * r);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j < f; ++j)
                for (long long t = 0; t < mu; ++t) {
                    int v = idx(i, j, s, t);
                    for (int w = 0; w < dim; ++w) {
                        if (w == v) {
                            auto val = val_p(iter(w, v));
                            if (!val || *val != expected)
                                throw std::logic_error("graded iterate order violated");
                        } else if (!iter(w, v).is_zero()) {
                            throw std::logic_error("iterate is not diagonal");
                        }
                    }
                }
    }
    return m;
}

/// Basis of S^level = span of basis vectors with label s >= level.
inline Mat<Rational> slope_step_basis(const FilteredPhiNModule& m, int level) {
    if (!m.has_labels()) throw std::invalid_argument("missing labels");
    std::vector<int> cols;
    for (int v = 0; v < m.dim; ++v)
        if (m.labels[static_cast<size_t>(v)][2] >= level) cols.push_back(v);
    Mat<Rational> b(m.dim, static_cast<int>(cols.size()));
    for (size_t k = 0; k < cols.size(); ++k) b(cols[k], static_cast<int>(k)) = Rational(1);
    return b;
}

/// The slope filtration reread as a decreasing chain F^0 contains ... F^{d+1}.
inline std::vector<Mat<Rational>> slope_filtration_chain(const FilteredPhiNModule& m, int d) {
    std::vector<Mat<Rational>> chain;
    for (int r = 0; r <= d + 1; ++r) chain.push_back(slope_step_basis(m, r));
    return chain;
}

/// Splitting of the slope filtration by the twisted Hodge steps:
/// for 0 <= j <= d-1 the sum Ftilde^{j+1} + S^{d-j} must be direct and full.
/// Ftilde^{j+1} collects, per block, the Hodge steps at the j+1-st jump.
inline bool verify_splitting(const FilteredPhiNModule& m, const HighestWeight& w) {
    if (!m.has_labels()) throw std::invalid_argument("missing labels");
    int d = w.d;
    long long r = r_of(w);
    for (int j = 0; j + 1 <= d; ++j) {
        // Ftilde^{j+1}: degree >= r - lambda_{j+1} + (j+1) on delta = 0 blocks,
        // degree >= r + j + 1 on the others
        std::vector<int> cols;
        for (int v = 0; v < m.dim; ++v) {
            long long deg = m.hodge[static_cast<size_t>(v)];
            long long cut = m.labels[static_cast<size_t>(v)][3] == 0
                                ? r - w.lambda[static_cast<size_t>(j + 1)] + (j + 1)
                                : r + j + 1;
            if (deg >= cut) cols.push_back(v);
        }
        Mat<Rational> ftilde(m.dim, static_cast<int>(cols.size()));
        for (size_t k = 0; k < cols.size(); ++k) ftilde(cols[k], static_cast<int>(k)) = Rational(1);
        Mat<Rational> s_part = slope_step_basis(m, d - j);
        long long total = ftilde.cols() + s_part.cols();
        if (total != m.dim) return false;
        if (rank(Mat<Rational>::hconcat(ftilde, s_part)) != m.dim) return false;
    }
    return true;
}

/// Builds the module, its dual-weight partner with the same mu, and the block
/// pairing matching (i, delta) components and pairing level s with d - s.
struct DualPair {
    FilteredPhiNModule module;
    FilteredPhiNModule dual;
    ScalarMatrix pairing;
    std::vector<PairingJump> jumps;
};

inline DualPair build_dual_pair(const DrinfeldParams& dp) {
    if (dp.twist) throw std::invalid_argument("dual pair of a twisted module is not defined");
    DualPair out;
    out.module = build_D(dp);
    DrinfeldParams ddual(dp.d, dp.params, dual_weight(dp.lambda), dp.mu_value);
    out.dual = build_D(ddual);
    int d = dp.d, f = dp.params.f;
    long long mu = dp.mu_value;
    auto idx = [&](int i, int j, int s, long long t) {
        return static_cast<int>((((static_cast<long long>(i) * f + j) * (d + 1) + s) * mu + t));
    };
    out.pairing = ScalarMatrix(out.module.dim, out.dual.dim);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < f; ++j)
            for (int s = 0; s <= d; ++s)
                for (long long t = 0; t < mu; ++t)
                    out.pairing(idx(i, j, s, t), idx(i, j, d - s, t)) = PiScalar::one(dp.params);

    // orthogonality table: per component type, each jump of the module pairs
    // with the complementary jump of the dual
    long long r = r_of(dp.lambda);
    long long l0 = dp.lambda.lambda[0];
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < f; ++j)
            for (int s = 0; s <= d; ++s) {
                PairingJump pj;
                pj.i = i;
                pj.delta = j;
                if (j == 0) {
                    pj.a = r - dp.lambda.lambda[static_cast<size_t>(d - s)] + (d - s);
                    pj.b = d * l0 + d + 1 - pj.a;
                } else {
                    pj.a = r + (d - s);
                    pj.b = (d + 1) * l0 + d + 1 - pj.a;
                }
                out.jumps.push_back(pj);
            }
    return out;
}

}  // namespace phinforge
