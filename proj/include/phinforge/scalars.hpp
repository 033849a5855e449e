#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phinforge/matrix.hpp"
#include "phinforge/rational.hpp"

namespace phinforge {

/// Parameters of the coefficient field: degree n = e*f over the prime field,
/// ramification e, residue degree f, with a uniformizer pi satisfying pi^e = p.
struct FieldParams {
    long long p = 2;
    int e = 1;
    int f = 1;

    FieldParams() = default;
    FieldParams(long long p_, int e_, int f_) : p(p_), e(e_), f(f_) {
        if (e < 1 || f < 1) throw std::invalid_argument("e and f must be >= 1");
        if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    }

    int n() const { return e * f; }

    bool operator==(const FieldParams& o) const { return p == o.p && e == o.e && f == o.f; }

    static bool is_prime(long long v) {
        if (v < 2) return false;
        for (long long d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    }
};

/// Element of Q[pi]/(pi^e - p): e rational coefficients, c0 + c1*pi + ... .
class PiScalar {
public:
    PiScalar() : fp_(), coeffs_(1) {}
    explicit PiScalar(FieldParams fp) : fp_(fp), coeffs_(fp.e) {}
    PiScalar(FieldParams fp, Rational constant) : fp_(fp), coeffs_(fp.e) {
        coeffs_[0] = std::move(constant);
    }
    PiScalar(FieldParams fp, std::vector<Rational> coeffs) : fp_(fp), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != fp_.e) throw std::invalid_argument("coefficient count != e");
    }

    static PiScalar zero(FieldParams fp) { return PiScalar(fp); }
    static PiScalar one(FieldParams fp) { return PiScalar(fp, Rational(1)); }

    /// pi^k for any integer k (negative powers use pi^e = p).
    static PiScalar pi_pow(FieldParams fp, long long k) {
        long long q = k >= 0 ? k / fp.e : -((-k + fp.e - 1) / fp.e);
        long long r = k - q * fp.e;  // 0 <= r < e
        PiScalar s(fp);
        Rational pq = q >= 0 ? Rational(BigInt::pow(BigInt(fp.p), static_cast<unsigned long long>(q)), BigInt(1))
                             : Rational(BigInt(1), BigInt::pow(BigInt(fp.p), static_cast<unsigned long long>(-q)));
        s.coeffs_[static_cast<size_t>(r)] = pq;
        return s;
    }

    /// p^k as a field element.
    static PiScalar p_pow(FieldParams fp, long long k) { return pi_pow(fp, k * fp.e); }

    const FieldParams& params() const { return fp_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend PiScalar operator+(PiScalar a, PiScalar b) {
        harmonize(a, b);
        PiScalar r = a;
        for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    friend PiScalar operator-(PiScalar a, PiScalar b) {
        harmonize(a, b);
        PiScalar r = a;
        for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }
    friend PiScalar operator*(PiScalar a, PiScalar b) {
        harmonize(a, b);
        int e = a.fp_.e;
        std::vector<Rational> prod(2 * e - 1);
        for (int i = 0; i < e; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; j < e; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        PiScalar r(a.fp_);
        Rational p(a.fp_.p);
        for (int k = 2 * e - 2; k >= e; --k)
            if (!prod[k].is_zero()) prod[k - e] += prod[k] * p;  // pi^e = p
        for (int k = 0; k < e; ++k) r.coeffs_[k] = prod[k];
        return r;
    }
    PiScalar& operator+=(const PiScalar& b) { *this = *this + b; return *this; }
    PiScalar& operator-=(const PiScalar& b) { *this = *this - b; return *this; }
    PiScalar& operator*=(const PiScalar& b) { *this = *this * b; return *this; }
    PiScalar operator-() const {
        PiScalar r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    bool operator==(const PiScalar& o) const { return (*this - o).is_zero(); }
    bool operator!=(const PiScalar& o) const { return !(*this == o); }

    /// Inverse in Q[x]/(x^e - p) via extended euclid; x^e - p is irreducible.
    PiScalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        int e = fp_.e;
        if (e == 1) return PiScalar(fp_, coeffs_[0].inverse());
        // extended gcd of this (as poly) with x^e - p over Q
        std::vector<Rational> r0(static_cast<size_t>(e) + 1), r1 = coeffs_;
        r0[0] = Rational(-fp_.p);
        r0[static_cast<size_t>(e)] = Rational(1);
        std::vector<Rational> s0(1), s1(1);
        s1[0] = Rational(1);
        auto deg = [](const std::vector<Rational>& v) {
            for (size_t i = v.size(); i-- > 0;)
                if (!v[i].is_zero()) return static_cast<int>(i);
            return -1;
        };
        while (deg(r1) > 0) {
            // divide r0 by r1
            std::vector<Rational> q(static_cast<size_t>(std::max(0, deg(r0) - deg(r1))) + 1);
            std::vector<Rational> rem = r0;
            int d1 = deg(r1);
            Rational lead = r1[static_cast<size_t>(d1)];
            for (int d0 = deg(rem); d0 >= d1; d0 = deg(rem)) {
                Rational c = rem[static_cast<size_t>(d0)] / lead;
                q[static_cast<size_t>(d0 - d1)] = c;
                for (int j = 0; j <= d1; ++j)
                    rem[static_cast<size_t>(d0 - d1 + j)] -= c * r1[static_cast<size_t>(j)];
                rem[static_cast<size_t>(d0)] = Rational(0);
            }
            // s_new = s0 - q * s1
            std::vector<Rational> snew(std::max(s0.size(), q.size() + s1.size()), Rational(0));
            for (size_t i = 0; i < s0.size(); ++i) snew[i] += s0[i];
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = snew;
        }
        int d = deg(r1);
        if (d != 0) throw std::domain_error("inverse of zero");
        Rational c = r1[0].inverse();
        PiScalar inv(fp_);
        for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(e); ++i)
            inv.coeffs_[i] = s1[i] * c;
        return inv;
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += coeffs_[i].to_string();
            if (i == 1) s += "*pi";
            else if (i > 1) s += "*pi^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    FieldParams fp_;
    std::vector<Rational> coeffs_;

    // a default-constructed zero adapts to the other operand's field
    static void harmonize(PiScalar& a, PiScalar& b) {
        if (a.coeffs_.size() == b.coeffs_.size() && a.fp_ == b.fp_) return;
        if (a.is_zero() && a.fp_.e == 1 && a.fp_.f == 1) {
            a = PiScalar::zero(b.fp_);
            return;
        }
        if (b.is_zero() && b.fp_.e == 1 && b.fp_.f == 1) {
            b = PiScalar::zero(a.fp_);
            return;
        }
        throw std::invalid_argument("field parameter mismatch");
    }
};

using ScalarMatrix = Mat<PiScalar>;

inline ScalarMatrix scalar_identity(FieldParams fp, int n) {
    return ScalarMatrix::identity(n, PiScalar::one(fp));
}

/// p-adic valuation normalized by val_p(p) = 1; nullopt encodes +infinity.
inline std::optional<Rational> val_p(const PiScalar& x) {
    if (x.is_zero()) return std::nullopt;
    const auto& fp = x.params();
    BigInt p(fp.p);
    std::optional<Rational> best;
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i].is_zero()) continue;
        Rational v = Rational(x.coeffs()[i].valuation(p)) + Rational(static_cast<long long>(i), fp.e);
        if (!best || v < *best) best = v;
    }
    return best;
}

/// Coefficients of the characteristic polynomial of A, by Faddeev-LeVerrier:
/// result[k] is the coefficient of x^k, result[n] = 1.
inline std::vector<PiScalar> char_poly(const ScalarMatrix& a, FieldParams fp) {
    if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    int n = a.rows();
    std::vector<PiScalar> c(static_cast<size_t>(n) + 1, PiScalar::zero(fp));
    c[static_cast<size_t>(n)] = PiScalar::one(fp);
    ScalarMatrix b = scalar_identity(fp, n);
    for (int k = 1; k <= n; ++k) {
        b = a * b;
        PiScalar tr(fp);
        for (int i = 0; i < n; ++i) tr += b(i, i);
        PiScalar ck = -(tr * PiScalar(fp, Rational(1, k)));
        c[static_cast<size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) b(i, i) += ck;
    }
    return c;
}

/// Newton-polygon slopes of the characteristic polynomial of A^iterate,
/// each divided by iterate. Throws on singular input.
inline std::vector<Rational> newton_slopes(const ScalarMatrix& a, FieldParams fp,
                                           unsigned long long iterate = 1) {
    if (a.rows() != a.cols()) throw std::invalid_argument("newton_slopes of non-square matrix");
    if (iterate == 0) throw std::invalid_argument("iterate must be positive");
    if (determinant(a, PiScalar::one(fp)).is_zero())
        throw std::domain_error("non-bijective Frobenius");
    ScalarMatrix ai = a.pow(iterate, PiScalar::one(fp));
    std::vector<PiScalar> c = char_poly(ai, fp);
    int n = a.rows();
    // lower convex hull of (i, val c_i); c_0 != 0 since det != 0
    struct Pt { long long i; Rational v; };
    std::vector<Pt> pts;
    for (int i = 0; i <= n; ++i) {
        if (c[static_cast<size_t>(i)].is_zero()) continue;
        pts.push_back({i, *val_p(c[static_cast<size_t>(i)])});
    }
    std::vector<Pt> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const Pt& a2 = hull[hull.size() - 2];
            const Pt& b2 = hull[hull.size() - 1];
            // drop b2 when it lies on or above segment a2->pt
            Rational lhs = (b2.v - a2.v) * Rational(pt.i - a2.i);
            Rational rhs = (pt.v - a2.v) * Rational(b2.i - a2.i);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    std::vector<Rational> slopes;
    Rational it(static_cast<long long>(iterate));
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        long long width = hull[k + 1].i - hull[k].i;
        Rational s = (hull[k].v - hull[k + 1].v) / Rational(width);  // root valuation
        for (long long w = 0; w < width; ++w) slopes.push_back(s / it);
    }
    std::sort(slopes.begin(), slopes.end());
    return slopes;
}

}  // namespace phinforge
