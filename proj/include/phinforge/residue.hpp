#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "phinforge/matrix.hpp"
#include "phinforge/rational.hpp"

namespace phinforge {

/// Laurent polynomial in d variables supported on exponent vectors a with
/// |a_i| <= W. Operations that would leave the window drop those terms and
/// set the truncation flag.
struct LaurentWindow {
    int d = 1;
    int w = 1;
    std::map<std::vector<int>, Rational> terms;
    bool truncated = false;

    LaurentWindow() = default;
    LaurentWindow(int d_, int w_) : d(d_), w(w_) {
        if (w < 1) throw std::invalid_argument("window bound must be >= 1");
    }

    static LaurentWindow constant(int d, int w, Rational c) {
        LaurentWindow f(d, w);
        if (!c.is_zero()) f.terms.emplace(std::vector<int>(static_cast<size_t>(d), 0), std::move(c));
        return f;
    }

    static LaurentWindow monomial(int d, int w, const std::vector<int>& a, Rational c) {
        LaurentWindow f(d, w);
        f.add_term(a, std::move(c));
        return f;
    }

    bool in_window(const std::vector<int>& a) const {
        for (int x : a)
            if (x > w || x < -w) return false;
        return true;
    }

    void add_term(const std::vector<int>& a, Rational c) {
        if (c.is_zero()) return;
        if (static_cast<int>(a.size()) != d) throw std::invalid_argument("exponent arity mismatch");
        if (!in_window(a)) {
            truncated = true;
            return;
        }
        auto it = terms.find(a);
        if (it == terms.end()) {
            terms.emplace(a, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    Rational coefficient(const std::vector<int>& a) const {
        auto it = terms.find(a);
        return it == terms.end() ? Rational(0) : it->second;
    }

    friend LaurentWindow operator+(const LaurentWindow& x, const LaurentWindow& y) {
        LaurentWindow r = x;
        r.truncated = x.truncated || y.truncated;
        for (const auto& [a, c] : y.terms) r.add_term(a, c);
        return r;
    }
    friend LaurentWindow operator-(const LaurentWindow& x, const LaurentWindow& y) {
        LaurentWindow r = x;
        r.truncated = x.truncated || y.truncated;
        for (const auto& [a, c] : y.terms) r.add_term(a, -c);
        return r;
    }
    friend LaurentWindow operator*(const LaurentWindow& x, const LaurentWindow& y) {
        LaurentWindow r(x.d, x.w);
        r.truncated = x.truncated || y.truncated;
        for (const auto& [a, ca] : x.terms)
            for (const auto& [b, cb] : y.terms) {
                std::vector<int> s(a);
                for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
                r.add_term(s, ca * cb);
            }
        return r;
    }

    LaurentWindow scaled(const Rational& c) const {
        LaurentWindow r(d, w);
        r.truncated = truncated;
        if (c.is_zero()) return r;
        for (const auto& [a, v] : terms) r.terms.emplace(a, v * c);
        return r;
    }

    /// True when every exponent is componentwise nonnegative.
    bool is_power_series() const {
        for (const auto& [a, c] : terms)
            for (int x : a)
                if (x < 0) return false;
        return true;
    }

    /// Inverse of a power series with invertible constant term, within the
    /// window and truncated to power-series support.
    LaurentWindow power_series_inverse() const {
        if (!is_power_series()) throw std::invalid_argument("non-unit series");
        Rational c0 = coefficient(std::vector<int>(static_cast<size_t>(d), 0));
        if (c0.is_zero()) throw std::invalid_argument("non-unit series");
        LaurentWindow high = *this;
        high.add_term(std::vector<int>(static_cast<size_t>(d), 0), -c0);  // this - c0
        LaurentWindow result = constant(d, w, c0.inverse());
        LaurentWindow pow = constant(d, w, Rational(1));
        // geometric series sum_{k} (-1)^k (high/c0)^k / c0; the window caps the order
        LaurentWindow ratio = high.scaled(c0.inverse());
        for (int k = 1; k <= d * (2 * w) + 1; ++k) {
            pow = pow * ratio;
            if (pow.is_zero()) break;
            result = result + pow.scaled(k % 2 == 0 ? c0.inverse() : -c0.inverse());
        }
        result.truncated = truncated || result.truncated;
        return result;
    }
};

/// Logarithmic differential form of degree k: components indexed by the
/// k-subsets S of {1..d} (bitmask), each a window function, representing
/// sum_S f_S dlog T_{s_1} wedge ... wedge dlog T_{s_k}.
struct LogForm {
    int d = 1;
    int w = 1;
    int degree = 0;
    std::map<uint32_t, LaurentWindow> components;  // bitmask -> coefficient

    LogForm() = default;
    LogForm(int d_, int w_, int degree_) : d(d_), w(w_), degree(degree_) {
        if (degree < 0 || degree > d) throw std::invalid_argument("form degree out of range");
    }

    static int popcount(uint32_t m) {
        int c = 0;
        while (m) {
            c += static_cast<int>(m & 1u);
            m >>= 1;
        }
        return c;
    }

    void add_component(uint32_t mask, const LaurentWindow& f) {
        if (popcount(mask) != degree) throw std::invalid_argument("component arity mismatch");
        if (f.is_zero()) {
            auto it = components.find(mask);
            if (it != components.end() && it->second.is_zero()) components.erase(it);
            return;
        }
        auto it = components.find(mask);
        if (it == components.end())
            components.emplace(mask, f);
        else {
            it->second = it->second + f;
            if (it->second.is_zero()) components.erase(it);
        }
    }

    bool is_zero() const {
        for (const auto& [m, f] : components)
            if (!f.is_zero()) return false;
        return true;
    }

    bool truncated() const {
        for (const auto& [m, f] : components)
            if (f.truncated) return true;
        return false;
    }

    friend LogForm operator+(const LogForm& x, const LogForm& y) {
        LogForm r = x;
        for (const auto& [m, f] : y.components) r.add_component(m, f);
        return r;
    }

    LogForm scaled(const Rational& c) const {
        LogForm r(d, w, degree);
        for (const auto& [m, f] : components) {
            LaurentWindow s = f.scaled(c);
            if (!s.is_zero()) r.components.emplace(m, s);
        }
        return r;
    }
};

/// dlog T_1 wedge ... wedge dlog T_d with coefficient 1.
inline LogForm dlog_wedge(int d, int w) {
    LogForm f(d, w, d);
    f.add_component((1u << d) - 1u, LaurentWindow::constant(d, w, Rational(1)));
    return f;
}

/// Exterior differential in dlog coordinates: T^a -> sum_i a_i T^a dlog T_i.
/// Exponents never grow, so the window is preserved.
inline LogForm dform(const LogForm& omega) {
    if (omega.degree >= omega.d) throw std::invalid_argument("degree overflow in dform");
    LogForm out(omega.d, omega.w, omega.degree + 1);
    for (const auto& [mask, f] : omega.components) {
        for (const auto& [a, c] : f.terms) {
            for (int i = 0; i < omega.d; ++i) {
                if (mask & (1u << i)) continue;
                long long ai = a[static_cast<size_t>(i)];
                if (ai == 0) continue;
                // sign: number of set bits below i in the target subset
                int below = 0;
                for (int j = 0; j < i; ++j)
                    if (mask & (1u << j)) ++below;
                Rational coeff = Rational(ai) * c;
                if (below % 2 == 1) coeff = -coeff;
                LaurentWindow term = LaurentWindow::monomial(omega.d, omega.w, a, coeff);
                term.truncated = f.truncated;
                out.add_component(mask | (1u << i), term);
            }
        }
    }
    return out;
}

/// Residue of a top-degree form: the coefficient of the zero exponent in the
/// full-wedge component.
inline Rational residue(const LogForm& omega) {
    if (omega.degree != omega.d) throw std::invalid_argument("residue needs a top-degree form");
    auto it = omega.components.find((1u << omega.d) - 1u);
    if (it == omega.components.end()) return Rational(0);
    return it->second.coefficient(std::vector<int>(static_cast<size_t>(omega.d), 0));
}

namespace detail {

/// Solves T = T' / eps(T) by fixed-point iteration: returns, per variable i,
/// the series u_i(T') with T_i = T'_i * u_i(T'). All u_i share the same value
/// 1/eps(T(T')) here since the twist multiplies every variable by eps.
inline LaurentWindow substituted_unit(const LaurentWindow& eps) {
    int d = eps.d, w = eps.w;
    // iterate h_0 = eps, h_{k+1}(T') = eps(T' * h_k(T')^{-1}) until stable
    LaurentWindow h = eps;
    for (int iter = 0; iter <= d * (2 * w) + 2; ++iter) {
        LaurentWindow hinv = h.power_series_inverse();
        // compute eps at T_i = T'_i * hinv: substitute monomials
        LaurentWindow next(d, w);
        for (const auto& [a, c] : eps.terms) {
            long long total = 0;
            for (int x : a) total += x;
            // T^a -> T'^a * hinv^{sum a}; all entries of a are >= 0 (power series)
            LaurentWindow mono = LaurentWindow::monomial(d, w, a, c);
            LaurentWindow factor = LaurentWindow::constant(d, w, Rational(1));
            for (long long k = 0; k < total; ++k) factor = factor * hinv;
            next = next + mono * factor;
        }
        if (next.terms == h.terms) break;
        h = next;
    }
    return h;
}

}  // namespace detail

/// Rewrites omega in the twisted coordinates T'_i = eps * T_i and compares
/// the residue computed there with the plain residue. eps must be a power
/// series with constant term 1.
inline bool unit_twist_invariance(const LaurentWindow& eps, const LogForm& omega) {
    if (!eps.is_power_series()) throw std::invalid_argument("non-unit twist");
    if (eps.coefficient(std::vector<int>(static_cast<size_t>(eps.d), 0)) != Rational(1))
        throw std::invalid_argument("non-unit twist");
    int d = omega.d, w = omega.w;
    Rational plain = residue(omega);

    // h(T') = eps(T(T')): the unit with T_i = T'_i / h
    LaurentWindow h = detail::substituted_unit(eps);
    LaurentWindow hinv = h.power_series_inverse();

    // dlog h as a 1-form in the primed frame: sum_j (T'_j d_j h / h) dlog T'_j
    std::vector<LaurentWindow> dlog_h(static_cast<size_t>(d), LaurentWindow(d, w));
    for (int j = 0; j < d; ++j) {
        LaurentWindow tj_dj(d, w);
        for (const auto& [a, c] : h.terms)
            if (a[static_cast<size_t>(j)] != 0)
                tj_dj.add_term(a, c * Rational(a[static_cast<size_t>(j)]));
        dlog_h[static_cast<size_t>(j)] = tj_dj * hinv;
    }

    // substitute each component f_S(T) -> f_S(T'/h) and each dlog T_i ->
    // dlog T'_i - dlog h, then expand and take the primed residue
    LogForm twisted(d, w, d);
    for (const auto& [mask, f] : omega.components) {
        // f(T(T')): T^a -> T'^a h^{-sum a}
        LaurentWindow fsub(d, w);
        for (const auto& [a, c] : f.terms) {
            long long total = 0;
            for (int x : a) total += x;
            LaurentWindow factor = LaurentWindow::constant(d, w, Rational(1));
            const LaurentWindow& base = total >= 0 ? hinv : h;
            long long reps = total >= 0 ? total : -total;
            for (long long k = 0; k < reps; ++k) factor = factor * base;
            fsub = fsub + LaurentWindow::monomial(d, w, a, c) * factor;
        }
        // expand the wedge of (dlog T'_i - dlog h) over i in S: subsets of S
        // choose which factors contribute the dlog h part; more than one dlog h
        // factor kills the term since dlog h wedge dlog h = 0 componentwise only
        // when the same 1-form repeats -- it does, h is a single function
        std::vector<int> sbits;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) sbits.push_back(i);
        // zero or one replacement
        twisted.add_component(mask, fsub);
        for (size_t pos = 0; pos < sbits.size(); ++pos) {
            // replace factor at `pos` by -dlog h = -sum_j c_j dlog T'_j
            for (int j = 0; j < d; ++j) {
                if (dlog_h[static_cast<size_t>(j)].is_zero()) continue;
                uint32_t without = mask & ~(1u << sbits[pos]);
                if (without & (1u << j)) continue;  // repeated dlog T'_j vanishes
                uint32_t target = without | (1u << j);
                if (LogForm::popcount(target) != d) continue;
                // sign: move the new factor from slot `pos` to its sorted slot
                int from = static_cast<int>(pos);
                int to = 0;
                for (int i = 0; i < j; ++i)
                    if (without & (1u << i)) ++to;
                int swaps = from - to;
                Rational sign = (swaps % 2 == 0) ? Rational(-1) : Rational(1);  // includes the minus of -dlog h
                twisted.add_component(target,
                                      (fsub * dlog_h[static_cast<size_t>(j)]).scaled(sign));
            }
        }
    }
    return residue(twisted) == plain;
}

/// Dimension of the top cohomology of the window model: classes of top forms
/// supported strictly inside (|a_i| <= W-1) modulo boundaries from inside the
/// window, by exact linear algebra over the monomial basis.
inline long long annulus_top_cohomology_dim(int d, int w) {
    if (d < 1 || d > 2 || w < 1 || w > 6) throw std::invalid_argument("window bounds exceeded");
    // enumerate interior monomials
    std::vector<std::vector<int>> interior;
    std::vector<int> a(static_cast<size_t>(d), -(w - 1));
    while (true) {
        interior.push_back(a);
        int i = d - 1;
        while (i >= 0 && a[static_cast<size_t>(i)] == w - 1) {
            a[static_cast<size_t>(i)] = -(w - 1);
            --i;
        }
        if (i < 0) break;
        ++a[static_cast<size_t>(i)];
    }
    std::map<std::vector<int>, int> interior_index;
    for (size_t i = 0; i < interior.size(); ++i) interior_index.emplace(interior[i], static_cast<int>(i));

    // image of dform from all (d-1)-forms in the window, restricted to the
    // interior span: collect generators as coordinate vectors
    std::vector<std::map<int, Rational>> gens;
    std::vector<std::vector<int>> window_exps;
    std::vector<int> b(static_cast<size_t>(d), -w);
    while (true) {
        window_exps.push_back(b);
        int i = d - 1;
        while (i >= 0 && b[static_cast<size_t>(i)] == w) {
            b[static_cast<size_t>(i)] = -w;
            --i;
        }
        if (i < 0) break;
        ++b[static_cast<size_t>(i)];
    }
    for (uint32_t mask = 0; mask < (1u << d); ++mask) {
        if (LogForm::popcount(mask) != d - 1) continue;
        for (const auto& exp : window_exps) {
            LogForm eta(d, w, d - 1);
            eta.add_component(mask, LaurentWindow::monomial(d, w, exp, Rational(1)));
            LogForm deta = dform(eta);
            auto it = deta.components.find((1u << d) - 1u);
            if (it == deta.components.end()) continue;
            std::map<int, Rational> vec;
            bool outside = false;
            for (const auto& [e, c] : it->second.terms) {
                auto ii = interior_index.find(e);
                if (ii == interior_index.end()) {
                    outside = true;
                    break;
                }
                vec.emplace(ii->second, c);
            }
            if (outside || vec.empty()) continue;  // boundary classes are not window-stable
            gens.push_back(std::move(vec));
        }
    }
    Mat<Rational> m(static_cast<int>(interior.size()), static_cast<int>(gens.size()));
    for (size_t g = 0; g < gens.size(); ++g)
        for (const auto& [row, c] : gens[g]) m(row, static_cast<int>(g)) = c;
    return static_cast<long long>(interior.size()) - rank(m);
}

}  // namespace phinforge
