#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace phinforge {

/// Dominant weight of GL(d+1), stored normalized with last entry 0.
struct HighestWeight {
    int d = 0;
    std::vector<long long> lambda;  // size d+1, weakly decreasing, lambda[d] == 0

    HighestWeight() : lambda{0} {}
    HighestWeight(int d_, std::vector<long long> entries) : d(d_), lambda(std::move(entries)) {
        if (static_cast<int>(lambda.size()) != d + 1)
            throw std::invalid_argument("weight needs d+1 entries");
        for (int i = 0; i < d; ++i)
            if (lambda[static_cast<size_t>(i)] < lambda[static_cast<size_t>(i) + 1])
                throw std::invalid_argument("weight entries must be weakly decreasing");
        // twisting by a power of det normalizes the last entry to 0
        long long last = lambda.back();
        if (last != 0)
            for (auto& x : lambda) x -= last;
    }

    bool operator==(const HighestWeight& o) const { return d == o.d && lambda == o.lambda; }
    bool operator<(const HighestWeight& o) const {
        return d != o.d ? d < o.d : lambda < o.lambda;
    }
};

/// Dominant weight of the GL(d) Levi block (mu_1 >= ... >= mu_d).
struct L1Weight {
    int d = 0;
    std::vector<long long> mu;

    L1Weight() = default;
    L1Weight(int d_, std::vector<long long> entries) : d(d_), mu(std::move(entries)) {
        if (static_cast<int>(mu.size()) != d) throw std::invalid_argument("mu needs d entries");
        for (int i = 0; i + 1 < d; ++i)
            if (mu[static_cast<size_t>(i)] < mu[static_cast<size_t>(i) + 1])
                throw std::invalid_argument("mu entries must be weakly decreasing");
    }

    bool operator==(const L1Weight& o) const { return d == o.d && mu == o.mu; }
};

inline long long r_of(const HighestWeight& w) {
    long long r = 0;
    for (long long x : w.lambda) r += x;
    return r;
}

inline HighestWeight dual_weight(const HighestWeight& w) {
    std::vector<long long> out(w.lambda.size());
    long long l0 = w.lambda[0];
    for (int i = 0; i <= w.d; ++i)
        out[static_cast<size_t>(i)] = l0 - w.lambda[static_cast<size_t>(w.d - i)];
    return HighestWeight(w.d, out);
}

/// The Levi weight attached to (lambda, j):
/// (lambda_0-lambda_j+j+1, ..., lambda_{j-1}-lambda_j+j+1,
///  lambda_{j+1}-lambda_j+j, ..., lambda_d-lambda_j+j).
inline L1Weight mu_of(const HighestWeight& w, int j) {
    if (j < 0 || j > w.d) throw std::invalid_argument("j out of range");
    std::vector<long long> mu(static_cast<size_t>(w.d));
    long long lj = w.lambda[static_cast<size_t>(j)];
    for (int s = 1; s <= w.d; ++s) {
        long long v = s <= j ? w.lambda[static_cast<size_t>(s - 1)] - lj + j + 1
                             : w.lambda[static_cast<size_t>(s)] - lj + j;
        mu[static_cast<size_t>(s - 1)] = v;
    }
    return L1Weight(w.d, mu);
}

/// Inverts mu_of: the unique (lambda with lambda_d = 0, j) with mu_of(lambda, j) == mu.
/// j is the largest index with mu_j >= j+1 (mu_0 treated as +infinity).
/// Rejects inputs with mu_s == s for some s: those have no preimage.
inline std::pair<HighestWeight, int> weight_from_mu(const L1Weight& m) {
    int d = m.d;
    for (int s = 1; s <= d; ++s)
        if (m.mu[static_cast<size_t>(s - 1)] == s)
            throw std::domain_error("no preimage: mu_s = s at s = " + std::to_string(s));
    int j = 0;
    for (int cand = d; cand >= 1; --cand)
        if (m.mu[static_cast<size_t>(cand - 1)] >= cand + 1) { j = cand; break; }
    std::vector<long long> lam(static_cast<size_t>(d) + 1, 0);
    long long lj = j == d ? 0 : static_cast<long long>(j) - m.mu[static_cast<size_t>(d - 1)];
    lam[static_cast<size_t>(j)] = lj;
    for (int s = 1; s <= j; ++s)
        lam[static_cast<size_t>(s - 1)] = m.mu[static_cast<size_t>(s - 1)] + lj - j - 1;
    for (int s = j + 1; s <= d; ++s)
        lam[static_cast<size_t>(s)] = m.mu[static_cast<size_t>(s - 1)] + lj - j;
    for (int i = 0; i < d; ++i)
        if (lam[static_cast<size_t>(i)] < lam[static_cast<size_t>(i) + 1])
            throw std::domain_error("no preimage: inverted tuple not dominant");
    if (lam.back() != 0) throw std::domain_error("no preimage: last entry nonzero");
    HighestWeight w(d, lam);
    if (!(mu_of(w, j) == m)) throw std::domain_error("no preimage: round-trip failed");
    return {w, j};
}

/// The d+1 filtration jump positions r_M - lambda_j + j, strictly increasing in j.
inline std::set<long long> hodge_jumps(const HighestWeight& w) {
    long long r = r_of(w);
    std::set<long long> out;
    for (int j = 0; j <= w.d; ++j)
        out.insert(r - w.lambda[static_cast<size_t>(j)] + j);
    return out;
}

/// dim F^i = (d+1-i) * mu_value for the covering filtration, 0 <= i <= d+1.
inline long long gamma_filtration_dims(int d, long long mu_value, int i) {
    if (mu_value < 1) throw std::invalid_argument("mu_value must be positive");
    if (i < 0 || i > d + 1) throw std::invalid_argument("i out of range");
    // the two displayed cases (d odd or 2i > d / d even and 2i <= d) print the
    // same expression; a single formula covers both
    return static_cast<long long>(d + 1 - i) * mu_value;
}

/// Predicted group-cohomology table: for each 0 <= s <= d the only nonzero
/// degree is d-s, with dimension mu_value.
inline std::vector<std::pair<int, long long>> predicted_cohomology_table(const HighestWeight& w,
                                                                         long long mu_value) {
    if (mu_value < 1) throw std::invalid_argument("mu_value must be positive");
    std::vector<std::pair<int, long long>> table;
    for (int s = 0; s <= w.d; ++s) table.emplace_back(w.d - s, mu_value);
    return table;
}

/// All normalized weights for GL(d+1) with entries bounded by max_entry.
inline std::vector<HighestWeight> enumerate_weights(int d, long long max_entry) {
    std::vector<HighestWeight> out;
    std::vector<long long> cur(static_cast<size_t>(d) + 1, 0);
    // lexicographic enumeration of weakly decreasing tuples with last entry 0
    while (true) {
        out.emplace_back(d, cur);
        int i = d - 1;
        for (; i >= 0; --i) {
            long long cap = i == 0 ? max_entry : cur[static_cast<size_t>(i - 1)];
            if (cur[static_cast<size_t>(i)] < cap) break;
        }
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int k = i + 1; k < d; ++k) cur[static_cast<size_t>(k)] = 0;
    }
    return out;
}

}  // namespace phinforge
