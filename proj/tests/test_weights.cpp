#include <doctest.h>

#include <map>

#include "phinforge/weights.hpp"

using namespace phinforge;

TEST_CASE("r_of and normalization") {
    CHECK(r_of(HighestWeight(2, {1, 0, 0})) == 1);
    CHECK(r_of(HighestWeight(2, {2, 1, 0})) == 3);
    CHECK(r_of(HighestWeight(3, {0, 0, 0, 0})) == 0);
    // normalization subtracts the last entry
    HighestWeight w(2, {3, 2, 1});
    CHECK(w.lambda == std::vector<long long>{2, 1, 0});
}

TEST_CASE("dual weight") {
    CHECK(dual_weight(HighestWeight(2, {2, 1, 0})) == HighestWeight(2, {2, 1, 0}));
    CHECK(dual_weight(HighestWeight(2, {1, 0, 0})) == HighestWeight(2, {1, 1, 0}));
    CHECK(dual_weight(HighestWeight(3, {0, 0, 0, 0})) == HighestWeight(3, {0, 0, 0, 0}));
}

TEST_CASE("dual weight is an involution with the stated r identity") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& w : enumerate_weights(d, 3)) {
            HighestWeight ww = dual_weight(dual_weight(w));
            CHECK(ww == w);
            CHECK(r_of(dual_weight(w)) == (d + 1) * w.lambda[0] - r_of(w));
        }
}

TEST_CASE("mu_of examples") {
    CHECK(mu_of(HighestWeight(2, {1, 0, 0}), 1) == L1Weight(2, {3, 1}));
    CHECK(mu_of(HighestWeight(2, {1, 0, 0}), 0) == L1Weight(2, {-1, -1}));
    CHECK(mu_of(HighestWeight(2, {0, 0, 0}), 2) == L1Weight(2, {3, 3}));
    CHECK_THROWS_AS(mu_of(HighestWeight(2, {1, 0, 0}), 3), std::invalid_argument);
}

TEST_CASE("weight_from_mu examples") {
    auto [w1, j1] = weight_from_mu(L1Weight(2, {3, 1}));
    CHECK(w1 == HighestWeight(2, {1, 0, 0}));
    CHECK(j1 == 1);
    auto [w2, j2] = weight_from_mu(L1Weight(2, {-1, -1}));
    CHECK(w2 == HighestWeight(2, {1, 0, 0}));
    CHECK(j2 == 0);
    CHECK_THROWS_AS(weight_from_mu(L1Weight(2, {1, 0})), std::domain_error);
}

TEST_CASE("round trip and uniqueness, exhaustive at small scale") {
    for (int d = 1; d <= 5; ++d) {
        std::map<std::vector<long long>, std::pair<std::vector<long long>, int>> seen;
        for (const auto& w : enumerate_weights(d, 4)) {
            for (int j = 0; j <= d; ++j) {
                L1Weight m = mu_of(w, j);
                // output is weakly decreasing by construction of L1Weight
                auto [w2, j2] = weight_from_mu(m);
                CHECK(w2 == w);
                CHECK(j2 == j);
                auto it = seen.find(m.mu);
                if (it != seen.end()) {
                    CHECK(it->second.first == w.lambda);
                    CHECK(it->second.second == j);
                } else {
                    seen.emplace(m.mu, std::make_pair(w.lambda, j));
                }
            }
        }
    }
}

TEST_CASE("hodge jumps") {
    CHECK(hodge_jumps(HighestWeight(2, {2, 1, 0})) == std::set<long long>{1, 3, 5});
    CHECK(hodge_jumps(HighestWeight(2, {1, 0, 0})) == std::set<long long>{0, 2, 3});
    CHECK(hodge_jumps(HighestWeight(2, {0, 0, 0})) == std::set<long long>{0, 1, 2});
    // strictly increasing in j means exactly d+1 jump values
    for (const auto& w : enumerate_weights(3, 4))
        CHECK(hodge_jumps(w).size() == 4);
}

TEST_CASE("covering filtration dimension formula") {
    CHECK(gamma_filtration_dims(2, 5, 1) == 10);
    CHECK(gamma_filtration_dims(2, 5, 0) == 15);
    CHECK(gamma_filtration_dims(2, 5, 3) == 0);
    CHECK(gamma_filtration_dims(4, 7, 5) == 0);
    CHECK_THROWS_AS(gamma_filtration_dims(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gamma_filtration_dims(2, 5, 4), std::invalid_argument);
}

TEST_CASE("predicted cohomology table") {
    auto t = predicted_cohomology_table(HighestWeight(2, {1, 0, 0}), 5);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == std::make_pair(2, 5LL));
    CHECK(t[2] == std::make_pair(0, 5LL));
    auto t1 = predicted_cohomology_table(HighestWeight(1, {1, 0}), 1);
    CHECK(t1[1] == std::make_pair(0, 1LL));
}
