#include <doctest.h>

#include <random>

#include "phinforge/repbuilder.hpp"

using namespace phinforge;

namespace {

Mat<Rational> tensor_power(const Mat<Rational>& g, long long r) {
    Mat<Rational> out = Mat<Rational>::identity(1, Rational(1));
    for (long long t = 0; t < r; ++t) {
        Mat<Rational> next(out.rows() * g.rows(), out.cols() * g.cols());
        for (int i = 0; i < out.rows(); ++i)
            for (int j = 0; j < out.cols(); ++j) {
                if (out(i, j).is_zero()) continue;
                for (int a = 0; a < g.rows(); ++a)
                    for (int b = 0; b < g.cols(); ++b) {
                        if (g(a, b).is_zero()) continue;
                        next(i * g.rows() + a, j * g.cols() + b) = out(i, j) * g(a, b);
                    }
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("small irreducibles have the expected dimensions") {
    CHECK(build_irrep(HighestWeight(2, {1, 1, 0})).dim == 3);
    CHECK(build_irrep(HighestWeight(2, {2, 0, 0})).dim == 6);
    CHECK(build_irrep(HighestWeight(2, {2, 1, 0})).dim == 8);
    CHECK(build_irrep(HighestWeight(1, {0, 0})).dim == 1);
    CHECK(build_irrep(HighestWeight(3, {1, 1, 1, 0})).dim == 4);
}

TEST_CASE("rank equals the Weyl dimension oracle on the full small grid") {
    for (int d = 1; d <= 3; ++d)
        for (const auto& w : enumerate_weights(d, 4)) {
            if (r_of(w) > 4) continue;
            Irrep rep = build_irrep(w);
            CHECK(rep.dim == weyl_dim(w));
            // idempotency, exactly
            CHECK(rep.projector * rep.projector == rep.projector);
        }
}

TEST_CASE("dimension is invariant under dualizing the weight") {
    for (int d = 1; d <= 3; ++d)
        for (const auto& w : enumerate_weights(d, 4)) {
            if (r_of(w) > 4 || r_of(dual_weight(w)) > 4) continue;
            CHECK(weyl_dim(w) == weyl_dim(dual_weight(w)));
            CHECK(build_irrep(w).dim == build_irrep(dual_weight(w)).dim);
        }
}

TEST_CASE("projector commutes with torus and unipotent generators") {
    for (const HighestWeight& w :
         {HighestWeight(2, {2, 1, 0}), HighestWeight(2, {1, 1, 0}), HighestWeight(1, {3, 0})}) {
        Irrep rep = build_irrep(w);
        int n = w.d + 1;
        std::vector<Mat<Rational>> gens;
        for (int i = 0; i < n; ++i) {
            Mat<Rational> e = Mat<Rational>::identity(n, Rational(1));
            e(i, i) = Rational(2);
            gens.push_back(e);
        }
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                if (k == l) continue;
                Mat<Rational> u = Mat<Rational>::identity(n, Rational(1));
                u(k, l) = Rational(1);
                gens.push_back(u);
            }
        for (const auto& g : gens) {
            Mat<Rational> gr = tensor_power(g, rep.r);
            CHECK(gr * rep.projector == rep.projector * gr);
        }
    }
}

TEST_CASE("weight grading matches the filtration shape") {
    // standard representation, d = 2
    Irrep std3 = build_irrep(HighestWeight(2, {1, 0, 0}));
    WeightGrading g = weight_grading(std3);
    CHECK(g == WeightGrading{{0, 1}, {1, 2}});

    // exterior square, d = 2
    Irrep wedge = build_irrep(HighestWeight(2, {1, 1, 0}));
    CHECK(weight_grading(wedge) == WeightGrading{{1, 2}, {2, 1}});

    // trivial module
    Irrep triv = build_irrep(HighestWeight(2, {0, 0, 0}));
    CHECK(weight_grading(triv) == WeightGrading{{0, 1}});

    // adjoint-type module, d = 2: levels computed from monomial contents
    Irrep adj = build_irrep(HighestWeight(2, {2, 1, 0}));
    CHECK(weight_grading(adj) == WeightGrading{{1, 2}, {2, 4}, {3, 2}});
}

TEST_CASE("grading keys lie in the stated interval and sum to dim") {
    for (int d = 1; d <= 2; ++d)
        for (const auto& w : enumerate_weights(d, 3)) {
            if (r_of(w) > 4) continue;
            Irrep rep = build_irrep(w);
            WeightGrading g = weight_grading(rep);
            long long total = 0;
            for (const auto& [s, dim] : g) {
                CHECK(s >= rep.r - w.lambda[0]);
                CHECK(s <= rep.r);
                total += dim;
            }
            CHECK(total == rep.dim);
        }
}

TEST_CASE("twisted filtration dimensions are independent of the twist point") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long long> dist(-9, 9);
    for (const HighestWeight& w :
         {HighestWeight(2, {1, 0, 0}), HighestWeight(2, {1, 1, 0}), HighestWeight(2, {2, 1, 0}),
          HighestWeight(1, {2, 0})}) {
        Irrep rep = build_irrep(w);
        WeightGrading g = weight_grading(rep);
        // cumulative dims from the top
        std::map<long long, long long> cumulative;
        for (long long s = rep.r + 1; s >= rep.r - w.lambda[0]; --s) {
            long long c = 0;
            for (const auto& [lvl, dim] : g)
                if (lvl >= s) c += dim;
            cumulative[s] = c;
        }
        auto zero_dims = twist_filtration(rep, std::vector<Rational>(static_cast<size_t>(w.d), Rational(0)));
        CHECK(zero_dims == cumulative);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> z;
            for (int i = 0; i < w.d; ++i) z.emplace_back(dist(rng), 1 + std::abs(dist(rng)));
            CHECK(twist_filtration(rep, z) == cumulative);
        }
        // top step is always zero
        CHECK(cumulative[rep.r + 1] == 0);
    }
}

TEST_CASE("filtration endpoints: bottom step is everything, past-the-top step is zero") {
    for (const HighestWeight& w :
         {HighestWeight(2, {2, 1, 0}), HighestWeight(1, {3, 0}), HighestWeight(2, {0, 0, 0})}) {
        Irrep rep = build_irrep(w);
        CHECK(filtration_step_basis(rep, rep.r - w.lambda[0]).cols() == rep.dim);
        CHECK(filtration_step_basis(rep, rep.r + 1).cols() == 0);
    }
}

TEST_CASE("standard representation filtration step is the span of e_1..e_d") {
    Irrep std3 = build_irrep(HighestWeight(2, {1, 0, 0}));
    Mat<Rational> f1 = filtration_step_basis(std3, 1);
    Mat<Rational> expected(3, 2);
    expected(1, 0) = Rational(1);
    expected(2, 1) = Rational(1);
    CHECK(same_span(f1, expected));
}

TEST_CASE("size bound is enforced with the required dimension in the message") {
    CHECK_THROWS_AS(build_irrep(HighestWeight(1, {13, 0}), 4096), std::invalid_argument);
    try {
        build_irrep(HighestWeight(1, {13, 0}), 4096);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("8192") != std::string::npos);
    }
}
