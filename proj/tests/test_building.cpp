#include <doctest.h>

#include <random>
#include <set>

#include "phinforge/building.hpp"

using namespace phinforge;

namespace {

// brute-force subspace census of F_p^n: spans of vector tuples, deduplicated
long long count_proper_subspaces(int n, long long p) {
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    std::vector<std::vector<long long>> vectors;
    for (long long code = 1; code < total; ++code) {
        std::vector<long long> v(static_cast<size_t>(n));
        long long rem = code;
        for (int i = 0; i < n; ++i) {
            v[static_cast<size_t>(i)] = rem % p;
            rem /= p;
        }
        vectors.push_back(v);
    }
    auto span_of = [&](const std::vector<std::vector<long long>>& gens) {
        std::set<std::vector<long long>> span;
        std::vector<long long> zero(static_cast<size_t>(n), 0);
        span.insert(zero);
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<std::vector<long long>> next = span;
            for (const auto& s : span)
                for (const auto& g : gens) {
                    std::vector<long long> sum(static_cast<size_t>(n));
                    for (int i = 0; i < n; ++i)
                        sum[static_cast<size_t>(i)] =
                            (s[static_cast<size_t>(i)] + g[static_cast<size_t>(i)]) % p;
                    if (next.insert(sum).second) grew = true;
                }
            span = next;
        }
        return span;
    };
    std::set<std::set<std::vector<long long>>> spaces;
    for (const auto& v : vectors) spaces.insert(span_of({v}));
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = i + 1; j < vectors.size(); ++j) spaces.insert(span_of({vectors[i], vectors[j]}));
    long long proper = 0;
    for (const auto& s : spaces)
        if (static_cast<long long>(s.size()) > 1 && static_cast<long long>(s.size()) < total) ++proper;
    return proper;
}

Cochain edge_cochain(const BuildingComplex& bc, const std::vector<Rational>& vals) {
    Cochain c = zero_cochain(bc, 1, 1);
    for (size_t i = 0; i < vals.size(); ++i) c.values[i][0] = vals[i];
    return c;
}

}  // namespace

TEST_CASE("lattice canonicalization is idempotent and scaling-invariant") {
    Mat<Rational> g = Mat<Rational>::identity(2, Rational(1));
    g(0, 0) = Rational(2);
    g(0, 1) = Rational(1);
    LatticeClass lc = canonical_lattice(1, 2, g);
    LatticeClass again = canonical_lattice(1, 2, lc.basis);
    CHECK(lc == again);
    LatticeClass scaled = canonical_lattice(1, 2, lc.basis.scaled(Rational(4)));
    CHECK(lc == scaled);
}

TEST_CASE("ball counts for trees") {
    BuildingComplex t2 = ball(1, 2, 1);
    CHECK(t2.vertex_count == 4);
    CHECK(t2.count(1) == 3);
    BuildingComplex t3 = ball(1, 3, 1);
    CHECK(t3.vertex_count == 5);
    CHECK(t3.count(1) == 4);
    // radius 2: 1 + (p+1) + (p+1)p vertices of a (p+1)-regular tree
    BuildingComplex t22 = ball(1, 2, 2);
    CHECK(t22.vertex_count == 1 + 3 + 6);
    CHECK(t22.count(1) == 9);
    CHECK_THROWS_AS(ball(3, 2, 1), std::invalid_argument);
}

TEST_CASE("ball counts for the plane, with the subspace census oracle") {
    BuildingComplex b = ball(2, 2, 1);
    CHECK(b.vertex_count == 15);  // 1 + 14 neighbors
    CHECK(b.vertex_count == 1 + count_proper_subspaces(3, 2));
    // flag pairs among neighbors: 21 line-plane incidences; every triangle
    // here passes through the centre
    CHECK(b.count(1) == 14 + 21);
    CHECK(b.count(2) == 21);

    BuildingComplex b3 = ball(2, 3, 1);
    CHECK(b3.vertex_count == 1 + count_proper_subspaces(3, 3));
}

TEST_CASE("vertex types alternate along edges") {
    BuildingComplex b = ball(2, 2, 1);
    for (const auto& e : b.simplices[1])
        CHECK(b.lattices[static_cast<size_t>(e[0])].type() !=
              b.lattices[static_cast<size_t>(e[1])].type());
    for (const auto& t : b.simplices[2]) {
        std::set<int> types;
        for (int v : t) types.insert(b.lattices[static_cast<size_t>(v)].type());
        CHECK(types.size() == 3);
    }
}

TEST_CASE("coboundary basics on trees and cycles") {
    BuildingComplex star = ball(1, 2, 1);
    Cochain f = zero_cochain(star, 0, 1);
    f.values[0][0] = Rational(1);  // vertex 0 is the centre
    Cochain df = coboundary(f, star);
    int nonzero = 0;
    for (const auto& v : df.values)
        if (!v[0].is_zero()) {
            ++nonzero;
            CHECK((v[0] == Rational(1) || v[0] == Rational(-1)));
        }
    CHECK(nonzero == 3);

    BuildingComplex cyc = cycle_graph(5);
    Cochain c = zero_cochain(cyc, 0, 1);
    for (auto& v : c.values) v[0] = Rational(7);
    CHECK(coboundary(c, cyc).values == zero_cochain(cyc, 1, 1).values);

    Cochain zero = zero_cochain(cyc, 0, 1);
    CHECK(coboundary(zero, cyc).values == zero_cochain(cyc, 1, 1).values);

    Cochain top = zero_cochain(cyc, 1, 1);
    CHECK_THROWS_AS(coboundary(top, cyc), std::invalid_argument);
}

TEST_CASE("coboundary squares to zero in the plane") {
    BuildingComplex b = ball(2, 2, 1);
    Mat<Rational> d0 = coboundary_matrix(b, 0, 1);
    Mat<Rational> d1 = coboundary_matrix(b, 1, 1);
    CHECK((d1 * d0).is_zero());
    // and with 2-dimensional coefficients
    Mat<Rational> d0c = coboundary_matrix(b, 0, 2);
    Mat<Rational> d1c = coboundary_matrix(b, 1, 2);
    CHECK((d1c * d0c).is_zero());
}

TEST_CASE("harmonicity on the star of a tree vertex") {
    BuildingComplex star = ball(1, 2, 1);
    REQUIRE(star.count(1) == 3);
    // only the centre is interior
    CHECK(star.interior_panel == std::vector<int>{0});
    CHECK(is_harmonic(edge_cochain(star, {Rational(1), Rational(1), Rational(-2)}), star));
    CHECK(!is_harmonic(edge_cochain(star, {Rational(1), Rational(1), Rational(1)}), star));
    CHECK(is_harmonic(edge_cochain(star, {Rational(0), Rational(0), Rational(0)}), star));

    BuildingComplex segment = path_graph(2);
    Cochain f = zero_cochain(segment, 1, 1);
    CHECK_THROWS_WITH_AS(is_harmonic(f, segment), "truncation boundary; restrict to interior",
                         std::invalid_argument);
}

TEST_CASE("harmonic cochains are exactly the orthogonal complement of the coboundary image") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> dist(-5, 5);
    for (int n = 3; n <= 6; ++n) {
        BuildingComplex cyc = cycle_graph(n);
        Mat<Rational> delta = coboundary_matrix(cyc, 0, 1);
        for (int trial = 0; trial < 20; ++trial) {
            Cochain f = zero_cochain(cyc, 1, 1);
            Mat<Rational> fv(n, 1);
            for (int e = 0; e < n; ++e) {
                f.values[static_cast<size_t>(e)][0] = Rational(dist(rng));
                fv(e, 0) = f.values[static_cast<size_t>(e)][0];
            }
            bool harmonic = is_harmonic(f, cyc);
            bool orthogonal = (delta.transpose() * fv).is_zero();
            CHECK(harmonic == orthogonal);
        }
    }
}

TEST_CASE("hodge decomposition on cycles and paths") {
    for (int n = 3; n <= 8; ++n) {
        BuildingComplex cyc = cycle_graph(n);
        HodgeDecomposition hd = hodge_decompose(cyc);
        CHECK(hd.harmonic.cols() == 1);
        CHECK(hd.exact.cols() == n - 1);
        // orthogonality under the default inner product
        CHECK((hd.exact.transpose() * hd.harmonic).is_zero());
        TopCohomologyModel model = res_gamma_model(cyc);
        CHECK(model.bijective);
    }
    BuildingComplex path = path_graph(3);
    HodgeDecomposition hd = hodge_decompose(path);
    CHECK(hd.harmonic.cols() == 0);
    CHECK(hd.exact.cols() == 2);
}

TEST_CASE("quotient classes of harmonic cochains") {
    BuildingComplex c4 = cycle_graph(4);
    HodgeDecomposition hd = hodge_decompose(c4);
    Cochain gen = zero_cochain(c4, 1, 1);
    for (int e = 0; e < 4; ++e) gen.values[static_cast<size_t>(e)][0] = hd.harmonic(e, 0);
    auto cls = res_gamma_class(c4, gen);
    bool nonzero = false;
    for (const auto& x : cls)
        if (!x.is_zero()) nonzero = true;
    CHECK(nonzero);
    Cochain zero = zero_cochain(c4, 1, 1);
    for (const auto& x : res_gamma_class(c4, zero)) CHECK(x.is_zero());
}

TEST_CASE("two-dimensional coefficients tensor through the decomposition") {
    BuildingComplex c6 = cycle_graph(6);
    HodgeDecomposition hd = hodge_decompose(c6, 2);
    CHECK(hd.harmonic.cols() == 2);
    CHECK(hd.exact.cols() == 10);
    TopCohomologyModel model = res_gamma_model(c6, 2);
    CHECK(model.bijective);
    CHECK(model.map.rows() == 2);
}

TEST_CASE("degenerate inner products are rejected") {
    BuildingComplex c4 = cycle_graph(4);
    Mat<Rational> bad(4, 4);  // zero Gram matrix
    CHECK_THROWS_WITH_AS(hodge_decompose(c4, 1, &bad), "degenerate inner product",
                         std::invalid_argument);
    // invertible but indefinite
    Mat<Rational> indef = Mat<Rational>::identity(4, Rational(1));
    indef(0, 0) = Rational(-1);
    CHECK_THROWS_AS(hodge_decompose(c4, 1, &indef), std::invalid_argument);
    // a genuine positive definite non-identity product works
    Mat<Rational> pd = Mat<Rational>::identity(4, Rational(2));
    pd(0, 1) = pd(1, 0) = Rational(1);
    HodgeDecomposition hd = hodge_decompose(c4, 1, &pd);
    CHECK(hd.harmonic.cols() + hd.exact.cols() == 4);
}

TEST_CASE("adjacency agrees with the neighbor enumeration") {
    BuildingComplex b = ball(2, 2, 1);
    for (const auto& e : b.simplices[1])
        CHECK(adjacent(b.lattices[static_cast<size_t>(e[0])], b.lattices[static_cast<size_t>(e[1])]));
    CHECK(!adjacent(b.lattices[1], b.lattices[1]));
}
