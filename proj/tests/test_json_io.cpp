#include <doctest.h>

#include "phinforge/drinfeld.hpp"
#include "phinforge/json_io.hpp"

using namespace phinforge;

TEST_CASE("module serialization round trip is byte-stable") {
    DrinfeldParams dp(1, FieldParams(2, 1, 2), HighestWeight(1, {1, 0}), 2);
    FilteredPhiNModule m = build_D(dp);
    json j = to_json(m);
    std::string first = j.dump();
    FilteredPhiNModule back = module_from_json(json::parse(first));
    CHECK(back.dim == m.dim);
    CHECK(back.phi == m.phi);
    CHECK(back.nmat == m.nmat);
    CHECK(back.hodge == m.hodge);
    CHECK(back.labels == m.labels);
    CHECK(to_json(back).dump() == first);
}

TEST_CASE("weight and field serialization") {
    HighestWeight w(2, {2, 1, 0});
    CHECK(weight_from_json(to_json(w)) == w);
    FieldParams fp(3, 2, 2);
    FieldParams back = field_params_from_json(to_json(fp));
    CHECK(back == fp);
    PiScalar x(fp, {Rational(1, 2), Rational(-3)});
    CHECK(pi_scalar_from_json(to_json(x), fp) == x);
}

TEST_CASE("complex serialization round trip") {
    BuildingComplex c5 = cycle_graph(5);
    json j = to_json(c5);
    BuildingComplex back = complex_from_json(j);
    CHECK(back.d == c5.d);
    CHECK(back.vertex_count == 5);
    CHECK(back.simplices == c5.simplices);
    CHECK(back.interior_panel == c5.interior_panel);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("log form serialization round trip") {
    LogForm f(2, 3, 2);
    LaurentWindow win = LaurentWindow::constant(2, 3, Rational(3));
    win.add_term({1, -1}, Rational(5, 2));
    f.add_component(3u, win);
    json j = to_json(f);
    LogForm back = log_form_from_json(j);
    CHECK(residue(back) == residue(f));
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("toy datum serialization round trip") {
    LogToyDatum datum = tate_ngon(3);
    json j = to_json(datum);
    LogToyDatum back = datum_from_json(j);
    CHECK(back.dims == datum.dims);
    for (size_t k = 0; k < datum.dtilde.size(); ++k) {
        CHECK(back.dtilde[k] == datum.dtilde[k]);
        CHECK(back.theta[k] == datum.theta[k]);
    }
    CHECK(back.pfilt == datum.pfilt);
    CHECK(back.top_unit == datum.top_unit);
    CHECK(to_json(back).dump() == j.dump());
    // the reserialized datum still verifies
    CHECK(verify_nu_equals_N(back));
    CHECK(verify_resmono(back).holds);
}
