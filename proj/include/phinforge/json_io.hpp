#pragma once

#include <string>

#include <json.hpp>

#include "phinforge/building.hpp"
#include "phinforge/phin.hpp"
#include "phinforge/residue.hpp"
#include "phinforge/scalars.hpp"
#include "phinforge/steenbrink.hpp"
#include "phinforge/weights.hpp"

namespace phinforge {

using nlohmann::json;

// All numeric field values are exact "num/den" strings; dimensions, indices
// and other cardinalities are plain integers.

inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) { return Rational::from_string(j.get<std::string>()); }

inline json to_json(const FieldParams& fp) { return json{{"p", fp.p}, {"e", fp.e}, {"f", fp.f}}; }

inline FieldParams field_params_from_json(const json& j) {
    return FieldParams(j.at("p").get<long long>(), j.at("e").get<int>(), j.at("f").get<int>());
}

inline json to_json(const PiScalar& x) {
    json arr = json::array();
    for (const auto& c : x.coeffs()) arr.push_back(c.to_string());
    return arr;
}

inline PiScalar pi_scalar_from_json(const json& j, FieldParams fp) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(Rational::from_string(c.get<std::string>()));
    return PiScalar(fp, std::move(coeffs));
}

inline json to_json(const Mat<Rational>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline Mat<Rational> rational_matrix_from_json(const json& j) {
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    Mat<Rational> m(rows, cols);
    const json& entries = j.at("entries");
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m(i, c) = Rational::from_string(entries.at(i).at(c).get<std::string>());
    return m;
}

inline json to_json(const HighestWeight& w) { return json{{"d", w.d}, {"lambda", w.lambda}}; }

inline HighestWeight weight_from_json(const json& j) {
    return HighestWeight(j.at("d").get<int>(), j.at("lambda").get<std::vector<long long>>());
}

inline json to_json(const FilteredPhiNModule& m) {
    json phi = json::array();
    for (int i = 0; i < m.dim; ++i) {
        json row = json::array();
        for (int c = 0; c < m.dim; ++c) row.push_back(to_json(m.phi(i, c)));
        phi.push_back(row);
    }
    json n = json::array();
    for (int i = 0; i < m.dim; ++i) {
        json row = json::array();
        for (int c = 0; c < m.dim; ++c) row.push_back(m.nmat(i, c).to_string());
        n.push_back(row);
    }
    json out{{"params", to_json(m.params)},
             {"dim", m.dim},
             {"phi", phi},
             {"n", n},
             {"hodge", m.hodge},
             {"twisted", m.twisted}};
    if (m.has_labels()) {
        json labels = json::array();
        for (const auto& l : m.labels) labels.push_back(json::array({l[0], l[1], l[2], l[3]}));
        out["labels"] = labels;
    }
    return out;
}

inline FilteredPhiNModule module_from_json(const json& j) {
    FilteredPhiNModule m;
    m.params = field_params_from_json(j.at("params"));
    m.dim = j.at("dim").get<int>();
    m.phi = ScalarMatrix(m.dim, m.dim);
    const json& phi = j.at("phi");
    for (int i = 0; i < m.dim; ++i)
        for (int c = 0; c < m.dim; ++c) m.phi(i, c) = pi_scalar_from_json(phi.at(i).at(c), m.params);
    m.nmat = Mat<Rational>(m.dim, m.dim);
    const json& n = j.at("n");
    for (int i = 0; i < m.dim; ++i)
        for (int c = 0; c < m.dim; ++c) m.nmat(i, c) = Rational::from_string(n.at(i).at(c).get<std::string>());
    m.hodge = j.at("hodge").get<std::vector<long long>>();
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels"))
            m.labels.push_back({l.at(0).get<int>(), l.at(1).get<int>(), l.at(2).get<int>(), l.at(3).get<int>()});
    }
    if (j.contains("twisted")) m.twisted = j.at("twisted").get<bool>();
    validate_module(m);
    return m;
}

inline json to_json(const BuildingComplex& bc) {
    json simplices = json::object();
    for (int k = 0; k < static_cast<int>(bc.simplices.size()); ++k)
        simplices[std::to_string(k)] = bc.simplices[static_cast<size_t>(k)];
    return json{{"d", bc.d},
                {"p", bc.p},
                {"vertex_count", bc.vertex_count},
                {"simplices", simplices},
                {"interior_panels", bc.interior_panel}};
}

inline BuildingComplex complex_from_json(const json& j) {
    BuildingComplex bc;
    bc.d = j.at("d").get<int>();
    if (j.contains("p")) bc.p = j.at("p").get<long long>();
    bc.vertex_count = j.at("vertex_count").get<int>();
    bc.simplices.assign(static_cast<size_t>(bc.d) + 1, {});
    const json& simplices = j.at("simplices");
    for (int k = 0; k <= bc.d; ++k) {
        auto key = std::to_string(k);
        if (!simplices.contains(key)) continue;
        for (const auto& tuple : simplices.at(key))
            bc.simplices[static_cast<size_t>(k)].push_back(tuple.get<std::vector<int>>());
    }
    if (j.contains("interior_panels"))
        bc.interior_panel = j.at("interior_panels").get<std::vector<int>>();
    else
        for (int i = 0; i < bc.count(bc.d - 1); ++i) bc.interior_panel.push_back(i);
    return bc;
}

inline json to_json(const LogForm& f) {
    json comps = json::array();
    for (const auto& [mask, window] : f.components) {
        json subset = json::array();
        for (int i = 0; i < f.d; ++i)
            if (mask & (1u << i)) subset.push_back(i + 1);
        json terms = json::array();
        for (const auto& [a, c] : window.terms) terms.push_back(json{{"a", a}, {"c", c.to_string()}});
        comps.push_back(json{{"subset", subset}, {"terms", terms}});
    }
    return json{{"d", f.d}, {"w", f.w}, {"degree", f.degree}, {"components", comps}};
}

inline LogForm log_form_from_json(const json& j) {
    LogForm f(j.at("d").get<int>(), j.at("w").get<int>(), j.at("degree").get<int>());
    for (const auto& comp : j.at("components")) {
        uint32_t mask = 0;
        for (const auto& i : comp.at("subset")) mask |= 1u << (i.get<int>() - 1);
        LaurentWindow window(f.d, f.w);
        for (const auto& term : comp.at("terms"))
            window.add_term(term.at("a").get<std::vector<int>>(),
                            Rational::from_string(term.at("c").get<std::string>()));
        f.add_component(mask, window);
    }
    return f;
}

inline json to_json(const LogToyDatum& datum) {
    json dtilde = json::array(), theta = json::array();
    for (const auto& m : datum.dtilde) dtilde.push_back(to_json(m));
    for (const auto& m : datum.theta) theta.push_back(to_json(m));
    json out{{"dims", datum.dims},
             {"dtilde", dtilde},
             {"theta", theta},
             {"pfilt", datum.pfilt},
             {"level_tags", datum.level_tags}};
    if (datum.has_strata) {
        out["strata"] = json{{"top_level", datum.top_level},
                             {"top_unit", datum.top_unit},
                             {"restrict_top", to_json(datum.restrict_top)},
                             {"window", datum.window}};
    }
    return out;
}

inline LogToyDatum datum_from_json(const json& j) {
    LogToyDatum datum;
    datum.dims = j.at("dims").get<std::vector<int>>();
    for (const auto& m : j.at("dtilde")) datum.dtilde.push_back(rational_matrix_from_json(m));
    for (const auto& m : j.at("theta")) datum.theta.push_back(rational_matrix_from_json(m));
    datum.pfilt = j.at("pfilt").get<std::vector<std::vector<std::vector<int>>>>();
    if (j.contains("level_tags"))
        datum.level_tags = j.at("level_tags").get<std::vector<std::vector<int>>>();
    if (j.contains("strata")) {
        const json& s = j.at("strata");
        datum.has_strata = true;
        datum.top_level = s.at("top_level").get<int>();
        datum.top_unit = s.at("top_unit").get<std::vector<int>>();
        datum.restrict_top = rational_matrix_from_json(s.at("restrict_top"));
        datum.window = s.at("window").get<int>();
    }
    return datum;
}

}  // namespace phinforge
