#include "codiff/json_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace codiff {

json to_json(const Rational& r) {
    return json{{"num", boost::multiprecision::numerator(r).str()},
                {"den", boost::multiprecision::denominator(r).str()}};
}

Rational rational_from_json(const json& j) {
    const Integer num(j.at("num").get<std::string>());
    const Integer den(j.at("den").get<std::string>());
    return make_rational(num, den);
}

json to_json(const Polynomial& p) {
    const std::vector<std::string> vars = p.variables();
    json terms = json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        std::vector<int> exps(vars.size(), 0);
        for (const auto& [name, e] : mono) {
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (vars[i] == name) exps[i] = e;
            }
        }
        terms.push_back(json{{"exps", exps}, {"coeff", to_json(coeff)}});
    }
    return json{{"vars", vars}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
    const std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    Polynomial p;
    for (const json& term : j.at("terms")) {
        const std::vector<int> exps = term.at("exps").get<std::vector<int>>();
        if (exps.size() != vars.size()) {
            throw std::invalid_argument("polynomial JSON: exps/vars length mismatch");
        }
        Polynomial m(rational_from_json(term.at("coeff")));
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const Polynomial v = Polynomial::variable(vars[i]);
            for (int e = 0; e < exps[i]; ++e) m *= v;
        }
        p += m;
    }
    return p;
}

json to_json(const GradedSpace& s) { return json{{"even", s.even_dim}, {"odd", s.odd_dim}}; }

GradedSpace space_from_json(const json& j) {
    return GradedSpace{j.at("even").get<int>(), j.at("odd").get<int>()};
}

namespace {

template <class R, class CoeffOut>
json coderivation_to_json(const Coderivation<R>& d, CoeffOut&& coeff_out) {
    json terms = json::array();
    for (const auto& [key, c] : d.terms()) {
        terms.push_back(
            json{{"word", key.word}, {"target", key.target}, {"coeff", coeff_out(c)}});
    }
    return json{{"space", to_json(d.space())}, {"terms", terms}};
}

template <class R, class CoeffIn>
Coderivation<R> coderivation_from(const json& j, CoeffIn&& coeff_in) {
    Coderivation<R> d(space_from_json(j.at("space")));
    for (const json& term : j.at("terms")) {
        d.add_term(term.at("word").get<Word>(), term.at("target").get<int>(),
                   coeff_in(term.at("coeff")));
    }
    return d;
}

}  // namespace

json to_json(const Coderivation<Rational>& d) {
    return coderivation_to_json(d, [](const Rational& c) { return to_json(c); });
}

json to_json(const Coderivation<Polynomial>& d) {
    return coderivation_to_json(d, [](const Polynomial& c) { return to_json(c); });
}

Coderivation<Rational> coderivation_from_json(const json& j) {
    return coderivation_from<Rational>(j, rational_from_json);
}

Coderivation<Polynomial> poly_coderivation_from_json(const json& j) {
    return coderivation_from<Polynomial>(j, polynomial_from_json);
}

json to_json(const CohomologyReport& r) {
    json h = json::array();
    json z = json::array();
    json b = json::array();
    for (const auto& deg : r.per_degree) {
        h.push_back(json{{"even", deg.h.even}, {"odd", deg.h.odd}});
        z.push_back(json{{"even", deg.z.even}, {"odd", deg.z.odd}});
        b.push_back(json{{"even", deg.b.even}, {"odd", deg.b.odd}});
    }
    return json{{"h", h}, {"z", z}, {"b", b}};
}

json to_json(const QMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

QMatrix qmatrix_from_json(const json& j) {
    const int rows = static_cast<int>(j.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    QMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j.at(r).size()) != cols) {
            throw std::invalid_argument("matrix JSON: ragged rows");
        }
        for (int c = 0; c < cols; ++c) m.at(r, c) = rational_from_json(j.at(r).at(c));
    }
    return m;
}

json to_json(const LinearAutomorphism& g) { return json{{"matrix", to_json(g.matrix())}}; }

LinearAutomorphism automorphism_from_json(const json& j, const GradedSpace& s) {
    return LinearAutomorphism(s, qmatrix_from_json(j.at("matrix")));
}

json to_json(const ExtensionDatum& e) {
    return json{{"space", to_json(e.space)}, {"M", e.m_indices},   {"W", e.w_indices},
                {"delta", to_json(e.delta)}, {"mu", to_json(e.mu)},
                {"lambda", to_json(e.lambda)}, {"psi", to_json(e.psi)}};
}

ExtensionDatum extension_from_json(const json& j) {
    ExtensionDatum e;
    e.space = space_from_json(j.at("space"));
    e.m_indices = j.at("M").get<std::vector<int>>();
    e.w_indices = j.at("W").get<std::vector<int>>();
    e.delta = coderivation_from_json(j.at("delta"));
    e.mu = coderivation_from_json(j.at("mu"));
    e.lambda = coderivation_from_json(j.at("lambda"));
    e.psi = coderivation_from_json(j.at("psi"));
    e.validate();
    return e;
}

json to_json(const DeformationState& s) {
    json relations = json::array();
    for (const Polynomial& g : s.relations) relations.push_back(to_json(g));
    json infinitesimal = json::array();
    for (const auto& rep : s.infinitesimal) infinitesimal.push_back(to_json(rep));
    return json{{"base", to_json(s.base)},
                {"parameters", s.parameters},
                {"infinitesimal", infinitesimal},
                {"current", to_json(s.current)},
                {"order", s.order},
                {"relations", relations}};
}

}  // namespace codiff
