#include "hive/json_io.hpp"

#include <cctype>

namespace hive {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw JsonSchemaError(std::string(what) + ": " + e.what());
    }
}

std::string variable_key(int rank, int id) {
    return rank == 0 ? "v" + std::to_string(id) : variable_name(rank, id);
}

int variable_from_key(const std::string& key, int rank) {
    auto bad = [&] { return JsonSchemaError("unknown variable \"" + key + "\""); };
    if (rank == 0) {
        if (key.size() < 2 || key[0] != 'v') throw bad();
        for (std::size_t k = 1; k < key.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(key[k]))) throw bad();
        return std::stoi(key.substr(1));
    }
    if (key.size() != 3 || (key[0] != 'x' && key[0] != 'y') || !std::isdigit(static_cast<unsigned char>(key[1])) ||
        !std::isdigit(static_cast<unsigned char>(key[2])))
        throw bad();
    const int i = key[1] - '0', j = key[2] - '0';
    if (i < 1 || i > rank || j < 1 || j > rank) throw bad();
    return variable_id(rank, key[0] == 'x' ? VarKind::X : VarKind::Y, i, j);
}

mpz_class integer_from_string(const std::string& s) {
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw JsonSchemaError("not a decimal integer: \"" + s + "\"");
    return v;
}

int rank_field(const json& j, int lo, int hi) {
    int n = j.at("n").get<int>();
    if (n < lo || n > hi) throw JsonSchemaError("n = " + std::to_string(n) + " out of range");
    return n;
}

} // namespace

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    return guarded("partition", [&] {
        try {
            return Partition(j.get<std::vector<int>>());
        } catch (const std::invalid_argument& e) {
            throw JsonSchemaError(std::string("partition: ") + e.what());
        }
    });
}

json to_json(const Boundary& b) {
    return {{"lambda", to_json(b.lambda)}, {"mu", to_json(b.mu)}, {"nu", to_json(b.nu)}};
}

Boundary boundary_from_json(const json& j) {
    return guarded("boundary", [&] {
        return Boundary{partition_from_json(j.at("lambda")), partition_from_json(j.at("mu")),
                        partition_from_json(j.at("nu"))};
    });
}

json to_json(const Hive& h) { return {{"n", h.rank()}, {"rows", h.array().rows()}}; }

Hive hive_from_json(const json& j) {
    return guarded("hive", [&] {
        const int n = rank_field(j, 1, 64);
        auto rows = j.at("rows").get<std::vector<std::vector<Entry>>>();
        TriangularArray t;
        try {
            t = TriangularArray::from_rows(rows);
        } catch (const ShapeError& e) {
            throw JsonSchemaError(std::string("hive: ") + e.what());
        }
        if (t.rank() != n) throw JsonSchemaError("hive: rows do not match n = " + std::to_string(n));
        return Hive::make(t);
    });
}

json to_json(const LRTableau& t) {
    return {{"n", t.rank()},
            {"outer", to_json(t.shape().outer)},
            {"inner", to_json(t.shape().inner)},
            {"rows", t.rows()}};
}

LRTableau tableau_from_json(const json& j) {
    return guarded("tableau", [&] {
        const int n = rank_field(j, 1, 64);
        SkewShape shape(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")));
        auto rows = j.at("rows").get<Filling>();
        try {
            return make_tableau(n, shape, rows);
        } catch (const ShapeError& e) {
            throw JsonSchemaError(std::string("tableau: ") + e.what());
        }
    });
}

json monomial_to_json(const Monomial& m, int rank) {
    json out = json::object();
    for (auto [id, e] : m.factors()) out[variable_key(rank, id)] = e;
    return out;
}

Monomial monomial_from_json(const json& j, int rank) {
    return guarded("monomial", [&] {
        if (!j.is_object()) throw JsonSchemaError("monomial: expected an object");
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [key, e] : j.items()) pairs.emplace_back(variable_from_key(key, rank), e.get<int>());
        return Monomial::from_pairs(pairs);
    });
}

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"coeff", c.get_str()}, {"exps", monomial_to_json(m, p.rank())}});
    return {{"rank", p.rank()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
    return guarded("polynomial", [&] {
        const int rank = j.at("rank").get<int>();
        if (rank < 0 || rank > 9) throw JsonSchemaError("polynomial: rank out of range");
        std::vector<Term> terms;
        for (const auto& t : j.at("terms"))
            terms.push_back({monomial_from_json(t.at("exps"), rank),
                             integer_from_string(t.at("coeff").get<std::string>())});
        return Polynomial::from_terms(rank, terms);
    });
}

json to_json(const HighestWeightVector& v) {
    return {{"boundary", to_json(v.boundary)},
            {"hive", to_json(v.hive)},
            {"decomposition", v.decomposition},
            {"polynomial", to_json(v.polynomial)},
            {"initial", monomial_to_json(v.initial, v.hive.rank())}};
}

HighestWeightVector hwv_from_json(const json& j) {
    return guarded("hwv", [&] {
        HighestWeightVector v{boundary_from_json(j.at("boundary")), hive_from_json(j.at("hive")),
                              j.at("decomposition").get<std::vector<int>>(),
                              polynomial_from_json(j.at("polynomial")), Monomial{}};
        v.initial = monomial_from_json(j.at("initial"), v.hive.rank());
        if (v.boundary != v.hive.boundary()) throw JsonSchemaError("hwv: boundary differs from the hive");
        if (v.polynomial.rank() != v.hive.rank()) throw JsonSchemaError("hwv: polynomial rank differs");
        if (v.polynomial.is_zero() || initial_monomial(v.polynomial) != v.initial)
            throw JsonSchemaError("hwv: initial monomial differs from the polynomial");
        return v;
    });
}

json to_json(const ConePresentation& p) {
    json basis = json::array(), relations = json::array();
    for (const auto& h : p.basis) basis.push_back(to_json(h));
    for (const auto& r : p.relations) relations.push_back({{"name", r.name}, {"left", r.left}, {"right", r.right}});
    return {{"n", p.n}, {"basis", basis}, {"degrees", p.degrees}, {"relations", relations}};
}

ConePresentation presentation_from_json(const json& j) {
    return guarded("presentation", [&] {
        ConePresentation p;
        p.n = rank_field(j, 1, 64);
        for (const auto& h : j.at("basis")) {
            p.basis.push_back(hive_from_json(h));
            if (p.basis.back().rank() != p.n) throw JsonSchemaError("presentation: basis hive of wrong rank");
        }
        p.degrees = j.at("degrees").get<std::vector<int>>();
        if (p.degrees.size() != p.basis.size()) throw JsonSchemaError("presentation: degree count differs");
        for (std::size_t k = 0; k < p.basis.size(); ++k)
            if (p.basis[k].degree() != p.degrees[k]) throw JsonSchemaError("presentation: wrong degree");
        const int m = static_cast<int>(p.basis.size());
        for (const auto& r : j.at("relations")) {
            BinomialRelation rel{r.at("name").get<std::string>(), r.at("left").get<std::vector<int>>(),
                                 r.at("right").get<std::vector<int>>()};
            for (const auto* side : {&rel.left, &rel.right})
                for (int i : *side)
                    if (i < 1 || i > m) throw JsonSchemaError("presentation: index out of range");
            p.relations.push_back(std::move(rel));
        }
        return p;
    });
}

json series_to_json(int n, const SeriesPrefix& s) {
    json cs = json::array();
    for (const auto& c : s.coefficients) cs.push_back(c.get_str());
    return {{"n", n}, {"coefficients", cs}};
}

SeriesPrefix series_from_json(const json& j) {
    return guarded("series", [&] {
        SeriesPrefix s;
        for (const auto& c : j.at("coefficients")) s.coefficients.push_back(integer_from_string(c.get<std::string>()));
        return s;
    });
}

json to_json(const CheckResult& r) { return {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}}; }

} // namespace hive
