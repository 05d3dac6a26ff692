#include "stratal/io.hpp"

#include "stratal/errors.hpp"

#include <fstream>
#include <sstream>

namespace stratal {

namespace {

template <class E>
void require(bool ok, const std::string& what) {
    if (!ok) throw E(what);
}

long as_long(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) throw LoadError(where + ": expected an integer");
    return v.get<long>();
}

Simplex parse_simplex(const Json& v, const std::string& where) {
    require<LoadError>(v.is_array(), where + ": expected a list of vertex indices");
    Simplex s;
    for (const auto& x : v) s.push_back(static_cast<int>(as_long(x, where)));
    return s;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw LoadError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& value) {
    std::ofstream out(path);
    if (!out) throw LoadError("cannot write " + path.string());
    out << value.dump(2) << "\n";
}

Rational parse_rational_json(const Json& value) {
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
    throw ConfigError("expected a rational as \"p/q\" string, got " + value.dump());
}

Json rational_json(const Rational& value) { return to_string(value); }

// ---------------------------------------------------------------- spaces

SpaceDocument parse_space(const Json& value) {
    require<LoadError>(value.is_object(), "space file must be a JSON object");
    SpaceDocument doc;
    doc.name = value.value("name", std::string("unnamed"));
    require<LoadError>(value.contains("dimension"), "space file lacks \"dimension\"");
    doc.dimension = static_cast<int>(as_long(value["dimension"], "dimension"));

    require<LoadError>(value.contains("vertices") && value["vertices"].is_array(), "space file lacks \"vertices\" list");
    for (const auto& v : value["vertices"]) {
        if (v.is_string())
            doc.vertices.push_back(v.get<std::string>());
        else if (v.is_number_integer())
            doc.vertices.push_back(std::to_string(v.get<long>()));
        else
            throw LoadError("vertex ids must be strings or integers");
    }

    require<LoadError>(value.contains("maximal_simplices") && value["maximal_simplices"].is_array(),
                       "space file lacks \"maximal_simplices\" list");
    for (const auto& s : value["maximal_simplices"]) doc.maximal_simplices.push_back(parse_simplex(s, "maximal_simplices"));

    if (value.contains("skeleta") && !value["skeleta"].is_null()) {
        const auto& sk = value["skeleta"];
        require<LoadError>(sk.is_object(), "\"skeleta\" must map degrees to simplex lists");
        for (const auto& [key, list] : sk.items()) {
            int j = 0;
            try {
                std::size_t used = 0;
                j = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw LoadError("skeleton key '" + key + "' is not an integer");
            }
            require<LoadError>(list.is_array(), "skeleton " + key + " must be a list");
            auto& gens = doc.skeleta[j];
            for (const auto& s : list) gens.push_back(parse_simplex(s, "skeleton " + key));
        }
    }
    if (value.contains("weights") && !value["weights"].is_null()) {
        try {
            doc.weights = parse_weights(value["weights"]);
        } catch (const ConfigError& e) {
            throw LoadError(e.what());
        }
    }
    if (value.contains("orientation") && !value["orientation"].is_null()) {
        require<LoadError>(value["orientation"].is_array(), "\"orientation\" must be a list of signs");
        std::vector<int> signs;
        for (const auto& s : value["orientation"]) signs.push_back(static_cast<int>(as_long(s, "orientation")));
        doc.orientation = std::move(signs);
    }
    return doc;
}

Json space_json(const SpaceDocument& doc) {
    Json out;
    out["name"] = doc.name;
    out["dimension"] = doc.dimension;
    out["vertices"] = doc.vertices;
    out["maximal_simplices"] = doc.maximal_simplices;
    Json sk = Json::object();
    for (const auto& [j, gens] : doc.skeleta) sk[std::to_string(j)] = gens;
    out["skeleta"] = sk;
    out["weights"] = weights_json(doc.weights);
    if (doc.orientation) out["orientation"] = *doc.orientation;
    return out;
}

FilteredComplex load_space_file(const std::filesystem::path& path) { return load(parse_space(read_json_file(path))); }

// ---------------------------------------------------------------- perversities

Perversity parse_perversity(const Json& value) {
    require<ConfigError>(value.is_object() && value.contains("kind") && value.contains("values"),
                         "perversity must be {\"kind\":..., \"values\":{...}}");
    const std::string kind = value["kind"].get<std::string>();
    const auto& values = value["values"];
    require<ConfigError>(values.is_object(), "perversity values must be an object");
    if (kind == "by-codim") {
        std::map<int, long> m;
        for (const auto& [key, v] : values.items()) {
            require<ConfigError>(v.is_number_integer(), "perversity value for codim " + key + " is not an integer");
            int k = 0;
            try {
                k = std::stoi(key);
            } catch (const std::exception&) {
                throw ConfigError("codimension key '" + key + "' is not an integer");
            }
            m[k] = v.get<long>();
        }
        return Perversity::by_codim(std::move(m));
    }
    if (kind == "per-stratum") {
        std::map<std::string, long> m;
        for (const auto& [key, v] : values.items()) {
            require<ConfigError>(v.is_number_integer(), "perversity value for '" + key + "' is not an integer");
            m[key] = v.get<long>();
        }
        return Perversity::per_stratum(std::move(m));
    }
    throw ConfigError("unknown perversity kind '" + kind + "'");
}

Json perversity_json(const Perversity& p) {
    Json values = Json::object();
    if (p.kind() == Perversity::Kind::by_codim) {
        for (const auto& [k, v] : p.codim_values()) values[std::to_string(k)] = v;
        return {{"kind", "by-codim"}, {"values", values}};
    }
    for (const auto& [id, v] : p.stratum_values()) values[id] = v;
    return {{"kind", "per-stratum"}, {"values", values}};
}

WeightAssignment parse_weights(const Json& value) {
    require<ConfigError>(value.is_object(), "weights must map stratum ids to \"p/q\" strings");
    WeightAssignment w;
    for (const auto& [id, v] : value.items()) {
        Rational c = parse_rational_json(v);
        if (sgn(c) <= 0) throw ConfigError("weight of '" + id + "' must be positive");
        w[id] = c;
    }
    return w;
}

Json weights_json(const WeightAssignment& weights) {
    Json out = Json::object();
    for (const auto& [id, c] : weights) out[id] = rational_json(c);
    return out;
}

// ---------------------------------------------------------------- Hilbert complexes

Vector parse_vector(const Json& value) {
    require<ConfigError>(value.is_array(), "expected a list of rationals");
    Vector v;
    for (const auto& x : value) v.push_back(parse_rational_json(x));
    return v;
}

Json vector_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_json(x));
    return out;
}

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
    return out;
}

FiniteHilbertComplex parse_hilbert(const Json& value) {
    require<ConfigError>(value.is_object() && value.contains("dims") && value.contains("differentials"),
                         "complex must be {\"dims\":[...], \"differentials\":[...]}");
    std::vector<std::size_t> dims;
    for (const auto& d : value["dims"]) {
        require<ConfigError>(d.is_number_integer() && d.get<long>() >= 0, "dims must be nonnegative integers");
        dims.push_back(d.get<std::size_t>());
    }
    std::vector<Matrix> ds;
    const auto& list = value["differentials"];
    require<ConfigError>(list.is_array(), "differentials must be a list of matrices");
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::vector<Vector> rows;
        for (const auto& r : list[i]) rows.push_back(parse_vector(r));
        std::size_t cols = i < dims.size() ? dims[i] : 0;
        ds.push_back(Matrix::from_rows(rows, cols));
    }
    std::optional<std::vector<Matrix>> gram;
    if (value.contains("gram") && !value["gram"].is_null()) {
        gram.emplace();
        for (std::size_t i = 0; i < value["gram"].size(); ++i) {
            std::vector<Vector> rows;
            for (const auto& r : value["gram"][i]) rows.push_back(parse_vector(r));
            gram->push_back(Matrix::from_rows(rows, i < dims.size() ? dims[i] : 0));
        }
    }
    return FiniteHilbertComplex::validate(std::move(dims), std::move(ds), gram);
}

Json hilbert_json(const FiniteHilbertComplex& c) {
    Json ds = Json::array();
    for (int i = 0; i < c.top(); ++i) ds.push_back(matrix_json(c.differential(i)));
    return {{"dims", c.dims()}, {"differentials", ds}};
}

// ---------------------------------------------------------------- reports

Json complex_summary(const FilteredComplex& k) {
    Json counts = Json::array();
    for (int d = 0; d <= k.dimension(); ++d) counts.push_back(k.count(d));
    Json strata = Json::array();
    for (const auto& s : k.strata()) {
        Json e{{"id", s.id}, {"dim", s.dim}, {"codim", s.codim}, {"link_dim", s.link_dim()}, {"singular", s.singular}};
        e["weight"] = s.weight ? rational_json(*s.weight) : Json(nullptr);
        strata.push_back(e);
    }
    return {{"name", k.name()},
            {"dimension", k.dimension()},
            {"simplex_counts", counts},
            {"strata", strata},
            {"subdivisions", k.subdivisions()}};
}

Json l2_report_json(const L2Report& r) {
    Json out{{"max_betti", r.max_betti}, {"hypothesis_used", r.hypothesis_used}};
    out["min_betti"] = r.min_betti ? Json(*r.min_betti) : Json(nullptr);
    out["cutoff"] = r.cutoff ? rational_json(*r.cutoff) : Json(nullptr);
    if (r.p_g) out["p_g"] = perversity_json(*r.p_g);
    if (r.q_g) out["q_g"] = perversity_json(*r.q_g);
    out["plain_coefficients"] = r.plain_coefficients;
    return out;
}

Json duality_report_json(const DualityReport& r) {
    Json out{{"applicable", r.applicable}, {"p", perversity_json(r.p)}, {"dual_p", perversity_json(r.dual_p)}};
    if (!r.applicable) {
        out["reason"] = r.reason;
        return out;
    }
    out["betti_p"] = r.betti_p;
    out["betti_dual"] = r.betti_dual;
    out["passed"] = r.passed;
    return out;
}

Json local_model_json(const LocalModelReport& r) {
    return {{"link", r.link},
            {"f", r.f},
            {"weight", rational_json(r.weight)},
            {"link_vector", r.link_vector},
            {"analytic", r.analytic},
            {"simplicial", r.simplicial},
            {"passed", r.passed}};
}

}  // namespace stratal
