#include "stratal/chains.hpp"
#include "stratal/corpus.hpp"
#include "stratal/errors.hpp"
#include "stratal/hilbert.hpp"
#include "stratal/io.hpp"
#include "stratal/l2_model.hpp"
#include "stratal/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace stratal;

// JSON crosses the boundary as text; the Python package decodes it.
namespace {

Perversity perversity_arg(const FilteredComplex& k, const std::string& text) {
    Json j = Json::parse(text);
    if (j.is_string() && j.get<std::string>() == "from-weights")
        return perversity_from_weights(k.singular_strata(), k.weights());
    return parse_perversity(j);
}

}  // namespace

PYBIND11_MODULE(_stratal, m) {
    m.doc() = "exact intersection homology and L2 cone formulas";

    static py::exception<Error> base(m, "StratalError");
    py::register_exception<LoadError>(m, "LoadError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ComplexError>(m, "ComplexError", base.ptr());
    py::register_exception<StructureError>(m, "StructureError", base.ptr());

    py::class_<FilteredComplex>(m, "Space")
        .def_property_readonly("name", &FilteredComplex::name)
        .def_property_readonly("dimension", &FilteredComplex::dimension)
        .def_property_readonly("subdivisions", &FilteredComplex::subdivisions)
        .def("count", &FilteredComplex::count)
        .def("summary_json", [](const FilteredComplex& k) { return complex_summary(k).dump(); })
        .def("document_json", [](const FilteredComplex& k) { return space_json(k.to_document()).dump(); })
        .def("__repr__", [](const FilteredComplex& k) {
            return "<Space " + k.name() + " dim=" + std::to_string(k.dimension()) + ">";
        });

    m.def("load_space", [](const std::string& path) { return load_space_file(path); });
    m.def("space_from_json", [](const std::string& text) { return load(parse_space(Json::parse(text))); });
    m.def("corpus_dir", [] { return corpus_dir().string(); });
    m.def("corpus_names", [](const std::string& dir) { return corpus_names(dir); });

    m.def("cone", [](const FilteredComplex& k, const std::string& c) { return cone(k, parse_rational(c)); });
    m.def("suspension", [](const FilteredComplex& k, const std::string& north, const std::string& south) {
        return suspension(k, parse_rational(north), parse_rational(south));
    });
    m.def("subdivide", &barycentric_subdivide);
    m.def("betti", &betti);

    m.def("intersection_betti", [](const FilteredComplex& k, const std::string& perversity) {
        return intersection_betti(k, perversity_arg(k, perversity));
    });
    m.def("duality_check", [](const FilteredComplex& k, const std::string& perversity) {
        return duality_report_json(duality_check(k, perversity_arg(k, perversity))).dump();
    });
    m.def("predict", [](const FilteredComplex& k) { return l2_report_json(theorem_ris_predictions(k)).dump(); });

    m.def("perversity_from_weight",
          [](int link_dim, const std::string& c) { return perversity_from_weight(link_dim, parse_rational(c)); });
    m.def("weights_from_perversity", [](const FilteredComplex& k, const std::string& perversity) {
        return weights_json(weights_from_perversity(parse_perversity(Json::parse(perversity)), k.singular_strata()))
            .dump();
    });
    m.def("cone_max_cohomology", [](const std::vector<long>& link, int f, const std::string& c) {
        return cone_max_cohomology(link, f, parse_rational(c));
    });

    m.def("hilbert_report", [](const std::string& text) {
        FiniteHilbertComplex c = parse_hilbert(Json::parse(text));
        return Json{{"cohomology", cohomology_dims(c)},
                    {"harmonic", harmonic_dims(c)},
                    {"dual_cohomology", dual_complex(c).dual_cohomology},
                    {"index", index_even_odd(c)}}
            .dump();
    });
    m.def("kodaira", [](const std::string& complex_text, int degree, const std::string& vector_text) {
        FiniteHilbertComplex c = parse_hilbert(Json::parse(complex_text));
        KodairaParts p = kodaira_decompose(c, degree, parse_vector(Json::parse(vector_text)));
        return Json{{"harmonic", vector_json(p.harmonic)},
                    {"exact", vector_json(p.exact)},
                    {"coexact", vector_json(p.coexact)}}
            .dump();
    });

    m.def("run_suite", [](const std::string& suite, const std::string& dir) {
        return suite_json(run_suite(suite, dir.empty() ? corpus_dir() : std::filesystem::path(dir))).dump();
    }, py::arg("suite"), py::arg("corpus") = "");
}
