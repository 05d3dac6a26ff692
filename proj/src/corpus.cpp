#include "stratal/corpus.hpp"

#include "stratal/errors.hpp"
#include "stratal/io.hpp"

#include <algorithm>
#include <cstdlib>

#ifndef STRATAL_DEFAULT_CORPUS_DIR
#define STRATAL_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace stratal {

namespace {

FilteredComplex plain(std::string name, int dim, int vertices, std::vector<Simplex> tops) {
    SpaceDocument doc;
    doc.name = std::move(name);
    doc.dimension = dim;
    for (int v = 0; v < vertices; ++v) doc.vertices.push_back("v" + std::to_string(v));
    doc.maximal_simplices = std::move(tops);
    return load(doc);
}

}  // namespace

FilteredComplex point_pair() { return plain("s0", 0, 2, {{0}, {1}}); }

FilteredComplex polygon(int sides) {
    if (sides < 3) throw DomainError("a polygon needs at least 3 sides");
    std::vector<Simplex> edges;
    for (int i = 0; i < sides; ++i) edges.push_back({i, (i + 1) % sides});
    return plain("s1_" + std::to_string(sides) + "gon", 1, sides, std::move(edges));
}

FilteredComplex tetrahedron_boundary() {
    return plain("s2_tetra", 2, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

FilteredComplex seven_vertex_torus() {
    std::vector<Simplex> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return plain("t2_7v", 2, 7, std::move(tris));
}

FilteredComplex mobius_band() {
    return plain("mobius", 2, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
}

const std::vector<CorpusSpec>& corpus_specs() {
    static const std::vector<CorpusSpec> specs = [] {
        const Rational one(1);
        auto s1 = [] { return polygon(6); };
        std::vector<CorpusSpec> out = {
            {"s0", "two points", [] { return point_pair(); }},
            {"s1_hex", "hexagon, a circle", [s1] { return s1(); }},
            {"s2_tetra", "boundary of the 3-simplex, a 2-sphere", [] { return tetrahedron_boundary(); }},
            {"t2_7v", "7-vertex torus", [] { return seven_vertex_torus(); }},
            {"mobius", "5-triangle Moebius band (non-orientable, with boundary)", [] { return mobius_band(); }},
            {"cone_s0", "cone on two points, apex of codimension one, c = 1",
             [one] { return cone(point_pair(), one); }},
            {"cone_s1_c1", "cone on the hexagon, c = 1", [s1, one] { return cone(s1(), one); }},
            {"cone_s1_c_half", "cone on the hexagon, c = 1/2", [s1] { return cone(s1(), Rational(1, 2)); }},
            {"cone_t2_c1", "cone on the 7-vertex torus, c = 1", [one] { return cone(seven_vertex_torus(), one); }},
            {"susp_s0", "suspension of two points, c = 1 at both poles",
             [one] { return suspension(point_pair(), one, one); }},
            {"susp_s1", "suspension of the hexagon, c = 1 at both poles",
             [s1, one] { return suspension(s1(), one, one); }},
            {"susp_s2", "suspension of the tetrahedron boundary, c = 1 at both poles",
             [one] { return suspension(tetrahedron_boundary(), one, one); }},
            {"susp_t2", "suspension of the 7-vertex torus, c = 1 at both poles",
             [one] { return suspension(seven_vertex_torus(), one, one); }},
            {"cone_cone_s1", "iterated cone on the hexagon, c = 1 at both levels",
             [s1, one] { return cone(cone(s1(), one, "a1"), one, "a2"); }},
            {"susp_susp_s1", "double suspension of the hexagon, c = 1 everywhere",
             [s1, one] { return suspension(suspension(s1(), one, one, "north1", "south1"), one, one, "north2", "south2"); }},
        };
        return out;
    }();
    return specs;
}

std::filesystem::path corpus_dir() {
    if (const char* env = std::getenv("STRATAL_CORPUS_DIR"); env && *env) return env;
    return STRATAL_DEFAULT_CORPUS_DIR;
}

std::vector<std::string> corpus_names(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) throw LoadError("corpus directory " + dir.string() + " not found");
    std::vector<std::string> names;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

FilteredComplex load_corpus_space(const std::filesystem::path& dir, const std::string& name) {
    auto path = dir / (name + ".json");
    if (!std::filesystem::exists(path)) throw LoadError("no corpus space '" + name + "' in " + dir.string());
    return load_space_file(path);
}

std::vector<std::string> write_corpus(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> names;
    for (const auto& spec : corpus_specs()) {
        FilteredComplex k = spec.make().renamed(spec.name);
        Json doc = space_json(k.to_document());
        doc["description"] = spec.description;
        write_json_file(dir / (spec.name + ".json"), doc);
        names.push_back(spec.name);
    }
    return names;
}

}  // namespace stratal
