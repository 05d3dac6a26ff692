#include "oracle.hpp"

#include "stratal/complex.hpp"
#include "stratal/corpus.hpp"
#include "stratal/errors.hpp"

#include <doctest.h>

using namespace stratal;

namespace {

SpaceDocument disk_document() {
    // Square 0-1-2-3 split along 0-2, with centre-free triangulation.
    SpaceDocument doc;
    doc.name = "disk";
    doc.dimension = 2;
    doc.vertices = {"a", "b", "c", "d"};
    doc.maximal_simplices = {{0, 1, 2}, {0, 2, 3}};
    return doc;
}

std::vector<FilteredComplex> samples() {
    return {point_pair(),
            polygon(5),
            tetrahedron_boundary(),
            seven_vertex_torus(),
            mobius_band(),
            cone(polygon(4), 1),
            suspension(polygon(4), 1, 2),
            cone(cone(polygon(3), 1), Rational(1, 2)),
            suspension(seven_vertex_torus(), 1, 1)};
}

void check_boundary_squares_to_zero(const FilteredComplex& k) {
    for (int i = 1; i < k.dimension(); ++i) {
        SparseMatrix dd = multiply(boundary_matrix(k, i), boundary_matrix(k, i + 1));
        for (std::size_t c = 0; c < dd.cols(); ++c) CHECK(dd.column(c).empty());
    }
}

}  // namespace

TEST_CASE("boundary matrix of an edge") {
    SpaceDocument doc;
    doc.dimension = 1;
    doc.vertices = {"x", "y"};
    doc.maximal_simplices = {{0, 1}};
    FilteredComplex k = load(doc);
    SparseMatrix d = boundary_matrix(k, 1);
    CHECK(d.rows() == 2);
    CHECK(d.at(0, 0) == -1);
    CHECK(d.at(1, 0) == 1);
}

TEST_CASE("simplex counts") {
    FilteredComplex t = seven_vertex_torus();
    CHECK(t.count(0) == 7);
    CHECK(t.count(1) == 21);
    CHECK(t.count(2) == 14);
    SparseMatrix d2 = boundary_matrix(t, 2);
    CHECK(d2.cols() == 14);
    CHECK(d2.rows() == 21);

    FilteredComplex c = cone(t, 1);
    CHECK(c.count(0) == 8);
    CHECK(c.count(3) == 14);
    FilteredComplex s = suspension(t, 1, 1);
    CHECK(s.count(0) == 9);
    CHECK(s.count(3) == 28);
    CHECK(s.singular_strata().size() == 2);
}

TEST_CASE("betti numbers against the dense oracle") {
    CHECK(betti(tetrahedron_boundary()) == std::vector<long>{1, 0, 1});
    CHECK(betti(seven_vertex_torus()) == std::vector<long>{1, 2, 1});
    CHECK(betti(point_pair()) == std::vector<long>{2});
    SpaceDocument point;
    point.dimension = 0;
    point.vertices = {"p"};
    point.maximal_simplices = {{0}};
    CHECK(betti(load(point)) == std::vector<long>{1});
    for (const auto& k : samples()) {
        CHECK(betti(k) == oracle::betti(k));
        check_boundary_squares_to_zero(k);
        long chi = 0;
        auto b = betti(k);
        for (std::size_t i = 0; i < b.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * b[i];
        CHECK(chi == euler_characteristic(k));
    }
}

TEST_CASE("cones are contractible, suspensions shift reduced homology") {
    for (const auto& k : samples()) {
        auto c = betti(cone(k, 1));
        CHECK(c[0] == 1);
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] == 0);

        auto b = betti(k);
        auto s = betti(suspension(k, 1, 1));
        // reduced: b~_0 = b_0 - 1
        CHECK(s[0] == 1);
        CHECK(s[1] == b[0] - 1);
        for (std::size_t i = 1; i < b.size(); ++i) CHECK(s[i + 1] == b[i]);
    }
    CHECK(betti(suspension(tetrahedron_boundary(), 1, 1)) == std::vector<long>{1, 0, 0, 1});
    CHECK(betti(suspension(point_pair(), 1, 1)) == std::vector<long>{1, 1});
}

TEST_CASE("cone strata") {
    FilteredComplex c = cone(polygon(6), Rational(1, 2));
    REQUIRE(c.singular_strata().size() == 1);
    const Stratum& apex = c.strata()[*c.find_stratum("d0:apex")];
    CHECK(apex.singular);
    CHECK(apex.link_dim() == 1);
    CHECK(*apex.weight == Rational(1, 2));
    CHECK(c.is_full());

    FilteredComplex point_cone = cone(load([] {
                                          SpaceDocument d;
                                          d.dimension = 0;
                                          d.vertices = {"p"};
                                          d.maximal_simplices = {{0}};
                                          return d;
                                      }()),
                                      1);
    CHECK(point_cone.dimension() == 1);
    CHECK(point_cone.singular_strata().at(0).link_dim == 0);

    // Iterated cones: the old apex becomes an edge stratum of codimension 2.
    FilteredComplex cc = cone(cone(polygon(6), 1, "a1"), 3, "a2");
    auto strata = cc.singular_strata();
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].id == "d0:a2");
    CHECK(strata[0].codim() == 3);
    CHECK(strata[1].id == "d1:a1");
    CHECK(strata[1].codim() == 2);
    CHECK(cc.weights().at("d1:a1") == 1);
    CHECK(cc.weights().at("d0:a2") == 3);
}

TEST_CASE("suspension strata") {
    FilteredComplex s = suspension(suspension(polygon(4), 1, 2, "n1", "s1"), 3, 4, "n2", "s2");
    auto strata = s.singular_strata();
    REQUIRE(strata.size() == 4);
    // One suspended stratum per pole of the inner suspension.
    CHECK(s.weights().at("d0:n2") == 3);
    CHECK(s.weights().at("d0:s2") == 4);
    CHECK(s.weights().at("d1:n1") == 1);
    CHECK(s.weights().at("d1:s1") == 2);
}

TEST_CASE("barycentric subdivision") {
    SpaceDocument edge;
    edge.dimension = 1;
    edge.vertices = {"x", "y"};
    edge.maximal_simplices = {{0, 1}};
    FilteredComplex sd = barycentric_subdivide(load(edge));
    CHECK(sd.count(0) == 3);
    CHECK(sd.count(1) == 2);

    for (const auto& k : samples()) {
        FilteredComplex s = barycentric_subdivide(k);
        CHECK(betti(s) == betti(k));
        CHECK(s.strata().size() == k.strata().size());
        CHECK(s.weights() == k.weights());
        CHECK(s.is_full());
        for (std::size_t i = 0; i < k.strata().size(); ++i) CHECK(s.find_stratum(k.strata()[i].id).has_value());
    }
    FilteredComplex c = barycentric_subdivide(cone(polygon(6), 1));
    CHECK(c.find_stratum("d0:apex").has_value());
    CHECK(c.singular_strata().size() == 1);
}

TEST_CASE("loading validates the filtration") {
    SpaceDocument doc = disk_document();
    CHECK(load(doc).strata().size() == 1);

    SUBCASE("impure") {
        doc.maximal_simplices.push_back({1, 3});
        CHECK_THROWS_AS(load(doc), LoadError);
    }
    SUBCASE("vertex in no simplex") {
        doc.vertices.push_back("e");
        CHECK_THROWS_AS(load(doc), LoadError);
    }
    SUBCASE("index out of range") {
        doc.maximal_simplices.push_back({1, 2, 9});
        CHECK_THROWS_AS(load(doc), LoadError);
    }
    SUBCASE("skeleton simplex too large") {
        doc.skeleta[0] = {{0, 1}};
        CHECK_THROWS_AS(load(doc), LoadError);
    }
    SUBCASE("not nested") {
        doc.skeleta[0] = {{0}};
        doc.skeleta[1] = {{1, 2}};
        CHECK_THROWS_AS(load(doc), LoadError);
    }
    SUBCASE("skeleton lists a non-simplex") {
        doc.skeleta[1] = {{1, 3}};
        CHECK_THROWS_AS(load(doc), LoadError);
    }
    SUBCASE("dense regular part") {
        // The whole disk singular: nothing is a face of a regular triangle.
        doc.dimension = 2;
        doc.skeleta[1] = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}};
        CHECK_NOTHROW(load(doc));
        SpaceDocument flat;
        flat.dimension = 1;
        flat.vertices = {"x", "y", "z"};
        flat.maximal_simplices = {{0, 1}, {1, 2}};
        flat.skeleta[0] = {{0}, {1}, {2}};
        CHECK_NOTHROW(load(flat));
    }
    SUBCASE("weights") {
        doc.skeleta[0] = {{0}};
        doc.weights["d0:a"] = Rational(1, 2);
        CHECK(*load(doc).strata()[0].weight == Rational(1, 2));
        doc.weights["nope"] = 1;
        CHECK_THROWS_AS(load(doc), LoadError);
    }
    SUBCASE("regular stratum weight") {
        doc.weights["d2:a,b,c"] = 1;
        CHECK_THROWS_AS(load(doc), LoadError);
    }
}

TEST_CASE("fullness remedy") {
    SpaceDocument doc = disk_document();
    // a and b are singular points but the edge a-b is regular: X_0 is not full.
    doc.skeleta[0] = {{0}, {1}};
    FilteredComplex k = FilteredComplex::assemble(doc);
    CHECK_FALSE(k.is_full());
    FilteredComplex fixed = load(doc);
    CHECK(fixed.is_full());
    CHECK(fixed.subdivisions() == 1);
    CHECK(fixed.find_stratum("d0:a").has_value());
    CHECK(fixed.find_stratum("d0:b").has_value());
    CHECK(betti(fixed) == betti(k));
}

TEST_CASE("documents round trip with stable stratum ids") {
    for (const auto& k : samples()) {
        SpaceDocument doc = k.to_document();
        FilteredComplex again = load(doc);
        CHECK(again.weights() == k.weights());
        REQUIRE(again.strata().size() == k.strata().size());
        for (std::size_t s = 0; s < k.strata().size(); ++s) CHECK(again.strata()[s].id == k.strata()[s].id);
        CHECK(load(again.to_document()).weights() == k.weights());
    }
}

TEST_CASE("orientation") {
    CHECK(check_orientation(tetrahedron_boundary()).orientable);
    CHECK_FALSE(check_orientation(tetrahedron_boundary()).has_boundary);
    CHECK(check_orientation(seven_vertex_torus()).orientable);
    Orientation m = check_orientation(mobius_band());
    CHECK_FALSE(m.orientable);
    CHECK_FALSE(m.obstruction.empty());
    Orientation d = check_orientation(load(disk_document()));
    CHECK(d.orientable);
    CHECK(d.has_boundary);
    CHECK(check_orientation(suspension(seven_vertex_torus(), 1, 1)).orientable);

    SpaceDocument book;
    book.dimension = 2;
    book.vertices = {"a", "b", "x", "y", "z"};
    book.maximal_simplices = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
    CHECK_THROWS_AS(check_orientation(load(book)), StructureError);
    // Three pages meeting along a singular spine are fine.
    book.skeleta[1] = {{0, 1}};
    CHECK_NOTHROW(check_orientation(load(book)));
}

TEST_CASE("declared orientation is checked") {
    SpaceDocument doc = disk_document();
    // Sorted triangles (a,b,c) and (a,c,d) induce opposite signs on a-c with equal signs.
    doc.orientation = std::vector<int>{1, 1};
    CHECK_NOTHROW(load(doc));
    doc.orientation = std::vector<int>{1, -1};
    CHECK_THROWS_AS(load(doc), LoadError);
    doc.orientation = std::vector<int>{1};
    CHECK_THROWS_AS(load(doc), LoadError);
}
