#pragma once

// Finite simplicial complexes with a skeleton filtration X_0 ⊆ ... ⊆ X_{n-1}
// and per-simplex stratum labels. This is the combinatorial model of a
// stratified pseudomanifold used by the intersection-chain engine.
//
// Every simplex carries a level: the least j with the simplex in X_j, or n when
// it lies in no skeleton (the regular part). Strata are the connected pieces
// of each X_j - X_{j-1}; two open simplices of the same level are connected
// when one is a facet of the other.

#include "stratal/linalg.hpp"
#include "stratal/perversity.hpp"
#include "stratal/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stratal {

/// Sorted vertex indices.
using Simplex = std::vector<int>;

struct Stratum {
    std::string id;
    int dim = 0;    ///< j for a stratum of X_j - X_{j-1}
    int codim = 0;  ///< n - j
    bool singular = false;
    std::optional<Rational> weight;

    int link_dim() const noexcept { return codim - 1; }
};

/// Parsed content of a space file, before validation. Skeleton entries that
/// are absent repeat the previous skeleton.
struct SpaceDocument {
    std::string name;
    int dimension = 0;
    std::vector<std::string> vertices;
    std::vector<Simplex> maximal_simplices;
    std::map<int, std::vector<Simplex>> skeleta;
    WeightAssignment weights;
    std::optional<std::vector<int>> orientation;  ///< one sign per maximal simplex
};

class FilteredComplex {
public:
    /// Validates the document and builds the complex without any fullness
    /// remedy. Throws LoadError naming the offending simplex or stratum.
    static FilteredComplex assemble(const SpaceDocument& doc);

    const std::string& name() const noexcept { return name_; }
    int dimension() const noexcept { return n_; }
    const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }

    /// Number of simplices of dimension d (0 outside 0..n).
    std::size_t count(int d) const;
    std::size_t total_count() const;
    const std::vector<Simplex>& simplices(int d) const { return simplices_.at(d); }
    const Simplex& simplex(int d, std::size_t index) const { return simplices_.at(d).at(index); }
    std::optional<std::size_t> find(const Simplex& s) const;
    /// Index of the facet of simplex (d, index) that omits its k-th vertex.
    std::size_t facet(int d, std::size_t index, int k) const { return facets_[d][index * (d + 1) + k]; }

    int level(int d, std::size_t index) const { return level_[d][index]; }
    bool is_regular(int d, std::size_t index) const { return level_[d][index] == n_; }
    int label(int d, std::size_t index) const { return label_[d][index]; }

    const std::vector<Stratum>& strata() const noexcept { return strata_; }
    std::optional<std::size_t> find_stratum(const std::string& id) const;
    std::vector<StratumDatum> singular_strata() const;
    bool has_singular_strata() const;
    /// True when X_{n-1} = X_{n-2}, i.e. there is no codimension-one stratum.
    bool lacks_codim_one() const;
    WeightAssignment weights() const;
    /// Replaces the weights of singular strata. Throws ConfigError for unknown
    /// or regular strata and nonpositive weights.
    FilteredComplex with_weights(const WeightAssignment& weights) const;
    FilteredComplex renamed(std::string name) const;

    /// First simplex outside some X_j whose vertices all lie in X_j.
    std::optional<Simplex> fullness_violation() const;
    bool is_full() const { return !fullness_violation().has_value(); }

    /// Orientation signs from the source document, indexed like simplices(n).
    const std::optional<std::vector<int>>& declared_orientation() const noexcept { return orientation_; }

    /// Number of barycentric subdivisions applied while loading.
    int subdivisions() const noexcept { return subdivisions_; }

    /// Round-trippable document; weights are keyed by the ids a reload derives.
    SpaceDocument to_document() const;

    std::string describe(int d, std::size_t index) const;

private:
    friend FilteredComplex barycentric_subdivide(const FilteredComplex& k);
    friend FilteredComplex load(const SpaceDocument& doc);

    std::string name_;
    int n_ = 0;
    std::vector<std::string> vertex_ids_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> index_;
    std::vector<std::vector<std::size_t>> facets_;
    std::vector<std::vector<int>> level_;
    std::vector<std::vector<int>> label_;
    std::vector<Stratum> strata_;
    std::optional<std::vector<int>> orientation_;
    int subdivisions_ = 0;
};

/// assemble() plus the fullness remedy: up to two barycentric subdivisions,
/// then LoadError. Stratum ids and weights are those of the document.
FilteredComplex load(const SpaceDocument& doc);

/// Boundary map C_i -> C_{i-1} in the lexicographic simplex bases.
SparseMatrix boundary_matrix(const FilteredComplex& k, int i);

/// Ordinary Betti numbers over Q, degrees 0..n.
std::vector<long> betti(const FilteredComplex& k);

/// Euler characteristic from simplex counts.
long euler_characteristic(const FilteredComplex& k);

/// Closed cone on K with a new apex vertex forming a singular stratum of link
/// dimension dim K and weight c. Strata of K extend into the cone keeping their
/// codimension and weight. An empty apex name picks an unused one.
FilteredComplex cone(const FilteredComplex& k, const Rational& weight, std::string apex = {});

/// Two cones on K glued along K, with apexes weighted north and south.
FilteredComplex suspension(const FilteredComplex& k, const Rational& north_weight, const Rational& south_weight,
                           std::string north = {}, std::string south = {});

/// First barycentric subdivision. A flag σ_0 < ... < σ_k becomes a simplex
/// labelled by the stratum of σ_k; stratum ids and weights carry over.
FilteredComplex barycentric_subdivide(const FilteredComplex& k);

struct Orientation {
    bool orientable = false;
    bool has_boundary = false;       ///< some regular (n-1)-simplex has one coface
    std::vector<int> signs;          ///< per n-simplex, when orientable
    std::string obstruction;         ///< when not orientable
};

/// Propagates signs across regular (n-1)-faces. Throws StructureError when a
/// regular (n-1)-simplex has more than two cofaces.
Orientation check_orientation(const FilteredComplex& k);

}  // namespace stratal
