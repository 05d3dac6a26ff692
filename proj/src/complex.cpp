#include "stratal/complex.hpp"

#include "stratal/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace stratal {

namespace {

std::string join_names(const Simplex& s, const std::vector<std::string>& names, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += sep;
        out += names.at(s[i]);
    }
    return out;
}

std::string show(const Simplex& s, const std::vector<std::string>& names) {
    return "{" + join_names(s, names, ",") + "}";
}

// All nonempty faces of s, including s.
template <class F>
void for_each_face(const Simplex& s, F&& f) {
    const std::size_t m = s.size();
    Simplex face;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        face.clear();
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (1u << b)) face.push_back(s[b]);
        f(face);
    }
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

std::string unused_name(const std::vector<std::string>& names, const std::string& base) {
    auto taken = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
    if (!taken(base)) return base;
    for (int k = 1;; ++k)
        if (!taken(base + std::to_string(k))) return base + std::to_string(k);
}

// First simplex carrying each stratum label, as (dim, index).
std::vector<std::pair<int, std::size_t>> stratum_representatives(const FilteredComplex& k) {
    std::vector<std::pair<int, std::size_t>> reps(k.strata().size(), {-1, 0});
    for (int d = 0; d <= k.dimension(); ++d)
        for (std::size_t i = 0; i < k.count(d); ++i) {
            auto& r = reps[k.label(d, i)];
            if (r.first < 0) r = {d, i};
        }
    return reps;
}

// Moves weights of `source` strata onto `target` strata through a shared
// simplex (vertex indices of source are a prefix of those of target).
WeightAssignment transfer_weights(const FilteredComplex& source, const FilteredComplex& target) {
    WeightAssignment out;
    auto reps = stratum_representatives(source);
    for (std::size_t s = 0; s < source.strata().size(); ++s) {
        const auto& stratum = source.strata()[s];
        if (!stratum.weight) continue;
        auto idx = target.find(source.simplex(reps[s].first, reps[s].second));
        if (!idx) throw LoadError("internal: stratum representative lost in construction");
        int d = reps[s].first;
        out[target.strata()[target.label(d, *idx)].id] = *stratum.weight;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- assemble

FilteredComplex FilteredComplex::assemble(const SpaceDocument& doc) {
    FilteredComplex k;
    k.name_ = doc.name;
    k.n_ = doc.dimension;
    const int n = k.n_;
    if (n < 0) throw LoadError("dimension must be >= 0");
    if (doc.vertices.empty()) throw LoadError("space has no vertices");
    {
        std::set<std::string> seen;
        for (const auto& v : doc.vertices)
            if (!seen.insert(v).second) throw LoadError("duplicate vertex id '" + v + "'");
    }
    k.vertex_ids_ = doc.vertices;
    const auto& names = k.vertex_ids_;
    const int nv = static_cast<int>(names.size());

    std::vector<std::set<Simplex>> faces(n + 1);
    for (Simplex m : doc.maximal_simplices) {
        for (int v : m)
            if (v < 0 || v >= nv) throw LoadError("maximal simplex refers to vertex index " + std::to_string(v));
        std::sort(m.begin(), m.end());
        if (std::adjacent_find(m.begin(), m.end()) != m.end())
            throw LoadError("maximal simplex " + show(m, names) + " repeats a vertex");
        if (static_cast<int>(m.size()) != n + 1)
            throw LoadError("maximal simplex " + show(m, names) + " has dimension " + std::to_string(m.size() - 1) +
                            ", expected " + std::to_string(n) + " (purity)");
        for_each_face(m, [&](const Simplex& f) { faces[f.size() - 1].insert(f); });
    }
    for (int v = 0; v < nv; ++v)
        if (!faces[0].contains(Simplex{v}))
            throw LoadError("vertex '" + names[v] + "' lies in no maximal simplex (purity)");

    k.simplices_.resize(n + 1);
    k.index_.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
        k.simplices_[d].assign(faces[d].begin(), faces[d].end());
        for (std::size_t i = 0; i < k.simplices_[d].size(); ++i) k.index_[d].emplace(k.simplices_[d][i], i);
    }
    k.facets_.resize(n + 1);
    for (int d = 1; d <= n; ++d) {
        auto& out = k.facets_[d];
        out.reserve(k.simplices_[d].size() * (d + 1));
        for (const auto& s : k.simplices_[d])
            for (int j = 0; j <= d; ++j) {
                Simplex f = s;
                f.erase(f.begin() + j);
                out.push_back(k.index_[d - 1].at(f));
            }
    }

    // Levels from the skeleta.
    for (const auto& [j, _] : doc.skeleta)
        if (j < 0 || j >= n)
            throw LoadError("skeleton X_" + std::to_string(j) + " outside 0.." + std::to_string(n - 1));
    k.level_.assign(n + 1, {});
    for (int d = 0; d <= n; ++d) k.level_[d].assign(k.simplices_[d].size(), n);
    std::vector<std::vector<bool>> previous(n + 1);
    for (int d = 0; d <= n; ++d) previous[d].assign(k.simplices_[d].size(), false);
    const std::vector<Simplex>* generators = nullptr;
    static const std::vector<Simplex> none;
    for (int j = 0; j < n; ++j) {
        if (auto it = doc.skeleta.find(j); it != doc.skeleta.end()) generators = &it->second;
        std::vector<std::vector<bool>> member(n + 1);
        for (int d = 0; d <= n; ++d) member[d].assign(k.simplices_[d].size(), false);
        for (Simplex g : generators ? *generators : none) {
            std::sort(g.begin(), g.end());
            for (int v : g)
                if (v < 0 || v >= nv) throw LoadError("skeleton X_" + std::to_string(j) + " refers to vertex index " +
                                                      std::to_string(v));
            if (!k.find(g)) throw LoadError("skeleton X_" + std::to_string(j) + " lists " + show(g, names) +
                                            ", which is not a simplex of the space");
            if (static_cast<int>(g.size()) - 1 > j)
                throw LoadError("skeleton X_" + std::to_string(j) + " contains " + show(g, names) + " of dimension " +
                                std::to_string(g.size() - 1));
            for_each_face(g, [&](const Simplex& f) { member[f.size() - 1][k.index_[f.size() - 1].at(f)] = true; });
        }
        for (int d = 0; d <= n; ++d)
            for (std::size_t i = 0; i < member[d].size(); ++i) {
                if (previous[d][i] && !member[d][i])
                    throw LoadError("skeleta not nested: " + show(k.simplices_[d][i], names) + " lies in X_" +
                                    std::to_string(j - 1) + " but not in X_" + std::to_string(j));
                if (member[d][i] && k.level_[d][i] == n) k.level_[d][i] = j;
            }
        previous = std::move(member);
    }

    // Strata: components of each level under the facet relation.
    std::vector<std::size_t> offset(n + 2, 0);
    for (int d = 0; d <= n; ++d) offset[d + 1] = offset[d] + k.simplices_[d].size();
    UnionFind uf(offset[n + 1]);
    for (int d = 1; d <= n; ++d)
        for (std::size_t i = 0; i < k.simplices_[d].size(); ++i)
            for (int j = 0; j <= d; ++j) {
                std::size_t f = k.facet(d, i, j);
                if (k.level_[d][i] == k.level_[d - 1][f]) uf.unite(offset[d] + i, offset[d - 1] + f);
            }
    struct Component {
        int level;
        Simplex smallest;
        bool has_top = false;  // contains a simplex whose dimension equals its level
    };
    std::map<std::size_t, Component> components;
    for (int d = 0; d <= n; ++d)
        for (std::size_t i = 0; i < k.simplices_[d].size(); ++i) {
            std::size_t root = uf.find(offset[d] + i);
            auto [it, inserted] = components.try_emplace(root, Component{k.level_[d][i], k.simplices_[d][i]});
            if (!inserted && k.simplices_[d][i] < it->second.smallest) it->second.smallest = k.simplices_[d][i];
            if (d == k.level_[d][i]) it->second.has_top = true;
        }
    std::vector<std::pair<std::size_t, Component>> ordered(components.begin(), components.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return std::tie(a.second.level, a.second.smallest) < std::tie(b.second.level, b.second.smallest);
    });
    std::map<std::size_t, int> stratum_of_root;
    for (const auto& [root, c] : ordered) {
        if (!c.has_top)
            throw LoadError("stratum of X_" + std::to_string(c.level) + " through " + show(c.smallest, names) +
                            " has no " + std::to_string(c.level) + "-simplex");
        Stratum s;
        s.id = "d" + std::to_string(c.level) + ":" + join_names(c.smallest, names, ",");
        s.dim = c.level;
        s.codim = n - c.level;
        s.singular = c.level < n;
        stratum_of_root[root] = static_cast<int>(k.strata_.size());
        k.strata_.push_back(std::move(s));
    }
    k.label_.assign(n + 1, {});
    for (int d = 0; d <= n; ++d) {
        k.label_[d].resize(k.simplices_[d].size());
        for (std::size_t i = 0; i < k.simplices_[d].size(); ++i)
            k.label_[d][i] = stratum_of_root.at(uf.find(offset[d] + i));
    }

    // Density of the regular part: every simplex is a face of a regular n-simplex.
    {
        std::vector<std::vector<bool>> covered(n + 1);
        for (int d = 0; d <= n; ++d) covered[d].assign(k.simplices_[d].size(), false);
        for (std::size_t i = 0; i < k.simplices_[n].size(); ++i)
            if (k.level_[n][i] == n) covered[n][i] = true;
        for (int d = n; d >= 1; --d)
            for (std::size_t i = 0; i < covered[d].size(); ++i)
                if (covered[d][i])
                    for (int j = 0; j <= d; ++j) covered[d - 1][k.facet(d, i, j)] = true;
        for (int d = 0; d <= n; ++d)
            for (std::size_t i = 0; i < covered[d].size(); ++i)
                if (!covered[d][i])
                    throw LoadError("simplex " + show(k.simplices_[d][i], names) +
                                    " is not a face of any regular simplex (density)");
    }

    for (const auto& [id, w] : doc.weights) {
        auto s = k.find_stratum(id);
        if (!s) throw LoadError("weight given for unknown stratum '" + id + "'");
        if (!k.strata_[*s].singular) throw LoadError("weight given for regular stratum '" + id + "'");
        if (sgn(w) <= 0) throw LoadError("weight of stratum '" + id + "' must be positive");
        k.strata_[*s].weight = w;
    }

    if (doc.orientation) {
        const auto& signs = *doc.orientation;
        if (signs.size() != doc.maximal_simplices.size())
            throw LoadError("orientation needs one sign per maximal simplex");
        std::vector<int> per_simplex(k.simplices_[n].size(), 0);
        for (std::size_t m = 0; m < signs.size(); ++m) {
            if (signs[m] != 1 && signs[m] != -1) throw LoadError("orientation signs must be +1 or -1");
            Simplex s = doc.maximal_simplices[m];
            std::sort(s.begin(), s.end());
            per_simplex[k.index_[n].at(s)] = signs[m];
        }
        if (n >= 1) {
            std::vector<int> induced(k.simplices_[n - 1].size(), 0);
            std::vector<int> cofaces(k.simplices_[n - 1].size(), 0);
            for (std::size_t i = 0; i < k.simplices_[n].size(); ++i)
                for (int j = 0; j <= n; ++j) {
                    std::size_t f = k.facet(n, i, j);
                    induced[f] += per_simplex[i] * (j % 2 == 0 ? 1 : -1);
                    ++cofaces[f];
                }
            for (std::size_t f = 0; f < induced.size(); ++f)
                if (k.level_[n - 1][f] == n && cofaces[f] == 2 && induced[f] != 0)
                    throw LoadError("declared orientation is incoherent across " + show(k.simplices_[n - 1][f], names));
        }
        k.orientation_ = std::move(per_simplex);
    }
    return k;
}

// ---------------------------------------------------------------- queries

std::size_t FilteredComplex::count(int d) const {
    if (d < 0 || d > n_) return 0;
    return simplices_[d].size();
}

std::size_t FilteredComplex::total_count() const {
    std::size_t total = 0;
    for (const auto& s : simplices_) total += s.size();
    return total;
}

std::optional<std::size_t> FilteredComplex::find(const Simplex& s) const {
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > n_) return std::nullopt;
    auto it = index_[d].find(s);
    if (it == index_[d].end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FilteredComplex::find_stratum(const std::string& id) const {
    for (std::size_t s = 0; s < strata_.size(); ++s)
        if (strata_[s].id == id) return s;
    return std::nullopt;
}

std::vector<StratumDatum> FilteredComplex::singular_strata() const {
    std::vector<StratumDatum> out;
    for (const auto& s : strata_)
        if (s.singular) out.push_back({s.id, s.link_dim()});
    return out;
}

bool FilteredComplex::has_singular_strata() const {
    return std::any_of(strata_.begin(), strata_.end(), [](const Stratum& s) { return s.singular; });
}

bool FilteredComplex::lacks_codim_one() const {
    return std::none_of(strata_.begin(), strata_.end(), [](const Stratum& s) { return s.singular && s.codim == 1; });
}

WeightAssignment FilteredComplex::weights() const {
    WeightAssignment out;
    for (const auto& s : strata_)
        if (s.weight) out[s.id] = *s.weight;
    return out;
}

FilteredComplex FilteredComplex::with_weights(const WeightAssignment& weights) const {
    FilteredComplex k = *this;
    for (auto& s : k.strata_) s.weight.reset();
    for (const auto& [id, w] : weights) {
        auto s = k.find_stratum(id);
        if (!s) throw ConfigError("weight given for unknown stratum '" + id + "'");
        if (!k.strata_[*s].singular) throw ConfigError("weight given for regular stratum '" + id + "'");
        if (sgn(w) <= 0) throw ConfigError("weight of stratum '" + id + "' must be positive");
        k.strata_[*s].weight = w;
    }
    return k;
}

FilteredComplex FilteredComplex::renamed(std::string name) const {
    FilteredComplex k = *this;
    k.name_ = std::move(name);
    return k;
}

std::optional<Simplex> FilteredComplex::fullness_violation() const {
    for (int d = 1; d <= n_; ++d)
        for (std::size_t i = 0; i < simplices_[d].size(); ++i) {
            int highest_vertex_level = 0;
            for (int v : simplices_[d][i]) highest_vertex_level = std::max(highest_vertex_level, level_[0][v]);
            if (level_[d][i] > highest_vertex_level) return simplices_[d][i];
        }
    return std::nullopt;
}

std::string FilteredComplex::describe(int d, std::size_t index) const { return show(simplex(d, index), vertex_ids_); }

SpaceDocument FilteredComplex::to_document() const {
    SpaceDocument doc;
    doc.name = name_;
    doc.dimension = n_;
    doc.vertices = vertex_ids_;
    doc.maximal_simplices = simplices_[n_];
    for (int j = 0; j < n_; ++j) {
        std::vector<std::vector<bool>> dominated(n_ + 1);
        for (int d = 0; d <= n_; ++d) dominated[d].assign(simplices_[d].size(), false);
        for (int d = 1; d <= n_; ++d)
            for (std::size_t i = 0; i < simplices_[d].size(); ++i)
                if (level_[d][i] <= j)
                    for (int k = 0; k <= d; ++k) dominated[d - 1][facet(d, i, k)] = true;
        std::vector<Simplex> gens;
        for (int d = 0; d <= n_; ++d)
            for (std::size_t i = 0; i < simplices_[d].size(); ++i)
                if (level_[d][i] <= j && !dominated[d][i]) gens.push_back(simplices_[d][i]);
        doc.skeleta[j] = std::move(gens);
    }
    FilteredComplex reloaded = assemble(doc);
    doc.weights = transfer_weights(*this, reloaded);
    return doc;
}

FilteredComplex load(const SpaceDocument& doc) {
    FilteredComplex k = FilteredComplex::assemble(doc);
    int rounds = 0;
    while (auto bad = k.fullness_violation()) {
        if (rounds == 2)
            throw LoadError("skeleta still not full after two barycentric subdivisions (simplex " +
                            show(*bad, k.vertex_ids()) + ")");
        k = barycentric_subdivide(k);
        ++rounds;
    }
    k.subdivisions_ = rounds;
    return k;
}

// ---------------------------------------------------------------- homology

SparseMatrix boundary_matrix(const FilteredComplex& k, int i) {
    std::vector<SparseMatrix::Column> cols(k.count(i));
    if (i >= 1 && i <= k.dimension())
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (int j = 0; j <= i; ++j)
                cols[c].emplace_back(static_cast<std::int32_t>(k.facet(i, c, j)), j % 2 == 0 ? 1 : -1);
    return SparseMatrix(k.count(i - 1), std::move(cols));
}

std::vector<long> betti(const FilteredComplex& k) {
    const int n = k.dimension();
    std::vector<long> ranks(n + 2, 0);
    for (int i = 1; i <= n; ++i) ranks[i] = static_cast<long>(rank(boundary_matrix(k, i)));
    std::vector<long> b(n + 1);
    for (int i = 0; i <= n; ++i) b[i] = static_cast<long>(k.count(i)) - ranks[i] - ranks[i + 1];
    return b;
}

long euler_characteristic(const FilteredComplex& k) {
    long chi = 0;
    for (int d = 0; d <= k.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(k.count(d));
    return chi;
}

// ---------------------------------------------------------------- constructions

FilteredComplex cone(const FilteredComplex& k, const Rational& weight, std::string apex) {
    if (sgn(weight) <= 0) throw DomainError("cone weight must be positive");
    const int n = k.dimension();
    SpaceDocument doc;
    doc.name = "cone(" + k.name() + ")";
    doc.dimension = n + 1;
    doc.vertices = k.vertex_ids();
    doc.vertices.push_back(apex.empty() ? unused_name(k.vertex_ids(), "apex") : apex);
    const int a = static_cast<int>(k.vertex_ids().size());
    for (Simplex s : k.simplices(n)) {
        s.push_back(a);
        doc.maximal_simplices.push_back(std::move(s));
    }
    doc.skeleta[0] = {{a}};
    for (int j = 0; j < n; ++j) {
        auto& gens = doc.skeleta[j + 1];
        gens.push_back({a});
        for (int d = 0; d <= j; ++d)
            for (std::size_t i = 0; i < k.count(d); ++i)
                if (k.level(d, i) <= j) {
                    Simplex s = k.simplex(d, i);
                    s.push_back(a);
                    gens.push_back(std::move(s));
                }
    }
    FilteredComplex out = FilteredComplex::assemble(doc);
    WeightAssignment w = transfer_weights(k, out);
    w[out.strata()[out.label(0, *out.find({a}))].id] = weight;
    return out.with_weights(w);
}

FilteredComplex suspension(const FilteredComplex& k, const Rational& north_weight, const Rational& south_weight,
                           std::string north, std::string south) {
    if (sgn(north_weight) <= 0 || sgn(south_weight) <= 0) throw DomainError("suspension weights must be positive");
    const int n = k.dimension();
    SpaceDocument doc;
    doc.name = "susp(" + k.name() + ")";
    doc.dimension = n + 1;
    doc.vertices = k.vertex_ids();
    doc.vertices.push_back(north.empty() ? unused_name(doc.vertices, "n") : north);
    doc.vertices.push_back(south.empty() ? unused_name(doc.vertices, "s") : south);
    const int nv = static_cast<int>(k.vertex_ids().size());
    const int poles[2] = {nv, nv + 1};
    for (int pole : poles)
        for (Simplex s : k.simplices(n)) {
            s.push_back(pole);
            doc.maximal_simplices.push_back(std::move(s));
        }
    doc.skeleta[0] = {{poles[0]}, {poles[1]}};
    for (int j = 0; j < n; ++j) {
        auto& gens = doc.skeleta[j + 1];
        gens = {{poles[0]}, {poles[1]}};
        for (int d = 0; d <= j; ++d)
            for (std::size_t i = 0; i < k.count(d); ++i)
                if (k.level(d, i) <= j)
                    for (int pole : poles) {
                        Simplex s = k.simplex(d, i);
                        s.push_back(pole);
                        gens.push_back(std::move(s));
                    }
    }
    FilteredComplex out = FilteredComplex::assemble(doc);
    WeightAssignment w = transfer_weights(k, out);
    w[out.strata()[out.label(0, *out.find({poles[0]}))].id] = north_weight;
    w[out.strata()[out.label(0, *out.find({poles[1]}))].id] = south_weight;
    return out.with_weights(w);
}

FilteredComplex barycentric_subdivide(const FilteredComplex& k) {
    const int n = k.dimension();
    std::vector<int> offset(n + 2, 0);
    for (int d = 0; d <= n; ++d) offset[d + 1] = offset[d] + static_cast<int>(k.count(d));

    SpaceDocument doc;
    doc.name = "sd(" + k.name() + ")";
    doc.dimension = n;
    for (int d = 0; d <= n; ++d)
        for (const auto& s : k.simplices(d))
            doc.vertices.push_back(d == 0 ? k.vertex_ids()[s[0]] : "[" + join_names(s, k.vertex_ids(), ",") + "]");

    // Full flags ending at (d, i): one new simplex per chain of facets.
    auto flags_of = [&](int top_dim, std::size_t top, std::vector<Simplex>& out) {
        Simplex chain;
        auto walk = [&](auto&& self, int d, std::size_t i) -> void {
            chain.push_back(offset[d] + static_cast<int>(i));
            if (d == 0) {
                Simplex s = chain;
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            } else {
                for (int j = 0; j <= d; ++j) self(self, d - 1, k.facet(d, i, j));
            }
            chain.pop_back();
        };
        walk(walk, top_dim, top);
    };
    for (std::size_t i = 0; i < k.count(n); ++i) flags_of(n, i, doc.maximal_simplices);
    for (int j = 0; j < n; ++j) {
        auto& gens = doc.skeleta[j];
        for (int d = 0; d <= j; ++d)
            for (std::size_t i = 0; i < k.count(d); ++i)
                if (k.level(d, i) <= j) flags_of(d, i, gens);
    }

    FilteredComplex out = FilteredComplex::assemble(doc);
    // Carry stratum identity over: a flag lies in the stratum of its largest element.
    auto origin = [&](int vertex) {
        int d = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), vertex) - offset.begin()) - 1;
        return std::pair<int, std::size_t>{d, static_cast<std::size_t>(vertex - offset[d])};
    };
    auto reps = stratum_representatives(out);
    std::vector<bool> used(k.strata().size(), false);
    for (std::size_t s = 0; s < out.strata_.size(); ++s) {
        const Simplex& flag = out.simplex(reps[s].first, reps[s].second);
        auto [d, i] = origin(flag.back());
        int original = k.label(d, i);
        if (used[original]) throw LoadError("internal: subdivision split stratum '" + k.strata()[original].id + "'");
        used[original] = true;
        const Stratum& src = k.strata()[original];
        if (src.dim != out.strata_[s].dim) throw LoadError("internal: subdivision moved stratum '" + src.id + "'");
        out.strata_[s].id = src.id;
        out.strata_[s].weight = src.weight;
    }
    out.subdivisions_ = k.subdivisions_;
    return out;
}

// ---------------------------------------------------------------- orientation

Orientation check_orientation(const FilteredComplex& k) {
    const int n = k.dimension();
    Orientation result;
    const std::size_t tops = k.count(n);
    if (n == 0) {
        result.orientable = true;
        result.signs.assign(tops, 1);
        return result;
    }
    std::vector<std::vector<std::pair<std::size_t, int>>> cofaces(k.count(n - 1));
    for (std::size_t i = 0; i < tops; ++i)
        for (int j = 0; j <= n; ++j) cofaces[k.facet(n, i, j)].emplace_back(i, j);
    for (std::size_t f = 0; f < cofaces.size(); ++f) {
        if (!k.is_regular(n - 1, f)) continue;
        if (cofaces[f].size() > 2)
            throw StructureError("regular face " + k.describe(n - 1, f) + " has " + std::to_string(cofaces[f].size()) +
                                 " cofaces");
        if (cofaces[f].size() == 1) result.has_boundary = true;
    }
    std::vector<int> sign(tops, 0);
    for (std::size_t start = 0; start < tops; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t s = queue.front();
            queue.pop_front();
            for (int j = 0; j <= n; ++j) {
                std::size_t f = k.facet(n, s, j);
                if (!k.is_regular(n - 1, f) || cofaces[f].size() != 2) continue;
                auto [t, jt] = cofaces[f][0].first == s ? cofaces[f][1] : cofaces[f][0];
                int want = -sign[s] * (((j + jt) % 2 == 0) ? 1 : -1);
                if (sign[t] == 0) {
                    sign[t] = want;
                    queue.push_back(t);
                } else if (sign[t] != want) {
                    result.orientable = false;
                    result.obstruction = "orientations disagree across " + k.describe(n - 1, f);
                    return result;
                }
            }
        }
    }
    result.orientable = true;
    result.signs = std::move(sign);
    return result;
}

}  // namespace stratal
