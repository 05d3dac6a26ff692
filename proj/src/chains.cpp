#include "stratal/chains.hpp"

#include "stratal/errors.hpp"

#include <algorithm>

namespace stratal {

std::vector<long> perversity_values(const FilteredComplex& k, const Perversity& p) {
    std::vector<long> values(k.strata().size(), 0);
    for (std::size_t s = 0; s < values.size(); ++s) {
        const auto& stratum = k.strata()[s];
        if (stratum.singular) values[s] = p.at({stratum.id, stratum.link_dim()});
    }
    return values;
}

FaceProfile::FaceProfile(const FilteredComplex& k) {
    const int n = k.dimension();
    profile_.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
        profile_[d].resize(k.count(d));
        for (std::size_t i = 0; i < k.count(d); ++i) {
            auto& out = profile_[d][i];
            if (d > 0)
                for (int j = 0; j <= d; ++j)
                    for (auto [s, m] : profile_[d - 1][k.facet(d, i, j)]) {
                        auto it = std::lower_bound(out.begin(), out.end(), std::pair{s, -1});
                        if (it != out.end() && it->first == s)
                            it->second = std::max(it->second, m);
                        else
                            out.insert(it, {s, m});
                    }
            if (!k.is_regular(d, i)) {
                int s = k.label(d, i);
                auto it = std::lower_bound(out.begin(), out.end(), std::pair{s, -1});
                if (it != out.end() && it->first == s)
                    it->second = d;
                else
                    out.insert(it, {s, d});
            }
        }
    }
}

namespace {

bool allowed(const FilteredComplex& k, const std::vector<std::pair<int, int>>& profile, int degree,
             const std::vector<long>& values) {
    for (auto [s, m] : profile)
        if (m > degree - k.strata()[s].codim + values[s]) return false;
    return true;
}

struct Layout {
    std::vector<std::vector<std::size_t>> regular;
    std::vector<std::vector<std::size_t>> allowable;  // positions into regular
    std::vector<std::vector<std::size_t>> forbidden;  // positions into regular
};

Layout layout(const FilteredComplex& k, const Perversity& p) {
    const int n = k.dimension();
    auto values = perversity_values(k, p);
    FaceProfile profile(k);
    Layout out;
    out.regular.resize(n + 1);
    out.allowable.resize(n + 1);
    out.forbidden.resize(n + 1);
    for (int d = 0; d <= n; ++d)
        for (std::size_t i = 0; i < k.count(d); ++i) {
            if (!k.is_regular(d, i)) continue;
            std::size_t pos = out.regular[d].size();
            out.regular[d].push_back(i);
            (allowed(k, profile.at(d, i), d, values) ? out.allowable : out.forbidden)[d].push_back(pos);
        }
    return out;
}

std::vector<SparseMatrix> boundaries_on(const FilteredComplex& k, const std::vector<std::vector<std::size_t>>& regular) {
    const int n = k.dimension();
    std::vector<SparseMatrix> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        SparseMatrix full = boundary_matrix(k, i);
        SparseMatrix cols = full.select_columns(regular[i]);
        out[i] = i == 0 ? cols : cols.select_rows(regular[i - 1]);
    }
    return out;
}

std::vector<std::vector<std::size_t>> regular_simplices(const FilteredComplex& k) {
    std::vector<std::vector<std::size_t>> regular(k.dimension() + 1);
    for (int d = 0; d <= k.dimension(); ++d)
        for (std::size_t i = 0; i < k.count(d); ++i)
            if (k.is_regular(d, i)) regular[d].push_back(i);
    return regular;
}

}  // namespace

bool allowable(const FilteredComplex& k, int d, std::size_t index, int degree, const Perversity& p) {
    FaceProfile profile(k);
    return allowed(k, profile.at(d, index), degree, perversity_values(k, p));
}

std::vector<SparseMatrix> r0_boundaries(const FilteredComplex& k) { return boundaries_on(k, regular_simplices(k)); }

StratifiedChainComplex build(const FilteredComplex& k, const Perversity& p) {
    const int n = k.dimension();
    Layout lay = layout(k, p);
    StratifiedChainComplex c;
    c.dimension = n;
    c.boundary = boundaries_on(k, lay.regular);
    c.degrees.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        auto& deg = c.degrees[i];
        deg.regular = lay.regular[i];
        deg.allowable = lay.allowable[i];
        const std::size_t dim = deg.regular.size();
        // ξ = Σ x_a σ_a over allowable a, with the forbidden rows of ∂ξ zero.
        Matrix constraint;
        if (i == 0) {
            constraint = Matrix(0, deg.allowable.size());
        } else {
            constraint = c.boundary[i].select_columns(deg.allowable).select_rows(lay.forbidden[i - 1]).to_dense();
        }
        Matrix kernel = kernel_basis(constraint);
        Matrix embedded(dim, kernel.cols());
        for (std::size_t a = 0; a < deg.allowable.size(); ++a)
            for (std::size_t col = 0; col < kernel.cols(); ++col) embedded(deg.allowable[a], col) = kernel(a, col);
        deg.basis = column_echelon(embedded);
    }
    return c;
}

std::size_t StratifiedChainComplex::boundary_rank(int i) const {
    if (i <= 0 || i > dimension) return 0;
    return rank(boundary[i].to_dense() * degrees[i].basis);
}

std::vector<long> intersection_betti(const StratifiedChainComplex& c) {
    std::vector<long> out(c.dimension + 1);
    for (int i = 0; i <= c.dimension; ++i)
        out[i] = static_cast<long>(c.degrees[i].basis.cols()) - static_cast<long>(c.boundary_rank(i)) -
                 static_cast<long>(c.boundary_rank(i + 1));
    return out;
}

std::vector<long> intersection_betti(const FilteredComplex& k, const Perversity& p) {
    const int n = k.dimension();
    Layout lay = layout(k, p);
    auto boundary = boundaries_on(k, lay.regular);
    // rank_all[i] = rk(d_i|A_i), rank_forbidden[i] = rk(N_{i-1} d_i|A_i)
    std::vector<long> rank_all(n + 2, 0), rank_forbidden(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        SparseMatrix restricted = boundary[i].select_columns(lay.allowable[i]);
        rank_all[i] = static_cast<long>(rank(restricted));
        rank_forbidden[i] = static_cast<long>(rank(restricted.select_rows(lay.forbidden[i - 1])));
    }
    std::vector<long> out(n + 1);
    for (int i = 0; i <= n; ++i)
        out[i] = static_cast<long>(lay.allowable[i].size()) - rank_all[i] - rank_all[i + 1] + rank_forbidden[i + 1];
    return out;
}

std::vector<long> intersection_cobetti(const FilteredComplex& k, const Perversity& p) {
    return intersection_betti(k, p);
}

std::vector<long> r0_betti(const FilteredComplex& k) {
    const int n = k.dimension();
    auto regular = regular_simplices(k);
    auto boundary = boundaries_on(k, regular);
    std::vector<long> ranks(n + 2, 0);
    for (int i = 1; i <= n; ++i) ranks[i] = static_cast<long>(rank(boundary[i]));
    std::vector<long> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = static_cast<long>(regular[i].size()) - ranks[i] - ranks[i + 1];
    return out;
}

Matrix homology_generators(const StratifiedChainComplex& c, int i) {
    if (i < 0 || i > c.dimension) throw DomainError("degree out of range");
    const Matrix& basis = c.degrees[i].basis;
    const std::size_t dim = c.degrees[i].regular.size();
    Matrix cycles = i == 0 ? basis : basis * kernel_basis(c.boundary[i].to_dense() * basis);
    Matrix spanned(dim, 0);
    if (i < c.dimension) spanned = independent_columns(c.boundary[i + 1].to_dense() * c.degrees[i + 1].basis);
    std::vector<Vector> generators;
    for (std::size_t col = 0; col < cycles.cols(); ++col) {
        Matrix z = Matrix::from_columns({cycles.column(col)}, dim);
        if (span_contains(spanned, z)) continue;
        spanned = Matrix::hstack(spanned, z);
        generators.push_back(z.column(0));
    }
    return Matrix::from_columns(generators, dim);
}

DualityReport duality_check(const FilteredComplex& k, const Perversity& p) {
    DualityReport report;
    auto strata = k.singular_strata();
    report.p = restrict_to(p, strata);
    report.dual_p = dual(p, strata);
    Orientation orientation = check_orientation(k);
    if (!orientation.orientable) {
        report.reason = "not orientable: " + orientation.obstruction;
        return report;
    }
    if (orientation.has_boundary) {
        report.reason = "regular part has boundary";
        return report;
    }
    report.applicable = true;
    report.betti_p = intersection_betti(k, p);
    report.betti_dual = intersection_betti(k, report.dual_p);
    const int n = k.dimension();
    report.passed = true;
    for (int i = 0; i <= n; ++i)
        if (report.betti_p[i] != report.betti_dual[n - i]) report.passed = false;
    return report;
}

}  // namespace stratal
