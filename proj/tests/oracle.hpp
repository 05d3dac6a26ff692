#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra or chain code: ranks are plain Gaussian elimination
// on dense rational rows and allowability is checked by enumerating faces.

#include "stratal/complex.hpp"

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Rows = std::vector<std::vector<Q>>;

inline std::size_t rank(Rows m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Basis of {x : m x = 0}, as vectors of length `cols`.
inline Rows nullspace(Rows m, std::size_t cols) {
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Q lead = m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[r][j] /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    Rows basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<Q> v(cols);
        v[free] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -m[pivot_of_col[c]][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rows of a*b where a is given by rows and b by columns.
inline Rows compose(const Rows& a_rows, const Rows& b_cols) {
    Rows out(a_rows.size(), std::vector<Q>(b_cols.size()));
    for (std::size_t i = 0; i < a_rows.size(); ++i)
        for (std::size_t j = 0; j < b_cols.size(); ++j)
            for (std::size_t k = 0; k < b_cols[j].size(); ++k) out[i][j] += a_rows[i][k] * b_cols[j][k];
    return out;
}

/// Coefficient of face τ in the boundary of σ (0 if τ is not a facet).
inline int incidence(const stratal::Simplex& sigma, const stratal::Simplex& tau) {
    if (tau.size() + 1 != sigma.size()) return 0;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        stratal::Simplex f = sigma;
        f.erase(f.begin() + static_cast<long>(j));
        if (f == tau) return j % 2 == 0 ? 1 : -1;
    }
    return 0;
}

inline std::vector<long> betti(const stratal::FilteredComplex& k) {
    const int n = k.dimension();
    std::vector<long> ranks(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        Rows m(k.count(i - 1), std::vector<Q>(k.count(i)));
        for (std::size_t r = 0; r < k.count(i - 1); ++r)
            for (std::size_t c = 0; c < k.count(i); ++c) m[r][c] = incidence(k.simplex(i, c), k.simplex(i - 1, r));
        ranks[i] = static_cast<long>(rank(m));
    }
    std::vector<long> b(n + 1);
    for (int i = 0; i <= n; ++i) b[i] = static_cast<long>(k.count(i)) - ranks[i] - ranks[i + 1];
    return b;
}

/// Value of the perversity on stratum index s (only asked for singular strata).
using StratumPerversity = std::function<long(int)>;

inline bool allowable(const stratal::FilteredComplex& k, const stratal::Simplex& sigma, int degree,
                      const StratumPerversity& p) {
    const std::size_t m = sigma.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        stratal::Simplex face;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (1u << b)) face.push_back(sigma[b]);
        int d = static_cast<int>(face.size()) - 1;
        std::size_t idx = *k.find(face);
        if (k.is_regular(d, idx)) continue;
        int s = k.label(d, idx);
        if (d > degree - k.strata()[s].codim + p(s)) return false;
    }
    return true;
}

/// I^pH_* from explicit subspaces: I^pC_i = {ξ in span(allowable) : ∂ξ in span(allowable)}.
inline std::vector<long> intersection_betti(const stratal::FilteredComplex& k, const StratumPerversity& p) {
    const int n = k.dimension();
    std::vector<std::vector<stratal::Simplex>> regular(n + 1);
    for (int d = 0; d <= n; ++d)
        for (std::size_t i = 0; i < k.count(d); ++i)
            if (k.is_regular(d, i)) regular[d].push_back(k.simplex(d, i));

    // Basis of I^pC_i in regular coordinates, one vector per element.
    std::vector<Rows> chains(n + 1);
    for (int i = 0; i <= n; ++i) {
        std::vector<std::size_t> allowed;
        for (std::size_t a = 0; a < regular[i].size(); ++a)
            if (allowable(k, regular[i][a], i, p)) allowed.push_back(a);
        Rows constraint;
        if (i > 0)
            for (const auto& tau : regular[i - 1]) {
                if (allowable(k, tau, i - 1, p)) continue;
                std::vector<Q> row(allowed.size());
                for (std::size_t a = 0; a < allowed.size(); ++a) row[a] = incidence(regular[i][allowed[a]], tau);
                constraint.push_back(std::move(row));
            }
        for (const auto& x : nullspace(constraint, allowed.size())) {
            std::vector<Q> v(regular[i].size());
            for (std::size_t a = 0; a < allowed.size(); ++a) v[allowed[a]] = x[a];
            chains[i].push_back(std::move(v));
        }
    }
    auto boundary_rank = [&](int i) -> long {
        if (i <= 0 || i > n || chains[i].empty()) return 0;
        Rows d(regular[i - 1].size(), std::vector<Q>(regular[i].size()));
        for (std::size_t r = 0; r < regular[i - 1].size(); ++r)
            for (std::size_t c = 0; c < regular[i].size(); ++c) d[r][c] = incidence(regular[i][c], regular[i - 1][r]);
        return static_cast<long>(rank(compose(d, chains[i])));
    };
    std::vector<long> out(n + 1);
    for (int i = 0; i <= n; ++i)
        out[i] = static_cast<long>(chains[i].size()) - boundary_rank(i) - boundary_rank(i + 1);
    return out;
}

}  // namespace oracle
