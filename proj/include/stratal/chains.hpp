#pragma once

// Intersection chains with stratified coefficients R0: constant Q on the
// regular part and the zero system on X_{n-1}. A simplex contained in X_{n-1}
// carries coefficient 0, so it is dropped from the chain basis and from every
// boundary it would appear in.
//
// An i-simplex is p-allowable in chain degree d when, for every singular
// stratum Y, its faces labelled Y have dimension at most d - codim(Y) + p(Y).
// I^pC_i is the set of R0-chains in the span of allowable i-simplices whose
// boundary is in the span of allowable (i-1)-simplices.

#include "stratal/complex.hpp"
#include "stratal/linalg.hpp"
#include "stratal/perversity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stratal {

/// Value of p on every stratum of k, indexed like k.strata(); regular strata
/// get 0. Throws ConfigError naming a singular stratum with no value.
std::vector<long> perversity_values(const FilteredComplex& k, const Perversity& p);

/// For each simplex, the largest face dimension meeting each singular
/// stratum, as sorted (stratum index, dimension) pairs. Independent of p.
class FaceProfile {
public:
    explicit FaceProfile(const FilteredComplex& k);

    const std::vector<std::pair<int, int>>& at(int d, std::size_t index) const { return profile_[d][index]; }

private:
    std::vector<std::vector<std::vector<std::pair<int, int>>>> profile_;
};

/// Allowability of simplex (d, index) in chain degree `degree`.
bool allowable(const FilteredComplex& k, int d, std::size_t index, int degree, const Perversity& p);

struct ChainDegree {
    std::vector<std::size_t> regular;    ///< indices into simplices(i) of the R0 basis
    std::vector<std::size_t> allowable;  ///< positions in `regular` that are allowable in degree i
    Matrix basis;                        ///< I^pC_i in `regular` coordinates, reduced column echelon
};

struct StratifiedChainComplex {
    int dimension = 0;
    std::vector<ChainDegree> degrees;    ///< 0..n
    std::vector<SparseMatrix> boundary;  ///< boundary[i]: R0 chains of degree i to degree i-1

    /// Rank of the boundary on I^pC_i, from the explicit bases.
    std::size_t boundary_rank(int i) const;
};

/// R0 boundary maps only (no perversity).
std::vector<SparseMatrix> r0_boundaries(const FilteredComplex& k);

/// Explicit bases of I^pC_*.
StratifiedChainComplex build(const FilteredComplex& k, const Perversity& p);

/// dim I^pH_i for i = 0..n, by sparse ranks:
///   |A_i| - rk(d_i|A_i) - rk(d_{i+1}|A_{i+1}) + rk(N_i d_{i+1}|A_{i+1})
/// with A the allowable simplices and N_i the rows of non-allowable ones.
std::vector<long> intersection_betti(const FilteredComplex& k, const Perversity& p);

/// Same numbers computed from the explicit bases of a built complex.
std::vector<long> intersection_betti(const StratifiedChainComplex& c);

/// Field coefficients: I^pH^i is dual to I^pH_i, so these equal the Betti numbers.
std::vector<long> intersection_cobetti(const FilteredComplex& k, const Perversity& p);

/// Homology of the whole R0 complex, i.e. H_*(X, X_{n-1}).
std::vector<long> r0_betti(const FilteredComplex& k);

/// Cycles of I^pC_i representing a basis of I^pH_i, in `regular` coordinates.
Matrix homology_generators(const StratifiedChainComplex& c, int i);

struct DualityReport {
    bool applicable = false;
    std::string reason;              ///< why not applicable
    Perversity p;
    Perversity dual_p;
    std::vector<long> betti_p;
    std::vector<long> betti_dual;    ///< dim I^{t-p}H_i, i = 0..n
    bool passed = false;             ///< betti_p[i] == betti_dual[n-i] for all i
};

/// Compares I^pH_i with I^{t-p}H_{n-i}. Spaces with boundary or without an
/// orientation give a not-applicable report rather than a failure.
DualityReport duality_check(const FilteredComplex& k, const Perversity& p);

}  // namespace stratal
