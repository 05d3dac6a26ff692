#pragma once

// Maximal L2 cohomology of model spaces with conic metrics
//   g_c = dr^2 + r^{2c} g_F   on the regular part of the cone over F,
// together with the predictions for compact spaces obtained by running the
// chain engine with the perversities attached to the stratum weights.
//
// Only closed manifolds, weighted cones and cylinders (0,1) x M are modelled.

#include "stratal/complex.hpp"
#include "stratal/perversity.hpp"
#include "stratal/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stratal {

class SpaceExpr {
public:
    enum class Kind { closed_manifold, cone, cylinder };

    /// Throws DomainError for an empty vector or negative entries.
    static SpaceExpr manifold(std::vector<long> betti);
    /// Throws DomainError for c <= 0 or a cylinder link.
    static SpaceExpr cone(const Rational& weight, SpaceExpr link);
    static SpaceExpr cylinder(SpaceExpr base);

    Kind kind() const noexcept { return kind_; }
    int dimension() const noexcept { return dim_; }
    const std::vector<long>& betti() const noexcept { return betti_; }
    const Rational& weight() const noexcept { return weight_; }
    const SpaceExpr& child() const { return *child_; }

    std::string describe() const;

private:
    Kind kind_ = Kind::closed_manifold;
    int dim_ = 0;
    std::vector<long> betti_;
    Rational weight_;
    std::shared_ptr<const SpaceExpr> child_;
};

struct L2Report {
    std::vector<long> max_betti;
    std::optional<std::vector<long>> min_betti;
    std::string hypothesis_used;
    std::optional<Rational> cutoff;          ///< f/2 + 1/(2c) for a single cone
    std::optional<Perversity> p_g;
    std::optional<Perversity> q_g;
    bool plain_coefficients = false;         ///< no codim-1 strata and p_g classical
};

/// f/2 + 1/(2c).
Rational cone_cutoff(int f, const Rational& weight);

/// Which clause of the cone corollary licenses the sharp cutoff: "1" for
/// c < 1, "2" for c >= 1 and f even, "3" for c >= 1 and f odd (finite
/// dimensional middle cohomology of the link, always true here).
std::string cone_hypothesis(int f, const Rational& weight);

/// out_i = link_betti_i for i < f/2 + 1/(2c), else 0; i = 0..f+1. The link
/// may be disconnected, in which case its total Betti vector is passed.
/// Throws DomainError if link_betti does not have length f+1.
std::vector<long> cone_max_cohomology(const std::vector<long>& link_betti, int f, const Rational& weight);
L2Report cone_report(const std::vector<long>& link_betti, int f, const Rational& weight);

/// The base vector followed by a trailing 0 (degrees 0..dim M + 1).
std::vector<long> cylinder_max_cohomology(const std::vector<long>& base_betti);

std::vector<long> eval_max(const SpaceExpr& expr);

/// Max and min predictions for a compact weighted space: with p_g from the
/// weights and q_g = t - p_g, max = I^{q_g}H^*, min = I^{p_g}H^*. Throws
/// ConfigError if a singular stratum has no weight.
L2Report theorem_ris_predictions(const FilteredComplex& k);

struct FredholmIndices {
    long ind_max = 0;  ///< sum of max_{2i} - min_{2i+1}
    long ind_min = 0;  ///< sum of min_{2i} - max_{2i+1}
};

/// Throws DomainError on a length mismatch.
FredholmIndices fredholm_indices(const std::vector<long>& max_betti, const std::vector<long>& min_betti);

struct LocalModelReport {
    std::string link;
    int f = 0;
    Rational weight;
    std::vector<long> link_vector;  ///< max L2 cohomology of the link
    std::vector<long> analytic;     ///< cone formula
    std::vector<long> simplicial;   ///< I^{q_g}H^* of the simplicial cone
    std::vector<bool> agree;        ///< per degree
    bool passed = false;
};

/// Compares the cone formula over the link with the chain engine on the
/// closed simplicial cone. A link with singular strata needs their weights.
LocalModelReport local_model_check(const FilteredComplex& link, const Rational& weight);

}  // namespace stratal
