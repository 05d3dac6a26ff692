#include "stratal/l2_model.hpp"

#include "stratal/chains.hpp"
#include "stratal/errors.hpp"

#include <algorithm>

namespace stratal {

SpaceExpr SpaceExpr::manifold(std::vector<long> betti) {
    if (betti.empty()) throw DomainError("manifold needs a Betti vector of length dim+1");
    if (std::any_of(betti.begin(), betti.end(), [](long b) { return b < 0; }))
        throw DomainError("Betti numbers must be >= 0");
    SpaceExpr e;
    e.kind_ = Kind::closed_manifold;
    e.dim_ = static_cast<int>(betti.size()) - 1;
    e.betti_ = std::move(betti);
    return e;
}

SpaceExpr SpaceExpr::cone(const Rational& weight, SpaceExpr link) {
    if (sgn(weight) <= 0) throw DomainError("cone weight must be positive, got " + to_string(weight));
    if (link.kind() == Kind::cylinder) throw DomainError("cone link must be compact, not a cylinder");
    SpaceExpr e;
    e.kind_ = Kind::cone;
    e.dim_ = link.dimension() + 1;
    e.weight_ = weight;
    e.child_ = std::make_shared<const SpaceExpr>(std::move(link));
    return e;
}

SpaceExpr SpaceExpr::cylinder(SpaceExpr base) {
    SpaceExpr e;
    e.kind_ = Kind::cylinder;
    e.dim_ = base.dimension() + 1;
    e.child_ = std::make_shared<const SpaceExpr>(std::move(base));
    return e;
}

std::string SpaceExpr::describe() const {
    switch (kind_) {
        case Kind::closed_manifold: {
            std::string s = "M(";
            for (std::size_t i = 0; i < betti_.size(); ++i) s += (i ? "," : "") + std::to_string(betti_[i]);
            return s + ")";
        }
        case Kind::cone: return "C_" + to_string(weight_) + "(" + child_->describe() + ")";
        case Kind::cylinder: return "I x " + child_->describe();
    }
    return {};
}

Rational cone_cutoff(int f, const Rational& weight) {
    if (f < 0) throw DomainError("link dimension must be >= 0");
    if (sgn(weight) <= 0) throw DomainError("cone weight must be positive, got " + to_string(weight));
    return Rational(f, 2) + 1 / (2 * weight);
}

std::string cone_hypothesis(int f, const Rational& weight) {
    if (weight < 1) return "1";
    return f % 2 == 0 ? "2" : "3";
}

std::vector<long> cone_max_cohomology(const std::vector<long>& link_betti, int f, const Rational& weight) {
    if (static_cast<int>(link_betti.size()) != f + 1)
        throw DomainError("link Betti vector has length " + std::to_string(link_betti.size()) + ", expected " +
                          std::to_string(f + 1));
    Rational cutoff = cone_cutoff(f, weight);
    std::vector<long> out(f + 2, 0);
    for (int i = 0; i <= f; ++i)
        if (i < cutoff) out[i] = link_betti[i];
    return out;
}

L2Report cone_report(const std::vector<long>& link_betti, int f, const Rational& weight) {
    L2Report r;
    r.max_betti = cone_max_cohomology(link_betti, f, weight);
    r.cutoff = cone_cutoff(f, weight);
    r.hypothesis_used = cone_hypothesis(f, weight);
    return r;
}

std::vector<long> cylinder_max_cohomology(const std::vector<long>& base_betti) {
    if (base_betti.empty()) throw DomainError("empty Betti vector");
    std::vector<long> out = base_betti;
    out.push_back(0);
    return out;
}

std::vector<long> eval_max(const SpaceExpr& expr) {
    switch (expr.kind()) {
        case SpaceExpr::Kind::closed_manifold: return expr.betti();
        case SpaceExpr::Kind::cone:
            return cone_max_cohomology(eval_max(expr.child()), expr.child().dimension(), expr.weight());
        case SpaceExpr::Kind::cylinder: return cylinder_max_cohomology(eval_max(expr.child()));
    }
    throw DomainError("malformed space expression");
}

L2Report theorem_ris_predictions(const FilteredComplex& k) {
    auto strata = k.singular_strata();
    L2Report r;
    Perversity p_g = perversity_from_weights(strata, k.weights());
    Perversity q_g = dual(p_g, strata);
    r.max_betti = intersection_cobetti(k, q_g);
    r.min_betti = intersection_cobetti(k, p_g);
    r.plain_coefficients = k.lacks_codim_one() && is_classical_on(p_g, strata);
    r.hypothesis_used = strata.empty() ? "no singular strata" : "finite-dimensional link cohomology";
    r.p_g = std::move(p_g);
    r.q_g = std::move(q_g);
    return r;
}

FredholmIndices fredholm_indices(const std::vector<long>& max_betti, const std::vector<long>& min_betti) {
    if (max_betti.size() != min_betti.size())
        throw DomainError("max and min vectors differ in length (" + std::to_string(max_betti.size()) + " vs " +
                          std::to_string(min_betti.size()) + ")");
    FredholmIndices out;
    for (std::size_t i = 0; i < max_betti.size(); ++i) {
        out.ind_max += i % 2 == 0 ? max_betti[i] : -min_betti[i];
        out.ind_min += i % 2 == 0 ? min_betti[i] : -max_betti[i];
    }
    return out;
}

LocalModelReport local_model_check(const FilteredComplex& link, const Rational& weight) {
    LocalModelReport r;
    r.link = link.name();
    r.f = link.dimension();
    r.weight = weight;
    r.link_vector = link.has_singular_strata() ? theorem_ris_predictions(link).max_betti : betti(link);
    r.analytic = cone_max_cohomology(r.link_vector, r.f, weight);

    FilteredComplex c = cone(link, weight);
    auto strata = c.singular_strata();
    Perversity q_g = dual(perversity_from_weights(strata, c.weights()), strata);
    r.simplicial = intersection_cobetti(c, q_g);

    r.agree.resize(r.analytic.size());
    r.passed = r.analytic.size() == r.simplicial.size();
    for (std::size_t i = 0; i < r.analytic.size(); ++i) {
        r.agree[i] = i < r.simplicial.size() && r.analytic[i] == r.simplicial[i];
        r.passed = r.passed && r.agree[i];
    }
    return r;
}

}  // namespace stratal
