#include "stratal/perversity.hpp"

#include "stratal/errors.hpp"

#include <algorithm>

namespace stratal {

Perversity Perversity::by_codim(std::map<int, long> values) {
    Perversity p;
    p.kind_ = Kind::by_codim;
    for (const auto& [k, _] : values)
        if (k < 1) throw ConfigError("perversity codimension " + std::to_string(k) + " is not >= 1");
    p.codim_ = std::move(values);
    return p;
}

Perversity Perversity::per_stratum(std::map<std::string, long> values) {
    Perversity p;
    p.kind_ = Kind::per_stratum;
    p.stratum_ = std::move(values);
    return p;
}

std::optional<long> Perversity::find(const StratumDatum& stratum) const {
    if (kind_ == Kind::by_codim) {
        auto it = codim_.find(stratum.codim());
        if (it == codim_.end()) return std::nullopt;
        return it->second;
    }
    auto it = stratum_.find(stratum.id);
    if (it == stratum_.end()) return std::nullopt;
    return it->second;
}

long Perversity::at(const StratumDatum& stratum) const {
    if (auto v = find(stratum)) return *v;
    if (kind_ == Kind::by_codim)
        throw ConfigError("perversity undefined at codimension " + std::to_string(stratum.codim()) +
                          " (stratum '" + stratum.id + "')");
    throw ConfigError("perversity undefined on stratum '" + stratum.id + "'");
}

long bracket(const Rational& x) {
    if (sgn(x) <= 0) throw DomainError("[[x]] needs x > 0, got " + to_string(x));
    long f = floor_to_long(x);
    return is_integer(x) ? f - 1 : f;
}

namespace {

void require_dimension(int n) {
    if (n < 1) throw DomainError("ambient dimension must be >= 1, got " + std::to_string(n));
}

template <class F>
Perversity tabulate(int n, F value) {
    require_dimension(n);
    std::map<int, long> values;
    for (int k = 1; k <= n; ++k) values[k] = value(k);
    return Perversity::by_codim(std::move(values));
}

}  // namespace

Perversity zero_perversity(int n) {
    return tabulate(n, [](int) { return 0L; });
}

Perversity top_perversity(int n) { return tabulate(n, top_value); }

MiddlePerversities middle_perversities(int n) {
    return {tabulate(n, lower_middle_value), tabulate(n, upper_middle_value)};
}

Perversity dual(const Perversity& p, int n) {
    if (p.kind() != Perversity::Kind::by_codim)
        throw ConfigError("dual over codimensions needs a by-codim perversity");
    require_dimension(n);
    std::map<int, long> values;
    for (int k = 1; k <= n; ++k) {
        auto it = p.codim_values().find(k);
        if (it == p.codim_values().end())
            throw ConfigError("perversity undefined at codimension " + std::to_string(k));
        values[k] = top_value(k) - it->second;
    }
    return Perversity::by_codim(std::move(values));
}

Perversity dual(const Perversity& p, std::span<const StratumDatum> strata) {
    std::map<std::string, long> values;
    for (const auto& s : strata) values[s.id] = top_value(s.codim()) - p.at(s);
    return Perversity::per_stratum(std::move(values));
}

Perversity restrict_to(const Perversity& p, std::span<const StratumDatum> strata) {
    std::map<std::string, long> values;
    for (const auto& s : strata) values[s.id] = p.at(s);
    return Perversity::per_stratum(std::move(values));
}

long perversity_from_weight(int link_dim, const Rational& weight) {
    if (link_dim < 0) throw DomainError("link dimension must be >= 0");
    if (sgn(weight) <= 0) throw DomainError("weight must be positive, got " + to_string(weight));
    if (link_dim == 0) return 0;
    Rational inverse_twice = 1 / (2 * weight);
    if (link_dim % 2 == 0) return link_dim / 2 + bracket(inverse_twice);
    return (link_dim - 1) / 2 + bracket(Rational(1, 2) + inverse_twice);
}

Perversity perversity_from_weights(std::span<const StratumDatum> strata, const WeightAssignment& weights) {
    std::map<std::string, long> values;
    for (const auto& s : strata) {
        auto it = weights.find(s.id);
        if (it == weights.end()) throw ConfigError("no weight for singular stratum '" + s.id + "'");
        values[s.id] = perversity_from_weight(s.link_dim, it->second);
    }
    return Perversity::per_stratum(std::move(values));
}

WeightAssignment weights_from_perversity(const Perversity& p, std::span<const StratumDatum> strata) {
    WeightAssignment weights;
    for (const auto& s : strata) {
        long value = p.at(s);
        if (s.link_dim == 0) {
            if (value != 0)
                throw RealizabilityError(s.id, "codimension-one strata only realize p = 0, got " +
                                                   std::to_string(value));
            weights[s.id] = 1;
            continue;
        }
        long upper = upper_middle_value(s.codim());
        if (value < upper)
            throw RealizabilityError(s.id, "p = " + std::to_string(value) + " is below the upper middle value " +
                                               std::to_string(upper));
        long excess = value - upper;
        if (s.link_dim % 2 == 0)
            weights[s.id] = Rational(1, 2 * excess + 1);
        else
            weights[s.id] = excess >= 1 ? Rational(1, 2 * excess) : Rational(1);
    }
    return weights;
}

bool is_gm_perversity(const Perversity& p) {
    if (p.kind() != Perversity::Kind::by_codim) return false;
    const auto& v = p.codim_values();
    if (v.empty()) return false;
    int n = v.rbegin()->first;
    if (n < 2) return false;
    for (int k = 2; k <= n; ++k)
        if (!v.contains(k)) return false;
    if (v.at(2) != 0) return false;
    for (int k = 2; k < n; ++k)
        if (v.at(k + 1) < v.at(k) || v.at(k + 1) > v.at(k) + 1) return false;
    return true;
}

bool is_classical_on(const Perversity& p, std::span<const StratumDatum> strata) {
    std::map<int, long> by_codim;
    for (const auto& s : strata) {
        if (s.codim() < 2) return false;
        long value = p.at(s);
        auto [it, inserted] = by_codim.emplace(s.codim(), value);
        if (!inserted && it->second != value) return false;
    }
    // A partial codim function extends to a GM perversity iff 0 <= p(k) <= k-2
    // and consecutive defined values rise by at least 0 and at most the gap.
    std::optional<std::pair<int, long>> previous;
    for (const auto& [k, value] : by_codim) {
        if (value < 0 || value > top_value(k)) return false;
        if (previous) {
            long rise = value - previous->second;
            if (rise < 0 || rise > k - previous->first) return false;
        }
        previous = {k, value};
    }
    return true;
}

std::partial_ordering compare(const Perversity& a, const Perversity& b, std::span<const StratumDatum> strata) {
    bool less = false;
    bool greater = false;
    for (const auto& s : strata) {
        auto x = a.find(s);
        auto y = b.find(s);
        if (!x || !y) continue;
        less |= *x < *y;
        greater |= *x > *y;
    }
    if (less && greater) return std::partial_ordering::unordered;
    if (less) return std::partial_ordering::less;
    if (greater) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

bool hunsicker_shift_check(int link_dim, const Rational& weight) {
    if (link_dim < 1) throw DomainError("shift check needs link dimension >= 1");
    int codim = link_dim + 1;
    long q_g = top_value(codim) - perversity_from_weight(link_dim, weight);
    Rational inverse_twice = 1 / (2 * weight);
    long shift = link_dim % 2 == 0 ? bracket(inverse_twice) : bracket(Rational(1, 2) + inverse_twice);
    return q_g == lower_middle_value(codim) - shift;
}

}  // namespace stratal
