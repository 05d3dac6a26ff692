#pragma once

// Perversities, the [[x]] bracket, and the correspondence between stratum
// weights of a conic metric and general perversities.
//
// Conventions follow the general-perversity setting: a perversity may take any
// integer value (negative ones included) and codimension-one strata are
// allowed. The top perversity is t(k) = k - 2, the upper middle perversity is
// floor((k-1)/2) and the lower middle one is t minus the upper. Some of the
// older L2 literature swaps the names of the two middle perversities; the
// names used here are the ones above, with no attempt to follow the swap.

#include "stratal/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stratal {

/// What perversity code needs to know about one singular stratum.
struct StratumDatum {
    std::string id;
    int link_dim = 0;  ///< l_Y = codim - 1

    int codim() const noexcept { return link_dim + 1; }
};

/// Positive rational weight c_Y per singular stratum id.
using WeightAssignment = std::map<std::string, Rational>;

class Perversity {
public:
    enum class Kind { by_codim, per_stratum };

    static Perversity by_codim(std::map<int, long> values);
    static Perversity per_stratum(std::map<std::string, long> values);

    Kind kind() const noexcept { return kind_; }
    const std::map<int, long>& codim_values() const noexcept { return codim_; }
    const std::map<std::string, long>& stratum_values() const noexcept { return stratum_; }

    std::optional<long> find(const StratumDatum& stratum) const;
    /// Throws ConfigError naming the stratum when no value is defined.
    long at(const StratumDatum& stratum) const;

    friend bool operator==(const Perversity&, const Perversity&) = default;

private:
    Kind kind_ = Kind::by_codim;
    std::map<int, long> codim_;
    std::map<std::string, long> stratum_;
};

/// Greatest integer strictly less than x. Throws DomainError for x <= 0.
long bracket(const Rational& x);

inline long top_value(int codim) { return codim - 2; }
inline long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
inline long upper_middle_value(int codim) { return floor_div(codim - 1, 2); }
inline long lower_middle_value(int codim) { return top_value(codim) - upper_middle_value(codim); }

Perversity zero_perversity(int n);
Perversity top_perversity(int n);

struct MiddlePerversities {
    Perversity lower;
    Perversity upper;
};
MiddlePerversities middle_perversities(int n);

/// t - p over codimensions 1..n. Throws ConfigError if p is not by-codim or
/// misses a codimension.
Perversity dual(const Perversity& p, int n);

/// t - p on the listed strata; the result is per-stratum.
Perversity dual(const Perversity& p, std::span<const StratumDatum> strata);

/// Values of p on the listed strata, as a per-stratum perversity.
Perversity restrict_to(const Perversity& p, std::span<const StratumDatum> strata);

/// p_g(Y) for one stratum: 0 when l = 0, otherwise [[l/2 + 1/(2c)]] evaluated
/// through the even/odd case split. Throws DomainError for c <= 0.
long perversity_from_weight(int link_dim, const Rational& weight);

/// p_g on every listed stratum. Throws ConfigError if a weight is missing.
Perversity perversity_from_weights(std::span<const StratumDatum> strata, const WeightAssignment& weights);

/// Canonical weights realizing p: even l uses 1/(2n+1), odd l uses 1/(2n)
/// (n >= 1) or 1 (n = 0), with n the excess of p over the upper middle
/// perversity. Throws RealizabilityError naming the first offending stratum.
WeightAssignment weights_from_perversity(const Perversity& p, std::span<const StratumDatum> strata);

/// Goresky-MacPherson growth conditions on a by-codim perversity:
/// p(2) = 0 and p(k) <= p(k+1) <= p(k) + 1 up to its largest codimension.
bool is_gm_perversity(const Perversity& p);

/// True when the values of p on the listed strata depend only on codimension
/// and extend to a Goresky-MacPherson perversity. Codimension-one strata make
/// this false.
bool is_classical_on(const Perversity& p, std::span<const StratumDatum> strata);

/// Pointwise comparison on the strata where both are defined; unordered when
/// the pair is incomparable.
std::partial_ordering compare(const Perversity& a, const Perversity& b, std::span<const StratumDatum> strata);

/// Single stratum with link dimension f >= 1: checks that t - p_g equals the
/// shifted lower middle perversity m(f+1) - [[1/(2c)]] (f even) or
/// m(f+1) - [[1/2 + 1/(2c)]] (f odd).
bool hunsicker_shift_check(int link_dim, const Rational& weight);

}  // namespace stratal
