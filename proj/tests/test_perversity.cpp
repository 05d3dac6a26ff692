#include "stratal/errors.hpp"
#include "stratal/perversity.hpp"

#include <doctest.h>

#include <random>

using namespace stratal;

namespace {

// Greatest integer strictly below x, by walking down from ceil(x).
long bracket_by_search(const Rational& x) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    long n = c.get_si();
    while (!(Rational(n) < x)) --n;
    return n;
}

const std::vector<Rational> weight_grid = {Rational(1, 8), Rational(1, 7), Rational(1, 6), Rational(1, 5),
                                           Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                           1,              Rational(3, 2), 2,              Rational(7, 3),
                                           5,              100};

}  // namespace

TEST_CASE("bracket") {
    CHECK(bracket(Rational(1, 2)) == 0);
    CHECK(bracket(1) == 0);
    CHECK(bracket(Rational(3, 2)) == 1);
    CHECK(bracket(2) == 1);
    CHECK_THROWS_AS(bracket(0), DomainError);
    CHECK_THROWS_AS(bracket(Rational(-1, 3)), DomainError);
    for (int num = 1; num <= 40; ++num)
        for (int den = 1; den <= 9; ++den) {
            Rational x(num, den);
            x.canonicalize();
            long b = bracket(x);
            CHECK(b == bracket_by_search(x));
            CHECK(Rational(b) < x);
            CHECK(x <= Rational(b + 1));
        }
}

TEST_CASE("top and middle perversities") {
    Perversity t = top_perversity(4);
    CHECK(t.codim_values().at(1) == -1);
    CHECK(t.codim_values().at(2) == 0);
    CHECK(t.codim_values().at(3) == 1);
    auto [lower, upper] = middle_perversities(4);
    CHECK(lower.codim_values().at(3) == 0);
    CHECK(upper.codim_values().at(3) == 1);
    CHECK(lower.codim_values().at(4) == 1);
    CHECK(upper.codim_values().at(4) == 1);
    CHECK(middle_perversities(2).lower.codim_values().at(2) == 0);
    CHECK(middle_perversities(2).upper.codim_values().at(2) == 0);
    for (int k = 1; k <= 20; ++k) {
        CHECK(lower_middle_value(k) + upper_middle_value(k) == top_value(k));
        // upper = l/2 (l even) or (l-1)/2 (l odd), l = k - 1
        int l = k - 1;
        CHECK(upper_middle_value(k) == (l % 2 == 0 ? l / 2 : (l - 1) / 2));
    }
    CHECK_THROWS_AS(top_perversity(0), DomainError);
}

TEST_CASE("dual is an involution") {
    auto [lower, upper] = middle_perversities(3);
    CHECK(dual(upper, 3) == lower);
    CHECK(dual(top_perversity(6), 6) == zero_perversity(6));
    CHECK(dual(zero_perversity(5), 5) == top_perversity(5));
    Perversity odd = Perversity::by_codim({{1, 4}, {2, -3}, {3, 0}});
    CHECK(dual(dual(odd, 3), 3) == odd);
    std::vector<StratumDatum> strata{{"a", 0}, {"b", 2}};
    Perversity ps = Perversity::per_stratum({{"a", 0}, {"b", 5}});
    CHECK(dual(dual(ps, strata), strata) == ps);
    CHECK(dual(ps, strata).stratum_values().at("b") == -4);
    CHECK_THROWS_AS(dual(Perversity::by_codim({{2, 0}}), 3), ConfigError);
}

TEST_CASE("perversity from weights") {
    CHECK(perversity_from_weight(2, 1) == 1);
    CHECK(perversity_from_weight(0, Rational(7, 3)) == 0);
    CHECK(perversity_from_weight(1, Rational(1, 2)) == 1);
    CHECK(perversity_from_weight(3, 1) == 1);
    CHECK_THROWS_AS(perversity_from_weight(2, 0), DomainError);
    // The case split is [[l/2 + 1/(2c)]] written out; compare for l >= 1.
    for (int l = 1; l <= 12; ++l)
        for (const auto& c : weight_grid)
            CHECK(perversity_from_weight(l, c) == bracket_by_search(Rational(l, 2) + 1 / (2 * c)));

    std::vector<StratumDatum> strata{{"x", 2}, {"y", 0}};
    Perversity p = perversity_from_weights(strata, {{"x", 1}, {"y", 5}});
    CHECK(p.stratum_values().at("x") == 1);
    CHECK(p.stratum_values().at("y") == 0);
    CHECK_THROWS_AS(perversity_from_weights(strata, {{"x", 1}}), ConfigError);
}

TEST_CASE("truncation degree identity away from codimension one") {
    for (int l = 1; l <= 12; ++l)
        for (const auto& c : weight_grid) {
            long p = perversity_from_weight(l, c);
            for (int i = 0; i <= 14; ++i) CHECK((Rational(i) < Rational(l, 2) + 1 / (2 * c)) == (i <= p));
        }
}

TEST_CASE("codimension-one strata: the identity holds only up to degree l = 0") {
    // p_g is pinned to 0 when l = 0, while i < 1/(2c) admits i >= 1 for c < 1/2.
    for (const auto& c : weight_grid) {
        CHECK(perversity_from_weight(0, c) == 0);
        CHECK(Rational(0) < 1 / (2 * c));
    }
    CHECK(Rational(1) < 1 / (2 * Rational(1, 4)));
    CHECK_FALSE(1 <= perversity_from_weight(0, Rational(1, 4)));
}

TEST_CASE("weights at least one give the middle perversities") {
    for (int l = 0; l <= 12; ++l)
        for (const Rational& c : {Rational(1), Rational(3, 2), Rational(2), Rational(5), Rational(100)}) {
            long p = perversity_from_weight(l, c);
            CHECK(p == upper_middle_value(l + 1));
            CHECK(top_value(l + 1) - p == lower_middle_value(l + 1));
        }
}

TEST_CASE("weights from perversity") {
    auto one = [](int l, long p) {
        std::vector<StratumDatum> s{{"y", l}};
        return weights_from_perversity(Perversity::per_stratum({{"y", p}}), s).at("y");
    };
    CHECK(one(2, 1) == 1);
    CHECK(one(2, 2) == Rational(1, 3));
    CHECK(one(3, 1) == 1);
    CHECK(one(3, 2) == Rational(1, 2));
    CHECK(one(0, 0) == 1);
    CHECK_THROWS_AS(one(0, 1), RealizabilityError);
    CHECK_THROWS_AS(one(2, 0), RealizabilityError);
    try {
        one(4, 1);
        FAIL("expected a realizability error");
    } catch (const RealizabilityError& e) {
        CHECK(e.stratum() == "y");
    }

    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> link(0, 9), excess(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<StratumDatum> strata;
        std::map<std::string, long> values;
        for (int s = 0; s < 4; ++s) {
            StratumDatum d{"s" + std::to_string(s), link(rng)};
            values[d.id] = d.link_dim == 0 ? 0 : upper_middle_value(d.codim()) + excess(rng);
            strata.push_back(d);
        }
        Perversity p = Perversity::per_stratum(values);
        CHECK(perversity_from_weights(strata, weights_from_perversity(p, strata)) == p);
    }
}

TEST_CASE("Goresky-MacPherson growth") {
    CHECK(is_gm_perversity(middle_perversities(6).lower));
    CHECK(is_gm_perversity(middle_perversities(6).upper));
    // t(2)=0, t(3)=1, t(4)=2: p(2)=0 and steps of 1.
    CHECK(is_gm_perversity(top_perversity(4)));
    CHECK(is_gm_perversity(zero_perversity(4)));
    CHECK_FALSE(is_gm_perversity(Perversity::by_codim({{2, 1}, {3, 1}})));
    CHECK_FALSE(is_gm_perversity(Perversity::by_codim({{2, 0}, {3, 2}})));
    CHECK_FALSE(is_gm_perversity(Perversity::by_codim({{2, 0}, {3, 1}, {4, 0}})));
    CHECK_FALSE(is_gm_perversity(Perversity::per_stratum({{"a", 0}})));
}

TEST_CASE("classical on a set of strata") {
    std::vector<StratumDatum> strata{{"a", 2}, {"b", 2}, {"c", 4}};
    CHECK(is_classical_on(Perversity::per_stratum({{"a", 1}, {"b", 1}, {"c", 2}}), strata));
    CHECK_FALSE(is_classical_on(Perversity::per_stratum({{"a", 1}, {"b", 0}, {"c", 2}}), strata));
    CHECK_FALSE(is_classical_on(Perversity::per_stratum({{"a", 1}, {"b", 1}, {"c", 4}}), strata));
    CHECK_FALSE(is_classical_on(Perversity::per_stratum({{"a", 2}, {"b", 2}, {"c", 2}}), strata));
    std::vector<StratumDatum> with_codim_one{{"a", 0}};
    CHECK_FALSE(is_classical_on(Perversity::per_stratum({{"a", 0}}), with_codim_one));
}

TEST_CASE("pointwise comparison") {
    std::vector<StratumDatum> strata{{"a", 1}, {"b", 2}};
    Perversity p = Perversity::per_stratum({{"a", 0}, {"b", 1}});
    Perversity q = Perversity::per_stratum({{"a", 0}, {"b", 2}});
    Perversity r = Perversity::per_stratum({{"a", 1}, {"b", 0}});
    CHECK(compare(p, q, strata) == std::partial_ordering::less);
    CHECK(compare(q, p, strata) == std::partial_ordering::greater);
    CHECK(compare(p, p, strata) == std::partial_ordering::equivalent);
    CHECK(compare(p, r, strata) == std::partial_ordering::unordered);
}

TEST_CASE("shifted lower middle perversity") {
    CHECK(hunsicker_shift_check(2, 1));
    CHECK(hunsicker_shift_check(1, Rational(1, 2)));
    CHECK(hunsicker_shift_check(3, Rational(1, 4)));
    // f = 2, c = 1: both sides are 0.
    CHECK(top_value(3) - perversity_from_weight(2, 1) == 0);
    CHECK(lower_middle_value(3) - bracket(Rational(1, 2)) == 0);
    for (int f = 1; f <= 8; ++f)
        for (const Rational& c : {Rational(1, 8), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1),
                                  Rational(2), Rational(4)})
            CHECK(hunsicker_shift_check(f, c));
}
