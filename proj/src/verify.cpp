#include "stratal/verify.hpp"

#include "stratal/corpus.hpp"
#include "stratal/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace stratal {

namespace {

using Status = Check::Status;

Check make_check(std::string name, Json inputs, Json expected, Json actual) {
    Check c{std::move(name), std::move(inputs), std::move(expected), std::move(actual), Status::pass, {}};
    c.status = c.expected == c.actual ? Status::pass : Status::fail;
    return c;
}

Check skipped(std::string name, Json inputs, std::string why) {
    return Check{std::move(name), std::move(inputs), nullptr, nullptr, Status::skip, std::move(why)};
}

const std::vector<Rational> mil_weights = {1, Rational(3, 2), 2, 5, 100};

template <class F>
Perversity on_strata(const std::vector<StratumDatum>& strata, F value) {
    std::map<std::string, long> values;
    for (const auto& s : strata) values[s.id] = value(s);
    return Perversity::per_stratum(std::move(values));
}

std::vector<std::pair<std::string, Perversity>> standard_perversities(const FilteredComplex& k) {
    auto strata = k.singular_strata();
    return {
        {"zero", on_strata(strata, [](const StratumDatum&) { return 0L; })},
        {"top", on_strata(strata, [](const StratumDatum& s) { return top_value(s.codim()); })},
        {"lower-middle", on_strata(strata, [](const StratumDatum& s) { return lower_middle_value(s.codim()); })},
        {"upper-middle", on_strata(strata, [](const StratumDatum& s) { return upper_middle_value(s.codim()); })},
    };
}

bool closed_and_oriented(const FilteredComplex& k, std::string* why) {
    Orientation o = check_orientation(k);
    if (!o.orientable) {
        *why = "not orientable";
        return false;
    }
    if (o.has_boundary) {
        *why = "has boundary";
        return false;
    }
    return true;
}

std::vector<long> reversed(std::vector<long> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

// ---------------------------------------------------------------- suites

void duality_suite(const std::filesystem::path& dir, SuiteReport& report) {
    std::mt19937_64 rng(20240611);
    for (const auto& name : corpus_names(dir)) {
        FilteredComplex k = load_corpus_space(dir, name);
        auto perversities = standard_perversities(k);
        auto strata = k.singular_strata();
        for (int r = 0; r < 4; ++r) {
            perversities.emplace_back("random-" + std::to_string(r), on_strata(strata, [&](const StratumDatum& s) {
                                          std::uniform_int_distribution<long> pick(-2, s.codim() + 1);
                                          return pick(rng);
                                      }));
        }
        for (const auto& [label, p] : perversities) {
            Json inputs{{"space", name}, {"perversity", label}, {"values", perversity_json(p)}};
            DualityReport d = duality_check(k, p);
            if (!d.applicable) {
                report.checks.push_back(skipped("duality " + name + " " + label, inputs, d.reason));
                continue;
            }
            report.checks.push_back(make_check("duality " + name + " " + label, inputs, reversed(d.betti_dual), d.betti_p));
        }
    }
}

void cone_local_suite(const std::filesystem::path& dir, SuiteReport& report) {
    const std::vector<Rational> weights = {Rational(1, 4), Rational(1, 2), 1, 2};
    for (const std::string link : {"s0", "s1_hex", "t2_7v", "s2_tetra"}) {
        FilteredComplex k = load_corpus_space(dir, link);
        for (const auto& c : weights) {
            LocalModelReport r = local_model_check(k, c);
            Json inputs{{"link", link}, {"f", r.f}, {"weight", rational_json(c)}, {"link_vector", r.link_vector}};
            report.checks.push_back(make_check("cone-local " + link + " c=" + to_string(c), inputs, r.analytic, r.simplicial));
        }
    }
}

void mil_suite(const std::filesystem::path& dir, SuiteReport& report) {
    for (int l = 0; l <= 12; ++l)
        for (const auto& c : mil_weights) {
            long p = perversity_from_weight(l, c);
            long q = top_value(l + 1) - p;
            Json inputs{{"link_dim", l}, {"weight", rational_json(c)}};
            Json expected{{"p_g", upper_middle_value(l + 1)}, {"q_g", lower_middle_value(l + 1)}};
            report.checks.push_back(
                make_check("mil l=" + std::to_string(l) + " c=" + to_string(c), inputs, expected, {{"p_g", p}, {"q_g", q}}));
        }
    for (const auto& name : corpus_names(dir)) {
        FilteredComplex k = load_corpus_space(dir, name);
        auto strata = k.singular_strata();
        auto w = k.weights();
        bool heavy = std::all_of(strata.begin(), strata.end(),
                                 [&](const StratumDatum& s) { return w.contains(s.id) && w.at(s.id) >= 1; });
        Json inputs{{"space", name}, {"weights", weights_json(w)}};
        if (!heavy) {
            report.checks.push_back(skipped("mil " + name, inputs, "some weight is below 1"));
            continue;
        }
        L2Report r = theorem_ris_predictions(k);
        auto perversities = standard_perversities(k);
        Json expected{{"max", intersection_cobetti(k, perversities[2].second)},
                      {"min", intersection_cobetti(k, perversities[3].second)}};
        report.checks.push_back(make_check("mil " + name, inputs, expected, {{"max", r.max_betti}, {"min", *r.min_betti}}));
    }
}

void hunsicker_suite(SuiteReport& report) {
    const std::vector<Rational> weights = {Rational(1, 8), Rational(1, 4), Rational(1, 3), Rational(1, 2), 1, 2, 4};
    for (int f = 1; f <= 8; ++f)
        for (const auto& c : weights) {
            Json inputs{{"f", f}, {"weight", rational_json(c)}};
            report.checks.push_back(make_check("hunsicker f=" + std::to_string(f) + " c=" + to_string(c), inputs, true,
                                               hunsicker_shift_check(f, c)));
        }
}

void realizability_suite(SuiteReport& report) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> count(1, 6), link(0, 9), excess(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<StratumDatum> strata;
        std::map<std::string, long> values;
        int m = count(rng);
        for (int s = 0; s < m; ++s) {
            StratumDatum d{"y" + std::to_string(s), link(rng)};
            strata.push_back(d);
            values[d.id] = d.link_dim == 0 ? 0 : upper_middle_value(d.codim()) + excess(rng);
        }
        Perversity p = Perversity::per_stratum(values);
        WeightAssignment w = weights_from_perversity(p, strata);
        Perversity back = perversity_from_weights(strata, w);
        Json links = Json::array();
        for (const auto& s : strata) links.push_back(s.link_dim);
        Json inputs{{"link_dims", links}, {"p", perversity_json(p)}, {"weights", weights_json(w)}};
        report.checks.push_back(
            make_check("round-trip " + std::to_string(trial), inputs, perversity_json(p), perversity_json(back)));
    }
    // Perversities no metric realizes.
    struct Bad {
        int link_dim;
        long value;
    };
    for (Bad bad : {Bad{0, 1}, Bad{0, -1}, Bad{2, 0}, Bad{3, 0}, Bad{5, 1}}) {
        StratumDatum s{"y", bad.link_dim};
        std::vector<StratumDatum> strata{s};
        Json inputs{{"link_dim", bad.link_dim}, {"p", bad.value}};
        std::string outcome = "accepted";
        try {
            weights_from_perversity(Perversity::per_stratum({{"y", bad.value}}), strata);
        } catch (const RealizabilityError&) {
            outcome = "rejected";
        }
        report.checks.push_back(make_check(
            "reject l=" + std::to_string(bad.link_dim) + " p=" + std::to_string(bad.value), inputs, "rejected", outcome));
    }
}

void ris_suite(const std::filesystem::path& dir, SuiteReport& report) {
    for (const auto& name : corpus_names(dir)) {
        FilteredComplex k = load_corpus_space(dir, name);
        Json inputs{{"space", name}, {"weights", weights_json(k.weights())}};
        L2Report r = theorem_ris_predictions(k);
        const auto& max = r.max_betti;
        const auto& min = *r.min_betti;
        if (!k.has_singular_strata()) {
            auto b = betti(k);
            report.checks.push_back(make_check("ris " + name + " manifold", inputs, {{"max", b}, {"min", b}},
                                               {{"max", max}, {"min", min}}));
            continue;
        }
        std::string why;
        if (!closed_and_oriented(k, &why)) {
            report.checks.push_back(skipped("ris " + name + " hodge-star", inputs, why));
            continue;
        }
        report.checks.push_back(make_check("ris " + name + " hodge-star", inputs, reversed(min), max));
        FredholmIndices ind = fredholm_indices(max, min);
        long chi = 0;
        for (std::size_t i = 0; i < max.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * max[i];
        long expect = k.dimension() % 2 == 1 ? 0 : chi;
        report.checks.push_back(make_check("ris " + name + " fredholm", inputs, {{"ind_max", expect}, {"ind_min", expect}},
                                           {{"ind_max", ind.ind_max}, {"ind_min", ind.ind_min}}));
    }
}

Json hilbert_facts(const FiniteHilbertComplex& c, std::mt19937_64& rng) {
    auto coh = cohomology_dims(c);
    auto harm = harmonic_dims(c);
    bool laplace = true;
    bool kodaira = true;
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int i = 0; i <= c.top(); ++i) {
        laplace = laplace && kernel_basis(c.laplacian(i)) == harmonic_basis(c, i);
        Vector v(c.dim(i));
        for (auto& x : v) x = entry(rng);
        KodairaParts parts = kodaira_decompose(c, i, v);
        kodaira = kodaira && parts.harmonic + parts.exact + parts.coexact == v && dot(parts.harmonic, parts.exact) == 0 &&
                  dot(parts.harmonic, parts.coexact) == 0 && dot(parts.exact, parts.coexact) == 0;
    }
    long chi = 0;
    for (std::size_t i = 0; i < coh.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * coh[i];
    return {{"harmonic_equals_cohomology", harm == coh},
            {"laplacian_kernel", laplace},
            {"kodaira", kodaira},
            {"dual_reversal", dual_complex(c).passed},
            {"index_is_euler", index_even_odd(c) == chi}};
}

void hilbert_suite(const std::filesystem::path& dir, SuiteReport& report) {
    std::mt19937_64 rng(11);
    const Json all_true{{"harmonic_equals_cohomology", true},
                        {"laplacian_kernel", true},
                        {"kodaira", true},
                        {"dual_reversal", true},
                        {"index_is_euler", true}};
    for (const auto& name : corpus_names(dir)) {
        FilteredComplex k = load_corpus_space(dir, name);
        if (k.total_count() > 80) {
            report.checks.push_back(skipped("hilbert cochains " + name, {{"space", name}}, "too large for dense checks"));
            continue;
        }
        report.checks.push_back(
            make_check("hilbert cochains " + name, {{"space", name}}, all_true, hilbert_facts(cochain_complex(k), rng)));
    }
    std::uniform_int_distribution<int> length(1, 5), size(0, 5);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::vector<std::size_t> dims(length(rng) + 1);
        for (auto& d : dims) d = size(rng);
        FiniteHilbertComplex c = random_complex(dims, seed);
        report.checks.push_back(make_check("hilbert random " + std::to_string(seed), {{"dims", dims}, {"seed", seed}},
                                           all_true, hilbert_facts(c, rng)));
    }
}

}  // namespace

bool SuiteReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"duality",      "cone-local",      "mil",    "hunsicker",
                                                   "realizability", "ris-consistency", "hilbert"};
    return names;
}

SuiteReport run_suite(const std::string& suite, const std::filesystem::path& corpus) {
    SuiteReport report;
    report.suite = suite;
    if (suite == "duality")
        duality_suite(corpus, report);
    else if (suite == "cone-local")
        cone_local_suite(corpus, report);
    else if (suite == "mil")
        mil_suite(corpus, report);
    else if (suite == "hunsicker")
        hunsicker_suite(report);
    else if (suite == "realizability")
        realizability_suite(report);
    else if (suite == "ris-consistency")
        ris_suite(corpus, report);
    else if (suite == "hilbert")
        hilbert_suite(corpus, report);
    else
        throw ConfigError("unknown suite '" + suite + "'");
    return report;
}

Json suite_json(const SuiteReport& report) {
    Json checks = Json::array();
    int counts[3] = {0, 0, 0};
    for (const auto& c : report.checks) {
        static const char* names[] = {"pass", "fail", "skip"};
        int s = static_cast<int>(c.status);
        ++counts[s];
        Json e{{"name", c.name}, {"inputs", c.inputs}, {"status", names[s]}};
        if (c.status != Status::skip) {
            e["expected"] = c.expected;
            e["actual"] = c.actual;
        }
        if (!c.note.empty()) e["note"] = c.note;
        checks.push_back(e);
    }
    return {{"suite", report.suite},
            {"passed", report.passed()},
            {"counts", {{"pass", counts[0]}, {"fail", counts[1]}, {"skip", counts[2]}}},
            {"checks", checks}};
}

}  // namespace stratal
