// stratal: command-line front end for the intersection homology engine.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage, load or
// configuration error.

#include "stratal/chains.hpp"
#include "stratal/corpus.hpp"
#include "stratal/errors.hpp"
#include "stratal/hilbert.hpp"
#include "stratal/io.hpp"
#include "stratal/l2_model.hpp"
#include "stratal/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace stratal;

namespace {

struct Globals {
    bool json = true;
    bool quiet = false;
};

void emit(const Globals& g, const Json& out) {
    if (!g.quiet) std::cout << out.dump(2) << "\n";
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, sep)) parts.push_back(part);
    return parts;
}

long parse_long(const std::string& text) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("'" + text + "' is not an integer");
    }
    if (used != text.size()) throw ConfigError("'" + text + "' is not an integer");
    return v;
}

FilteredComplex load_with_weights(const std::string& space, const std::string& weights_file) {
    FilteredComplex k = load_space_file(space);
    if (!weights_file.empty()) k = k.with_weights(parse_weights(read_json_file(weights_file)));
    return k;
}

// zero | top | lower-middle | upper-middle | gm:p2,p3,... | per-stratum:FILE | from-weights
Perversity resolve_perversity(const std::string& spec, const FilteredComplex& k) {
    const int n = k.dimension();
    auto strata = k.singular_strata();
    auto named = [&](long (*value)(int)) {
        if (n == 0) return Perversity::per_stratum({});
        std::map<int, long> values;
        for (int c = 1; c <= n; ++c) values[c] = value(c);
        return Perversity::by_codim(std::move(values));
    };
    if (spec == "zero") return named([](int) { return 0L; });
    if (spec == "top") return named(top_value);
    if (spec == "lower-middle") return named(lower_middle_value);
    if (spec == "upper-middle") return named(upper_middle_value);
    if (spec == "from-weights") return perversity_from_weights(strata, k.weights());
    if (spec.rfind("gm:", 0) == 0) {
        if (!k.lacks_codim_one())
            throw ConfigError("gm: perversities need a space without codimension-one strata; use per-stratum:FILE");
        auto parts = split(spec.substr(3), ',');
        if (static_cast<int>(parts.size()) != n - 1)
            throw ConfigError("gm: expects " + std::to_string(n - 1) + " values for codimensions 2.." + std::to_string(n));
        std::map<int, long> values;
        for (int i = 0; i < n - 1; ++i) values[i + 2] = parse_long(parts[i]);
        Perversity p = Perversity::by_codim(values);
        if (!is_gm_perversity(p)) throw ConfigError("gm: values violate p(2)=0 and p(k) <= p(k+1) <= p(k)+1");
        return p;
    }
    if (spec.rfind("per-stratum:", 0) == 0) return parse_perversity(read_json_file(spec.substr(12)));
    throw ConfigError("unknown perversity spec '" + spec + "'");
}

std::vector<long> parse_betti(const std::string& text) {
    std::vector<long> out;
    for (const auto& part : split(text, ',')) out.push_back(parse_long(part));
    if (out.empty()) throw ConfigError("empty Betti vector");
    return out;
}

Json generators_json(const FilteredComplex& k, const StratifiedChainComplex& c) {
    Json out = Json::array();
    for (int i = 0; i <= c.dimension; ++i) {
        Matrix g = homology_generators(c, i);
        Json degree = Json::array();
        for (std::size_t col = 0; col < g.cols(); ++col) {
            Json chain = Json::object();
            for (std::size_t r = 0; r < g.rows(); ++r)
                if (sgn(g(r, col)) != 0) chain[k.describe(i, c.degrees[i].regular[r])] = rational_json(g(r, col));
            degree.push_back(chain);
        }
        out.push_back(degree);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersection homology of filtered simplicial pseudomanifolds and L2 cone formulas"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "JSON output (the default and only format)");
    app.add_flag("--quiet", g.quiet, "Print nothing; report through the exit code");

    // ih
    auto* ih = app.add_subcommand("ih", "Intersection Betti numbers of a space");
    std::string ih_space, ih_spec, ih_weights;
    bool ih_cobetti = false, ih_generators = false;
    ih->add_option("--space", ih_space, "Space file")->required();
    ih->add_option("--perversity", ih_spec,
                   "zero | top | lower-middle | upper-middle | gm:p2,p3,... | per-stratum:FILE | from-weights")
        ->required();
    ih->add_option("--weights", ih_weights, "Weights file overriding those of the space");
    ih->add_flag("--cobetti", ih_cobetti, "Also report the cohomological numbers");
    ih->add_flag("--emit-generators", ih_generators, "Cycles representing a basis of each group");

    // perversity
    auto* pv = app.add_subcommand("perversity", "Perversities from weights and weights from perversities");
    std::string pv_space, pv_weights, pv_realize, pv_weight;
    int pv_link_dim = -1;
    pv->add_option("--space", pv_space, "Space file");
    pv->add_option("--weights", pv_weights, "Weights file overriding those of the space");
    pv->add_option("--realize", pv_realize, "Perversity file to realize by weights (needs --space)");
    pv->add_option("--link-dim", pv_link_dim, "Single stratum: link dimension");
    pv->add_option("--weight", pv_weight, "Single stratum: weight p/q");

    // cone
    auto* cn = app.add_subcommand("cone", "Maximal L2 cohomology of a weighted cone");
    std::string cn_betti, cn_weight;
    int cn_dim = -1;
    cn->add_option("--link-betti", cn_betti, "Betti numbers of the link, comma separated")->required();
    cn->add_option("--link-dim", cn_dim, "Dimension of the link (defaults to the vector length - 1)");
    cn->add_option("--weight", cn_weight, "Cone weight p/q")->required();

    // predict
    auto* pr = app.add_subcommand("predict", "Max/min L2 cohomology predicted for a weighted space");
    std::string pr_space, pr_weights;
    pr->add_option("--space", pr_space, "Space file")->required();
    pr->add_option("--weights", pr_weights, "Weights file overriding those of the space");

    // verify
    auto* vf = app.add_subcommand("verify", "Run a check suite over the corpus");
    std::string vf_suite = "all", vf_corpus;
    vf->add_option("--suite", vf_suite, "duality | cone-local | mil | hunsicker | realizability | ris-consistency | hilbert | all");
    vf->add_option("--corpus", vf_corpus, "Corpus directory");

    // hilbert
    auto* hb = app.add_subcommand("hilbert", "Finite Hilbert complex diagnostics");
    std::string hb_complex, hb_vector;
    int hb_degree = -1;
    hb->add_option("--complex", hb_complex, "Complex file")->required();
    hb->add_option("--decompose", hb_degree, "Degree of the vector to decompose");
    hb->add_option("--vector", hb_vector, "File with a JSON list of rationals");

    // corpus
    auto* cl = app.add_subcommand("corpus-list", "List the bundled spaces");
    std::string cl_corpus;
    cl->add_option("--corpus", cl_corpus, "Corpus directory");
    auto* cb = app.add_subcommand("corpus-build", "Regenerate the corpus files");
    std::string cb_out;
    cb->add_option("--out", cb_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ih->parsed()) {
            FilteredComplex k = load_with_weights(ih_space, ih_weights);
            Perversity p = resolve_perversity(ih_spec, k);
            Json out{{"space", k.name()},
                     {"betti", intersection_betti(k, p)},
                     {"perversity_used", perversity_json(p)},
                     {"coefficients", "R0"}};
            if (ih_cobetti) out["cobetti"] = intersection_cobetti(k, p);
            if (ih_generators) out["generators"] = generators_json(k, build(k, p));
            emit(g, out);
            return 0;
        }
        if (pv->parsed()) {
            if (pv_link_dim >= 0 || !pv_weight.empty()) {
                if (pv_link_dim < 0 || pv_weight.empty()) throw ConfigError("--link-dim and --weight go together");
                Rational c = parse_rational(pv_weight);
                long p = perversity_from_weight(pv_link_dim, c);
                int codim = pv_link_dim + 1;
                emit(g, {{"link_dim", pv_link_dim},
                         {"weight", rational_json(c)},
                         {"p_g", p},
                         {"q_g", top_value(codim) - p},
                         {"upper_middle", upper_middle_value(codim)},
                         {"lower_middle", lower_middle_value(codim)}});
                return 0;
            }
            if (pv_space.empty()) throw ConfigError("perversity needs --space or --link-dim/--weight");
            FilteredComplex k = load_with_weights(pv_space, pv_weights);
            auto strata = k.singular_strata();
            if (!pv_realize.empty()) {
                Perversity p = parse_perversity(read_json_file(pv_realize));
                WeightAssignment w = weights_from_perversity(p, strata);
                emit(g, {{"space", k.name()},
                         {"perversity", perversity_json(restrict_to(p, strata))},
                         {"weights", weights_json(w)}});
                return 0;
            }
            Perversity p_g = perversity_from_weights(strata, k.weights());
            emit(g, {{"space", k.name()},
                     {"weights", weights_json(k.weights())},
                     {"p_g", perversity_json(p_g)},
                     {"q_g", perversity_json(dual(p_g, strata))},
                     {"classical", k.lacks_codim_one() && is_classical_on(p_g, strata)}});
            return 0;
        }
        if (cn->parsed()) {
            auto b = parse_betti(cn_betti);
            int f = cn_dim >= 0 ? cn_dim : static_cast<int>(b.size()) - 1;
            emit(g, l2_report_json(cone_report(b, f, parse_rational(cn_weight))));
            return 0;
        }
        if (pr->parsed()) {
            FilteredComplex k = load_with_weights(pr_space, pr_weights);
            L2Report r = theorem_ris_predictions(k);
            Json out = l2_report_json(r);
            out["space"] = k.name();
            FredholmIndices ind = fredholm_indices(r.max_betti, *r.min_betti);
            out["fredholm"] = {{"ind_max", ind.ind_max}, {"ind_min", ind.ind_min}};
            emit(g, out);
            return 0;
        }
        if (vf->parsed()) {
            auto dir = vf_corpus.empty() ? corpus_dir() : std::filesystem::path(vf_corpus);
            std::vector<std::string> suites = vf_suite == "all" ? suite_names() : std::vector<std::string>{vf_suite};
            Json reports = Json::array();
            int code = 0;
            for (const auto& s : suites) {
                SuiteReport r = run_suite(s, dir);
                code = std::max(code, r.exit_code());
                reports.push_back(suite_json(r));
            }
            emit(g, suites.size() == 1 ? reports[0] : Json{{"suites", reports}, {"passed", code == 0}});
            return code;
        }
        if (hb->parsed()) {
            FiniteHilbertComplex c = parse_hilbert(read_json_file(hb_complex));
            DualComplexReport d = dual_complex(c);
            Json out{{"dims", c.dims()},
                     {"cohomology", cohomology_dims(c)},
                     {"harmonic", harmonic_dims(c)},
                     {"dual_cohomology", d.dual_cohomology},
                     {"dual_reversal", d.passed},
                     {"index_even_odd", index_even_odd(c)}};
            if (hb_degree >= 0) {
                if (hb_vector.empty()) throw ConfigError("--decompose needs --vector");
                KodairaParts parts = kodaira_decompose(c, hb_degree, parse_vector(read_json_file(hb_vector)));
                out["decomposition"] = {{"degree", hb_degree},
                                        {"harmonic", vector_json(parts.harmonic)},
                                        {"exact", vector_json(parts.exact)},
                                        {"coexact", vector_json(parts.coexact)}};
            }
            emit(g, out);
            return 0;
        }
        if (cl->parsed()) {
            auto dir = cl_corpus.empty() ? corpus_dir() : std::filesystem::path(cl_corpus);
            Json spaces = Json::array();
            for (const auto& name : corpus_names(dir)) {
                FilteredComplex k = load_corpus_space(dir, name);
                Json singular = Json::array();
                for (const auto& s : k.strata())
                    if (s.singular)
                        singular.push_back({{"id", s.id},
                                            {"codim", s.codim},
                                            {"weight", s.weight ? rational_json(*s.weight) : Json(nullptr)}});
                spaces.push_back({{"name", name}, {"dimension", k.dimension()}, {"singular_strata", singular}});
            }
            emit(g, {{"corpus", dir.string()}, {"count", spaces.size()}, {"spaces", spaces}});
            return 0;
        }
        if (cb->parsed()) {
            emit(g, {{"written", write_corpus(cb_out)}, {"directory", cb_out}});
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "stratal: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "stratal: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "stratal: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
