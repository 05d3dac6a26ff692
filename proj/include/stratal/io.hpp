#pragma once

// JSON interchange. Rationals are always "p/q" (or "p") strings; integers in
// rational positions are accepted on input.

#include "stratal/chains.hpp"
#include "stratal/complex.hpp"
#include "stratal/hilbert.hpp"
#include "stratal/l2_model.hpp"
#include "stratal/perversity.hpp"

#include <json.hpp>

#include <filesystem>

namespace stratal {

using Json = nlohmann::json;

/// Throws LoadError on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& value);

Rational parse_rational_json(const Json& value);
Json rational_json(const Rational& value);

/// Space files. Throws LoadError on schema violations.
SpaceDocument parse_space(const Json& value);
Json space_json(const SpaceDocument& doc);
FilteredComplex load_space_file(const std::filesystem::path& path);

/// {"kind":"by-codim","values":{"2":0}} or {"kind":"per-stratum","values":{"id":1}}.
/// Throws ConfigError.
Perversity parse_perversity(const Json& value);
Json perversity_json(const Perversity& p);

WeightAssignment parse_weights(const Json& value);
Json weights_json(const WeightAssignment& weights);

/// {"dims":[...], "differentials":[[[...]]]}; entries are integers or rational
/// strings. An optional "gram" list is passed through to validation.
FiniteHilbertComplex parse_hilbert(const Json& value);
Json hilbert_json(const FiniteHilbertComplex& c);

Vector parse_vector(const Json& value);
Json vector_json(const Vector& v);
Json matrix_json(const Matrix& m);  ///< list of rows

/// Name, dimension, simplex counts and the strata with their ids and weights.
Json complex_summary(const FilteredComplex& k);

Json l2_report_json(const L2Report& r);
Json duality_report_json(const DualityReport& r);
Json local_model_json(const LocalModelReport& r);

}  // namespace stratal
