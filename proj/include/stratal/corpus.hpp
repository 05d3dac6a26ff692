#pragma once

// The bundled example spaces. The JSON files under corpus/ are produced by
// write_corpus(); the generators stay here so the files can be rebuilt.

#include "stratal/complex.hpp"

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace stratal {

// Plain triangulations without strata.
FilteredComplex point_pair();        ///< S^0
FilteredComplex polygon(int sides);  ///< S^1, sides >= 3
FilteredComplex tetrahedron_boundary();
FilteredComplex seven_vertex_torus();
FilteredComplex mobius_band();

struct CorpusSpec {
    std::string name;
    std::string description;
    std::function<FilteredComplex()> make;
};

/// Generators in listing order.
const std::vector<CorpusSpec>& corpus_specs();

/// STRATAL_CORPUS_DIR when set, otherwise the corpus directory of the source tree.
std::filesystem::path corpus_dir();

/// Names of the *.json files in dir, sorted.
std::vector<std::string> corpus_names(const std::filesystem::path& dir);

/// Loads dir/name.json. Throws LoadError if absent.
FilteredComplex load_corpus_space(const std::filesystem::path& dir, const std::string& name);

/// Writes every generated space to dir/name.json; returns the written names.
std::vector<std::string> write_corpus(const std::filesystem::path& dir);

}  // namespace stratal
