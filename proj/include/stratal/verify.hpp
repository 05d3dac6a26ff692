#pragma once

// Theorem-check suites over the bundled corpus.

#include "stratal/io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace stratal {

struct Check {
    enum class Status { pass, fail, skip };

    std::string name;
    Json inputs;
    Json expected;
    Json actual;
    Status status = Status::pass;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    /// 0 when nothing failed, 1 otherwise.
    int exit_code() const { return passed() ? 0 : 1; }
};

const std::vector<std::string>& suite_names();

/// Throws ConfigError for an unknown suite and LoadError for a broken corpus.
SuiteReport run_suite(const std::string& suite, const std::filesystem::path& corpus);

Json suite_json(const SuiteReport& report);

}  // namespace stratal
