#pragma once

#include <stdexcept>
#include <string>

namespace stratal {

/// Root of every error thrown by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. [[x]] for x <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Missing or inconsistent configuration: weights, perversity values, specs.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A perversity that no quasi edge metric with weights can produce.
class RealizabilityError : public ConfigError {
public:
    RealizabilityError(std::string stratum, const std::string& why)
        : ConfigError("stratum '" + stratum + "': " + why), stratum_(std::move(stratum)) {}

    const std::string& stratum() const noexcept { return stratum_; }

private:
    std::string stratum_;
};

/// A space document that does not describe a valid filtered complex.
class LoadError : public Error {
public:
    using Error::Error;
};

/// Face incidences that are not those of a pseudomanifold.
class StructureError : public Error {
public:
    using Error::Error;
};

/// A finite Hilbert complex whose differentials do not compose to zero, or
/// whose shapes disagree.
class ComplexError : public Error {
public:
    ComplexError(int degree, const std::string& why)
        : Error("degree " + std::to_string(degree) + ": " + why), degree_(degree) {}

    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

}  // namespace stratal
