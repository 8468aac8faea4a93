#pragma once

#include <stdexcept>
#include <string>

namespace tailfence {

// Invalid argument values (bad parameters, p out of range, malformed input).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// An estimator cannot be applied to the given sample (e.g. a required
// outside-value frequency is zero).
class not_applicable_error : public std::runtime_error {
public:
    explicit not_applicable_error(const std::string& what) : std::runtime_error(what) {}
};

// The scan over the root-finding interval found no sign change.
class no_bracket_error : public std::runtime_error {
public:
    explicit no_bracket_error(const std::string& what) : std::runtime_error(what) {}
};

// Inputs collapse the problem (equal frequencies, zero quantile spread, ...).
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver hit its iteration cap above tolerance.
class non_convergence_error : public std::runtime_error {
public:
    explicit non_convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Sample file could not be parsed.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tailfence
