#pragma once
#include <stdexcept>
#include <string>

namespace plateuq {

/// Broken type invariant, malformed config, or bad argument.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A requested march violates the explicit-scheme stability bound.
class instability_error : public std::runtime_error {
public:
    explicit instability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plateuq
