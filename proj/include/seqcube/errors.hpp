#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqcube {

/// Malformed input text (bad character, wrong length, bad position list).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Semantic or range violation (period mismatch, precondition failure, k out of range).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Cube construction produced colliding vertices.
class ConstructionError : public DomainError {
public:
    explicit ConstructionError(const std::string& what) : DomainError(what) {}
};

/// Counting configuration outside the closed-form formulas' side conditions.
class UnsupportedConfigError : public DomainError {
public:
    explicit UnsupportedConfigError(const std::string& what) : DomainError(what) {}
};

/// An exhaustive search would exceed the caller's budget.
/// Carries what the search actually needed so callers can retry with a larger budget.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what, std::uint64_t required_patterns,
                        std::uint32_t required_weight)
        : std::runtime_error(what),
          required_patterns(required_patterns),
          required_weight(required_weight) {}

    std::uint64_t required_patterns;
    std::uint32_t required_weight;
};

/// Two independent routes disagreed. Always a bug, never a user error.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace seqcube
