#pragma once

#include <stdexcept>
#include <string>

namespace spdec {

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyInput : std::invalid_argument {
    explicit EmptyInput(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateProduct : std::runtime_error {
    explicit DegenerateProduct(const std::string& what) : std::runtime_error(what) {}
};

// Raised by strict-mode simplification when an empty clause appears.
struct Contradiction : std::runtime_error {
    explicit Contradiction(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spdec
