#pragma once

#include <stdexcept>
#include <string>

namespace oam {

// Invalid configuration or arguments (CLI exit code 2).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical contract was violated at runtime, e.g. a Parseval breach or an
// aliasing transform (CLI exit code 3).
class NumericalContractError : public std::runtime_error {
public:
    explicit NumericalContractError(const std::string& what) : std::runtime_error(what) {}
};

class GridMismatchError : public ValidationError {
public:
    explicit GridMismatchError(const std::string& what) : ValidationError(what) {}
};

}  // namespace oam
