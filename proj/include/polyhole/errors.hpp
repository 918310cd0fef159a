#pragma once

#include <stdexcept>
#include <string>

namespace polyhole {

// Arithmetic left the representable range. Never ignored: every checked op throws.
class overflow_exception : public std::runtime_error {
public:
    explicit overflow_exception(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input (bad dimensions, invalid family parameters, ...).
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A configured work budget (node count, submatrix count, soft deadline) was exhausted.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyhole
