#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lcc {

// Base of every error raised by the library. The CLI maps subclasses onto
// process exit codes (see tools/cli.cpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally broken input: out-of-range vertex, loop, bad JSON shape.
class MalformedInput : public Error {
public:
    using Error::Error;
};

// A documented precondition does not hold. `witness` carries the offending
// vertices (a claw, a triangle, a twin pair, ...) when there is one.
class PreconditionFailed : public Error {
public:
    PreconditionFailed(const std::string& what, std::vector<int> witness = {})
        : Error(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

// A certificate handed to a conversion failed its verifier.
class InvalidCertificate : public Error {
public:
    InvalidCertificate(const std::string& what, std::vector<int> witness = {})
        : Error(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

// A construction was asked for a size beyond what its budget can reach.
class InfeasibleBudget : public Error {
public:
    InfeasibleBudget(const std::string& what, unsigned long long max_feasible)
        : Error(what), max_feasible(max_feasible) {}
    unsigned long long max_feasible;
};

// Exhaustive search ran out of nodes before reaching a proof.
class BudgetExhausted : public Error {
public:
    using Error::Error;
};

// An internal structural assertion of the claw-free / interval pipelines
// failed. Indicates a bug or an input outside the pipeline's class.
class StructureViolation : public Error {
public:
    StructureViolation(const std::string& what, std::vector<int> witness = {})
        : Error(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

} // namespace lcc
