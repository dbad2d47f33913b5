#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace kneserlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A constructed graph would exceed the vertex guard.
class SizeError : public Error {
public:
    SizeError(const std::string& what, std::uint64_t requested, std::uint64_t guard)
        : Error(what), requested(requested), guard(guard) {}
    std::uint64_t requested;
    std::uint64_t guard;
};

/// A loop-free graph was required but the input carries loops.
/// Chromatic-type invariants are undefined on looped graphs; callers
/// that can interpret loops (paper-lab reports) catch this and record
/// the value as infinite instead.
class LoopError : public Error {
public:
    LoopError(const std::string& what, int vertex) : Error(what), vertex(vertex) {}
    int vertex;
};

/// A solver ran out of its node or time budget. Carries the best bounds
/// established before the budget ran out.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, std::uint64_t nodes_spent,
                std::optional<long> lower = std::nullopt,
                std::optional<long> upper = std::nullopt)
        : Error(what), nodes_spent(nodes_spent), lower_bound(lower), upper_bound(upper) {}
    std::uint64_t nodes_spent;
    std::optional<long> lower_bound;
    std::optional<long> upper_bound;
};

/// Contract violation: mismatched lengths, out-of-range vertices,
/// malformed input values.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Syntax error in a construction expression, with byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what), offset(offset) {}
    std::size_t offset;
};

} // namespace kneserlab
