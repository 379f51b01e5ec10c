#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gdim {

// Invalid graph construction or malformed input.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph file (edge list or adjacency JSON).
class ParseError : public GraphError {
public:
    explicit ParseError(const std::string& what) : GraphError(what) {}
};

// A guard that must never fire did fire: a normalization step failed to make
// progress or a verified theorem was contradicted. Always a bug report trigger.
class AnomalyError : public std::logic_error {
public:
    explicit AnomalyError(const std::string& what) : std::logic_error(what) {}
};

enum class SolveStatus { Exact, Timeout };

// Work budget for exact solvers, counted in candidate subsets examined.
// Deterministic: the same budget yields the same result on any machine.
using Budget = std::optional<std::uint64_t>;

} // namespace gdim
