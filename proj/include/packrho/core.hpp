#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace packrho {

// Hop distance for pairs in different components. Strictly greater than any
// finite distance, so "d > t" holds for unreachable pairs in every packing
// predicate without special-casing.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Default cap for operations that enumerate subsets (independent sets,
// packings). Callers may raise it up to 64, the bitset word width.
inline constexpr int kExhaustiveLimit = 32;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeLimitError : Error {
    SizeLimitError(const std::string& what, int n, int limit)
        : Error(what + ": n=" + std::to_string(n) + " exceeds limit " +
                std::to_string(limit)) {}
};

struct BadParametersError : Error {
    using Error::Error;
};

struct WrongDiameterError : Error {
    using Error::Error;
};

struct DisconnectedError : Error {
    using Error::Error;
};

struct UncoloredVertexError : Error {
    explicit UncoloredVertexError(int v)
        : Error("vertex " + std::to_string(v) + " has no color") {}
};

struct ParseError : Error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& reason)
        : Error("line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

inline constexpr const char* kVersion = "0.1.0";

}  // namespace packrho
