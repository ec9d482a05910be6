#ifndef CGRAPH_ERRORS_HPP
#define CGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cgraph {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    explicit NotPrime(long long p) : Error("not a prime: " + std::to_string(p)) {}
};

struct ModulusMismatch : Error {
    ModulusMismatch() : Error("operands have different moduli") {}
    explicit ModulusMismatch(const std::string& what) : Error(what) {}
};

struct ZeroInverse : Error {
    ZeroInverse() : Error("0 has no multiplicative inverse") {}
};

// Color 0 stands for edge absence; operations that select a color class reject it.
struct WhiteColorRequested : Error {
    WhiteColorRequested() : Error("color 0 (white) denotes absence, not a color class") {}
};

struct VertexOutOfRange : Error {
    VertexOutOfRange(int v, int m)
        : Error("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(m) + ")") {}
};

struct NotAPartition : Error {
    explicit NotAPartition(const std::string& what) : Error(what) {}
};

struct EdgeAbsent : Error {
    EdgeAbsent(int u, int v)
        : Error("no edge {" + std::to_string(u) + ", " + std::to_string(v) + "}") {}
};

struct LengthMismatch : Error {
    LengthMismatch(std::size_t got, std::size_t want)
        : Error("vector length " + std::to_string(got) + ", expected " + std::to_string(want)) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

struct TooSmall : Error {
    explicit TooSmall(const std::string& what) : Error(what) {}
};

struct TooFewEdges : Error {
    TooFewEdges(int got, int want)
        : Error("need at least " + std::to_string(want) + " edges, have " + std::to_string(got)) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct NotBipartite : Error {
    explicit NotBipartite(const std::string& what) : Error(what) {}
};

struct ColorConventionViolated : Error {
    explicit ColorConventionViolated(const std::string& what) : Error(what) {}
};

struct NotSquare : Error {
    NotSquare(int rows, int cols)
        : Error("matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", need square") {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct InvalidArgs : Error {
    explicit InvalidArgs(const std::string& what) : Error(what) {}
};

// Text-format errors carry the 1-based line number of the offending line.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace cgraph

#endif
