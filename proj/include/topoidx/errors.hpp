#pragma once

#include <stdexcept>
#include <string>

namespace topoidx {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SelfLoopError : public Error {
public:
    explicit SelfLoopError(int v)
        : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

class DuplicateEdgeError : public Error {
public:
    DuplicateEdgeError(int u_, int v_)
        : Error("duplicate edge (" + std::to_string(u_) + ", " + std::to_string(v_) + ")"),
          u(u_), v(v_) {}
    int u;
    int v;
};

class VertexOutOfRangeError : public Error {
public:
    VertexOutOfRangeError(long long v, long long n)
        : Error("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")"),
          vertex(v), order(n) {}
    long long vertex;
    long long order;
};

class InvalidParameterError : public Error {
public:
    explicit InvalidParameterError(const std::string& what) : Error(what) {}
};

// Distance operations require a connected graph; an unreachable vertex is an
// error, never a sentinel distance.
class DisconnectedError : public Error {
public:
    DisconnectedError(int from_, int to_)
        : Error("graph is disconnected: no path from vertex " + std::to_string(from_) +
                " to vertex " + std::to_string(to_)),
          from(from_), to(to_) {}
    int from;
    int to;
};

// 64-bit arithmetic would wrap.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

}  // namespace topoidx
