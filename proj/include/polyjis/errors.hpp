#pragma once

#include <stdexcept>
#include <string>

namespace polyjis {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class TooFewVertices : public Error {
public:
    TooFewVertices(int got, int need)
        : Error("too few vertices: got " + std::to_string(got) + ", need at least " +
                std::to_string(need)),
          got(got), need(need) {}
    int got;
    int need;
};

/// Consecutive vertices i and i+1 coincide. Index is 1-based and cyclic.
class DuplicateConsecutiveVertices : public Error {
public:
    explicit DuplicateConsecutiveVertices(int index)
        : Error("duplicate consecutive vertices at index " + std::to_string(index)),
          index(index) {}
    int index;
};

/// Vertices i, i+1, i+2 are collinear within tolerance. Index is 1-based and cyclic.
class CollinearTriple : public Error {
public:
    explicit CollinearTriple(int index)
        : Error("collinear vertex triple starting at index " + std::to_string(index)),
          index(index) {}
    int index;
};

class GroupMismatch : public Error {
public:
    GroupMismatch() : Error("group tags do not match") {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("sequence lengths do not match: " + std::to_string(a) + " vs " +
                std::to_string(b)) {}
};

/// No element of the requested group maps the source points exactly onto the
/// destination points.
class NoExactTransform : public Error {
public:
    explicit NoExactTransform(const std::string& why) : Error("no exact transform: " + why) {}
};

/// The anchor correspondence is degenerate (coincident points or collinear triple).
class DegenerateAnchor : public Error {
public:
    explicit DegenerateAnchor(const std::string& why) : Error("degenerate anchor: " + why) {}
};

/// The requested signature point is inconsistent with the given prefix.
class EmptySolution : public Error {
public:
    EmptySolution() : Error("no point realizes the requested signature values") {}
};

class SamplingFailure : public Error {
public:
    explicit SamplingFailure(int attempts)
        : Error("rejection sampling failed after " + std::to_string(attempts) + " attempts") {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& why) : Error("parse error: " + why) {}
};

}  // namespace polyjis
