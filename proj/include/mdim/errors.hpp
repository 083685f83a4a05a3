#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdim {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A family descriptor whose parameters violate the family's constraints
// (e.g. cycle(2), negative orders, wrong argument count).
class InvalidDescriptorError : public Error {
public:
    using Error::Error;
};

// A construction would exceed the configured maximum graph order.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

// A vertex id outside 0..n-1.
class InvalidVertexError : public Error {
public:
    using Error::Error;
};

// A malformed edge (self-loop or endpoint out of range).
class InvalidEdgeError : public Error {
public:
    using Error::Error;
};

// An operation that requires a connected graph was given a disconnected one.
class DisconnectedError : public Error {
public:
    using Error::Error;
};

// An operation that needs at least two vertices was given fewer.
class TrivialInputError : public Error {
public:
    using Error::Error;
};

// Contradictory bounds (a lower bound strictly above an upper bound, or
// two exact values that disagree).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

// File-level input problems (unreadable path, malformed edge-list text).
class IoError : public Error {
public:
    using Error::Error;
};

// Expression syntax or constraint failure; offset() is the 1-based byte
// position of the offending token in the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace mdim
