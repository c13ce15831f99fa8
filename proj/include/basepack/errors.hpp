#ifndef BASEPACK_ERRORS_HPP
#define BASEPACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace basepack {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / file-format problems.
struct ParseError : Error {
    ParseError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

struct InconsistentHeader : Error {
    using Error::Error;
};

// Graph / structure misuse.
struct VertexOutOfRange : Error {
    using Error::Error;
};
struct UnknownEdgeId : Error {
    using Error::Error;
};
struct DuplicateEdgeId : Error {
    using Error::Error;
};
struct WouldCreateCycle : Error {
    using Error::Error;
};
struct NotConnected : Error {
    using Error::Error;
};
struct SameNode : Error {
    using Error::Error;
};
struct UnknownEdge : Error {
    using Error::Error;
};
struct NotInPseudoforest : Error {
    using Error::Error;
};

// Packing / estimation.
struct EmptyGraph : Error {
    using Error::Error;
};
struct EmptyActiveSet : Error {
    using Error::Error;
};
struct UncoveredEdge : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct Disconnected : Error {
    using Error::Error;
};
struct NoValidTiling : Error {
    using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace basepack

#endif
