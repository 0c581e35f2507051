#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gt {

/// Base class of every error the engine raises on bad input or violated
/// preconditions. Internal invariant failures throw std::logic_error instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicatePointError : Error {
    explicit DuplicatePointError(const std::string& p)
        : Error("duplicate point: " + p), point(p) {}
    std::string point;
};

struct UnknownPointError : Error {
    explicit UnknownPointError(const std::string& p)
        : Error("unknown point: " + p), point(p) {}
    std::string point;
};

/// Raised when a candidate family is not closed under pairwise union.
/// Carries the offending pair and their (missing) union, pre-formatted.
struct NotUnionClosedError : Error {
    NotUnionClosedError(const std::string& a, const std::string& b, const std::string& u)
        : Error("not union-closed: " + a + " and " + b + " but their union " + u +
                " is missing"),
          first(a), second(b), missing(u) {}
    std::string first, second, missing;
};

struct EmptyCarrierError : Error {
    EmptyCarrierError() : Error("subspace carrier must be nonempty") {}
};

struct EmptyArgumentError : Error {
    explicit EmptyArgumentError(const std::string& which)
        : Error(which + " must be nonempty") {}
};

struct NotDisjointError : Error {
    NotDisjointError() : Error("sets must be disjoint") {}
};

/// A named hypothesis of a construction does not hold.
struct HypothesisViolatedError : Error {
    explicit HypothesisViolatedError(const std::string& h)
        : Error("hypothesis violated: " + h), hypothesis(h) {}
    std::string hypothesis;
};

/// No open E with P <= E <= closure(E) <= G exists; names the failed step.
struct ShrinkFailedError : Error {
    ShrinkFailedError(std::uint64_t p, std::uint64_t g)
        : Error("no open shrink between the given closed set and its open bound"),
          from(p), into(g) {}
    std::uint64_t from, into;
};

struct NotGDeltaError : Error {
    NotGDeltaError() : Error("set is not an intersection of open sets") {}
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

struct UnknownPropertyError : Error {
    explicit UnknownPropertyError(const std::string& p)
        : Error("unknown property: " + p), property(p) {}
    std::string property;
};

struct ParseError : Error {
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
    int line;
};

}  // namespace gt
