#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amalgam {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction or enumeration would exceed a configured size cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// The request falls outside the statement it was asked to check (e.g. I = R
/// handed to the main-theorem checker).
class ScopeError : public Error {
public:
    using Error::Error;
};

/// A map's algebraic hypotheses (comaximality, trivial intersection,
/// idempotency) do not hold.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Ideals or maps from different rings were combined.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// Syntax or index error in a ring expression; `offset` is a byte offset into
/// the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace amalgam
