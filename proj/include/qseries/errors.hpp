#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

// Base class for every error raised by the engine.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// invert() on a series whose lowest q-slice is not a single monomial.
struct NotAUnit : Error {
    explicit NotAUnit(const std::string& what) : Error(what) {}
};

// subst_z_qshift() would move a stored term above the truncation order.
struct TruncationOverflow : Error {
    explicit TruncationOverflow(const std::string& what) : Error(what) {}
};

// Coefficient or comparison query above the truncation order.
struct OrderOutOfRange : Error {
    explicit OrderOutOfRange(const std::string& what) : Error(what) {}
};

// Infinite product whose factors do not stabilize order by order.
struct Divergent : Error {
    explicit Divergent(const std::string& what) : Error(what) {}
};

// A summation term's actual minimal q-order fell below its declared bound.
struct BoundViolation : Error {
    explicit BoundViolation(const std::string& what) : Error(what) {}
};

// Hypergeometric parameter tuple violating an admissibility precondition.
struct Inadmissible : Error {
    explicit Inadmissible(const std::string& what) : Error(what) {}
};

struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& what) : Error(what) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what) : Error(what) {}
};

} // namespace qseries
