#pragma once

#include <stdexcept>
#include <string>

namespace lcprof {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- field construction and arithmetic ---

struct NotPrime : Error {
    using Error::Error;
};

struct BadModulus : Error {
    using Error::Error;
};

struct MissingModulus : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// --- sequence parsing ---

struct LengthMismatch : Error {
    using Error::Error;
};

struct TokenOutOfRange : Error {
    using Error::Error;
};

struct MalformedToken : Error {
    using Error::Error;
};

// --- complexity analysis ---

struct BudgetOutOfRange : Error {
    using Error::Error;
};

struct AllZeroSequence : Error {
    using Error::Error;
};

struct BlockLengthMismatch : Error {
    using Error::Error;
};

// --- brute-force enumeration ---

struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace lcprof
