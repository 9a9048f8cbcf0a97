#pragma once

#include <stdexcept>
#include <string>

namespace shiftlab {

// Base class for every domain error raised by the library. Contract
// violations that indicate caller bugs (bad parameter ranges) use
// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Transition / normalized-Laplacian construction on a graph with a
// degree-0 vertex.
class IsolatedVertexError : public Error {
public:
    using Error::Error;
};

// Negative edge weights fed to a construction that requires nonnegative
// weights (Laplacian, normalized Laplacian, transition).
class SignedInputError : public Error {
public:
    using Error::Error;
};

// A matrix of the wrong kind was passed (e.g. symmetrize_transition on a
// non-transition matrix).
class WrongKindError : public Error {
public:
    using Error::Error;
};

// Symmetric eigensolver invoked on a matrix that is not symmetric by
// construction (raw transition matrix).
class NonSymmetricKindError : public Error {
public:
    using Error::Error;
};

// Exact integer routines invoked on a matrix with non-integer entries.
class NonIntegerEntriesError : public Error {
public:
    using Error::Error;
};

// Exact route guarded at a maximum dimension; larger inputs rejected.
class DimensionTooLargeError : public Error {
public:
    using Error::Error;
};

// complement_spectrum input lacks the single zero eigenvalue a connected
// Laplacian spectrum must carry.
class NotLaplacianSpectrumError : public Error {
public:
    using Error::Error;
};

// fit_filter_polynomial precondition: the candidate filter must commute
// with the shift matrix.
class DoesNotCommuteError : public Error {
public:
    using Error::Error;
};

// commuting_witness requires a repeated eigenvalue; raised when the
// spectrum is simple.
class IsShiftEnabledError : public Error {
public:
    using Error::Error;
};

// Edge-list text format violation; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace shiftlab
