#pragma once

#include <stdexcept>
#include <string>

namespace polycob {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad literal, nonpositive length, bad index).
class InputError : public Error {
public:
    using Error::Error;
};

/// The length vector lies on a wall: some signed sum of the lengths vanishes.
class WallError : public Error {
public:
    using Error::Error;
};

/// No closed polygon has the requested side lengths.
class EmptyError : public Error {
public:
    using Error::Error;
};

/// All lengths are equal, so no pair can host the bending circle action.
class NoPivotError : public Error {
public:
    using Error::Error;
};

/// The index set does not close up into a type-I fixed point.
class AdmissibilityError : public Error {
public:
    using Error::Error;
};

/// Bending along a zero-length diagonal.
class UndefinedActionError : public Error {
public:
    using Error::Error;
};

/// A triangle of the diagonal fan is degenerate, so its dihedral angle is undefined.
class AngleUndefinedError : public Error {
public:
    AngleUndefinedError(int index, const std::string& what)
        : Error(what), index_(index) {}

    int index() const noexcept { return index_; }

private:
    int index_;
};

}  // namespace polycob
