/**
 * Error types shared across the library.
 */
#ifndef KCELL_ERRORS_HPP
#define KCELL_ERRORS_HPP

#include <stdexcept>

namespace kcell {

/** A Lie-type or element string could not be parsed. */
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** An argument violates a precondition, e.g. a non-reduced word where a reduced one is required. */
class InvalidArgument : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** A mathematical validity check failed, e.g. the boundary operator does not square to zero. */
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Group enumeration exceeded its element budget. */
class EnumerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace kcell

#endif // KCELL_ERRORS_HPP
