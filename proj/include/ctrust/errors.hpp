#ifndef CTRUST_ERRORS_HPP
#define CTRUST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctrust {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct EmptyScenario : Error { using Error::Error; };
struct AttributeOutOfRange : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct UnsupportedRule : Error { using Error::Error; };
struct AssignmentTooShort : Error { using Error::Error; };
struct UndefinedRatio : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };
struct EmptyResults : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace ctrust

#endif
