#ifndef HOMTYPE_ERRORS_HPP
#define HOMTYPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homtype {

/// Base class of every error thrown by the library. The CLI maps these to
/// exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HOMTYPE_DEFINE_ERROR(Name)                                            \
  class Name : public Error {                                                 \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

// space_core
HOMTYPE_DEFINE_ERROR(AsymmetricDistance);
HOMTYPE_DEFINE_ERROR(ZeroDistanceDistinctPoints);
HOMTYPE_DEFINE_ERROR(NonpositiveMass);
HOMTYPE_DEFINE_ERROR(QuasiTriangleViolation);
HOMTYPE_DEFINE_ERROR(UnknownPoint);
HOMTYPE_DEFINE_ERROR(SamePoint);
HOMTYPE_DEFINE_ERROR(LengthMismatch);
HOMTYPE_DEFINE_ERROR(OverflowError);
HOMTYPE_DEFINE_ERROR(EmptyDomain);

// conditions
HOMTYPE_DEFINE_ERROR(WindowTooNarrow);
HOMTYPE_DEFINE_ERROR(EmptySubset);

// function_spaces
HOMTYPE_DEFINE_ERROR(NonconvergentBisection);
HOMTYPE_DEFINE_ERROR(EmptyFamily);

// operators
HOMTYPE_DEFINE_ERROR(UncoveredPoint);
HOMTYPE_DEFINE_ERROR(NonpositiveWeight);
HOMTYPE_DEFINE_ERROR(InvalidOperatorNorm);

// ms_functional
HOMTYPE_DEFINE_ERROR(SOutOfRange);
HOMTYPE_DEFINE_ERROR(DiagonalOnly);
HOMTYPE_DEFINE_ERROR(SEqualsOne);

// scenarios
HOMTYPE_DEFINE_ERROR(UnknownScenario);

// io / cli
HOMTYPE_DEFINE_ERROR(ParseError);

#undef HOMTYPE_DEFINE_ERROR

} // namespace homtype

#endif
