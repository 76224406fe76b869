#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/** Base class of every error raised by the library. */
class ToricError : public std::runtime_error
{
public:
    explicit ToricError(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "ToricError"; }
};

#define TORIC_DEFINE_ERROR(Name)                                               \
    class Name : public ToricError                                             \
    {                                                                          \
    public:                                                                    \
        explicit Name(const std::string& what = #Name) : ToricError(what) {}   \
        const char* kind() const noexcept override { return #Name; }           \
    };

// lattice
TORIC_DEFINE_ERROR(ZeroVector)
TORIC_DEFINE_ERROR(DimensionMismatch)
TORIC_DEFINE_ERROR(NotInSpan)
TORIC_DEFINE_ERROR(DegenerateBasis)
// fan
TORIC_DEFINE_ERROR(MalformedInput)
TORIC_DEFINE_ERROR(NotComplete)
// intersection / mori
TORIC_DEFINE_ERROR(NotAWall)
TORIC_DEFINE_ERROR(NotExtremal)
// birational
TORIC_DEFINE_ERROR(NotAFace)
TORIC_DEFINE_ERROR(SumMismatch)
TORIC_DEFINE_ERROR(BadStarShape)
TORIC_DEFINE_ERROR(ResultSingular)
// analyzer
TORIC_DEFINE_ERROR(NoFiberWall)
TORIC_DEFINE_ERROR(InvariantViolation)
// ewald
TORIC_DEFINE_ERROR(VMismatch)
TORIC_DEFINE_ERROR(NoSuitableDivisor)
// gallery
TORIC_DEFINE_ERROR(UnknownName)
TORIC_DEFINE_ERROR(BadParams)

#undef TORIC_DEFINE_ERROR

} // namespace toric
