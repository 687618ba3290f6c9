#pragma once

#include <stdexcept>
#include <string>

namespace rcalg {

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

#define RCALG_ERROR(Name)                                 \
    struct Name : Error                                   \
    {                                                     \
        explicit Name(const std::string& what)            \
            : Error(std::string(#Name ": ") + what) {}    \
    };

RCALG_ERROR(ParamError)
RCALG_ERROR(DegreeError)
RCALG_ERROR(RangeError)
RCALG_ERROR(InfeasibleError)
RCALG_ERROR(ParityError)
RCALG_ERROR(SplitError)
RCALG_ERROR(NotLinkedError)
RCALG_ERROR(NotArtinianError)
RCALG_ERROR(NotContainedError)
RCALG_ERROR(CapError)
RCALG_ERROR(ParseError)

#undef RCALG_ERROR

} // namespace rcalg
