#pragma once

#include <stdexcept>
#include <string>

namespace monospline {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MONOSPLINE_ERROR(Name)                  \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

MONOSPLINE_ERROR(InvalidInterval);
MONOSPLINE_ERROR(TooFewKnots);
MONOSPLINE_ERROR(DegenerateInterval);
MONOSPLINE_ERROR(OutOfDomain);
MONOSPLINE_ERROR(NonMonotoneData);
MONOSPLINE_ERROR(DuplicateAbscissa);
MONOSPLINE_ERROR(SmoothnessViolation);
MONOSPLINE_ERROR(NotMonotone);
MONOSPLINE_ERROR(ConfigInvalid);
MONOSPLINE_ERROR(InstanceTooLarge);
MONOSPLINE_ERROR(InvalidDelta);
MONOSPLINE_ERROR(BadInterval);
MONOSPLINE_ERROR(ParseError);
MONOSPLINE_ERROR(IoError);

#undef MONOSPLINE_ERROR

}  // namespace monospline
