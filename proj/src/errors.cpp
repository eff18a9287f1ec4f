#include "feq/errors.hpp"

#include "feq/numfmt.hpp"

namespace feq {

PenlpViolation::PenlpViolation(double limit_point)
    : ValidationError("initial set violates PENLP: its closure contains the limit point " +
                      format_real(limit_point)),
      limit_point_(limit_point) {}

OutOfDomainError::OutOfDomainError(double x, const std::string& why)
    : Error("point " + format_real(x) + " is outside the solution domain: " + why), x_(x) {}

}  // namespace feq
