#ifndef PCOMP_ERRORS_HPP
#define PCOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcomp {

/// Argument outside the domain of an operation (bad vertex, n too small, ...).
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested object provably does not exist for these parameters.
struct infeasible : std::domain_error {
    using std::domain_error::domain_error;
};

/// Instance is larger than the configured search guard.
struct scale_error : std::length_error {
    using std::length_error::length_error;
};

/// No decision procedure applies to the instance.
struct unsupported_instance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pcomp

#endif // PCOMP_ERRORS_HPP
