#pragma once

#include <stdexcept>
#include <string>

namespace accelent {

/// Input outside the mathematical domain of an operation (μ² < 0, r_f > π/2,
/// unnormalised ket passed where a state is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sub-mode labels that collide, are missing, or do not partition a layout.
class LayoutError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Occupation number or flat index outside the layout.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Output file could not be opened or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace accelent
