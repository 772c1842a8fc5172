#pragma once

#include <stdexcept>

namespace polyenum {

// Root of the library's error hierarchy.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shapes disagree: variable counts, vector lengths, permutation degrees.
struct dimension_error : error {
    using error::error;
};

// Input violates a documented contract: malformed spec string, non-bijective
// image array, delta table missing an element, and the like.
struct validation_error : error {
    using error::error;
};

// Numeric argument outside the supported range.
struct range_error : validation_error {
    using validation_error::validation_error;
};

// A configured cap would be exceeded; the computation is refused up front.
struct resource_error : error {
    using error::error;
};

}  // namespace polyenum
