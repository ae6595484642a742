#pragma once

#include <stdexcept>

namespace ringplane {

// Thrown when a requested object would exceed a configured size bound.
// Precondition violations throw std::domain_error instead.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ringplane
