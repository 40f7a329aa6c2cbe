#pragma once

#include <stdexcept>

namespace bathsim {

// Invalid construction parameters or config contents (CLI exit code 1).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Time step rejected by the stability check (CLI exit code 2).
class StabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bathsim
