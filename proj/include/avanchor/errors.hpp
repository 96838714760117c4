#pragma once

#include <stdexcept>
#include <string>

namespace avanchor {

// Error categories map onto CLI exit codes: input 2, numerical 3, io 4.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace avanchor
