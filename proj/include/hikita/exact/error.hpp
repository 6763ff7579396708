#pragma once

#include <stdexcept>
#include <string>

namespace hikita {

// Precondition on an argument was violated (out-of-range index, bad degree, mismatched shapes).
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// A construction produced an object that fails its own defining relations.
// Always signals a bug in the construction, never bad input.
class ConstructionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace hikita
