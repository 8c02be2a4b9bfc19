#pragma once

#include <stdexcept>
#include <string>

namespace motzhankel {

// Raised by exact division when the divisor does not divide the dividend.
// Inside the determinant kernel this means a broken invariant.
class NonExactDivision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonInvertiblePoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NegativeHeight : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

class LowerParamZeroDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class CaseTableMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace motzhankel
