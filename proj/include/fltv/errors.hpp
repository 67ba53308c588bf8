#pragma once

#include <stdexcept>

namespace fltv {

// A division that the underlying polynomial identities guarantee to be
// exact left a remainder. Always an implementation bug, never an input error.
struct inexact_division : std::logic_error {
    using std::logic_error::logic_error;
};

// The scan found a prime factor of x^2 + x*y + y^2 in the residue class
// 5 (mod 6) for coprime x, y. No such factor exists; this must never fire.
struct norm_form_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fltv
