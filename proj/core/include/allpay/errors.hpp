#pragma once

#include <stdexcept>

namespace allpay {

// Bad argument to a distribution builder or bound constructor.
struct invalid_parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mixture weights that are negative or do not sum to one.
struct invalid_mixture_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Prize valuations outside v1 >= v2 > 0, or a nonpositive prize value.
struct invalid_valuation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Equilibrium parameters violating a feasibility constraint; the message
// names the constraint.
struct constraint_violation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace allpay
