#pragma once

#include <stdexcept>
#include <string>

namespace rhls {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter tuple violates an admissibility condition; `condition` names the
// first violated one in the documented order (alpha, beta, p lower, p upper,
// beta*q+1).
struct NotAdmissible : Error {
    std::string condition;
    explicit NotAdmissible(std::string cond)
        : Error("not admissible: " + cond), condition(std::move(cond)) {}
};

struct InvalidIndex : Error {
    using Error::Error;
};

struct DegenerateExponent : Error {
    using Error::Error;
};

// Evaluation requested at (or too close to) an inversion center.
struct CenterSingularity : Error {
    using Error::Error;
};

struct NotConverged : Error {
    double best_value;
    double error_estimate;
    NotConverged(const std::string& what, double best, double err)
        : Error(what), best_value(best), error_estimate(err) {}
};

struct NonFiniteSample : Error {
    using Error::Error;
};

struct NonIntegrableTail : Error {
    using Error::Error;
};

struct NonPositiveSample : Error {
    using Error::Error;
};

struct PositivityViolated : Error {
    using Error::Error;
};

struct NonUniformGrid : Error {
    using Error::Error;
};

struct NonPositiveValue : Error {
    using Error::Error;
};

// The scalar multiplier that should make the integral system hold exactly
// varies across test points; signals a quadrature failure.
struct CalibrationDrift : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

}  // namespace rhls
