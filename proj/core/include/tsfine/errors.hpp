#pragma once

#include <stdexcept>
#include <string>

namespace tsfine {

/// Invalid argument or violated precondition.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unreadable, unparseable, or empty input data.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A series with zero sample variance; it carries no correlation structure.
struct DegenerateSeriesError : DataError {
    using DataError::DataError;
};

/// Model outside the supported domain, e.g. a non-stationary AR part.
struct ModelDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure: singular system, overflow, lost positive definiteness.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A case the implementation deliberately does not handle.
struct UnsupportedCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by the Levinson-Durbin recursion when the prediction variance
/// stops being positive; `order()` is the recursion order that failed.
class IllConditionedError : public NumericError {
public:
    IllConditionedError(const std::string& message, int order)
        : NumericError(message), order_(order) {}

    int order() const noexcept { return order_; }

private:
    int order_;
};

}  // namespace tsfine
