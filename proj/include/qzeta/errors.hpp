#ifndef QZETA_ERRORS_HPP
#define QZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qzeta {

// Division by a zero rational, polynomial, or rational function.
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// poly_exact_div was asked to divide something that does not divide exactly.
// This always signals a bug upstream (e.g. a q-binomial that failed to
// certify as a polynomial), so it carries the offending operands.
struct NonExactDivision : std::logic_error {
    explicit NonExactDivision(const std::string& what) : std::logic_error(what) {}
};

// A denominator vanished (exactly, or numerically below the trust threshold)
// at an evaluation point.  `index` is the series index k when applicable.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what, long index = -1)
        : std::domain_error(what), index(index) {}
    long index;
};

// An exact computation exceeded the configured degree cap.  Reported
// distinctly from a mismatch: the check did not run to completion.
struct ResourceLimitExceeded : std::runtime_error {
    explicit ResourceLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A series did not satisfy the geometric stopping rule within the term cap.
struct NonConvergentSeries : std::runtime_error {
    explicit NonConvergentSeries(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qzeta

#endif
