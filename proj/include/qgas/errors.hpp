#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgas {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Bose occupation at the condensation point z = 1, beta*eps = 0.
class SingularityError : public DomainError {
  public:
    SingularityError(const std::string& what, double z, double beta_eps)
        : DomainError(what), z_(z), beta_eps_(beta_eps) {}

    double z() const noexcept { return z_; }
    double beta_eps() const noexcept { return beta_eps_; }

  private:
    double z_;
    double beta_eps_;
};

/// Structural precondition violated (bad grid, degenerate range).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Series hit max_terms while the current term was still above tolerance.
class TruncationError : public std::runtime_error {
  public:
    TruncationError(const std::string& what, double partial_sum, double last_term,
                    std::size_t terms)
        : std::runtime_error(what), partial_sum_(partial_sum), last_term_(last_term),
          terms_(terms) {}

    double partial_sum() const noexcept { return partial_sum_; }
    double last_term() const noexcept { return last_term_; }
    std::size_t terms() const noexcept { return terms_; }

  private:
    double partial_sum_;
    double last_term_;
    std::size_t terms_;
};

/// Iterative method did not reach the requested accuracy.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qgas
