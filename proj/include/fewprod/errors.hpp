#ifndef FEWPROD_ERRORS_HPP
#define FEWPROD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fewprod {

// Enumeration refused to materialize past a configured cap. Always loud,
// never a silent truncation.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Trial division and Pollard rho gave up on a composite cofactor.
class FactorizationError : public std::runtime_error {
  public:
    FactorizationError(const std::string& what, std::string cofactor)
        : std::runtime_error(what + " (cofactor " + cofactor + ")"), cofactor_(std::move(cofactor)) {}
    const std::string& cofactor() const { return cofactor_; }

  private:
    std::string cofactor_;
};

// A condition the library guarantees unconditionally failed to hold.
class InvariantViolation : public std::logic_error {
  public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

struct Budget {
    std::uint64_t max_set_elements = 10'000'000;   // cap on any materialized set
    std::uint64_t max_tuples = 100'000'000;        // cap on tuple-space enumerations
};

inline const Budget& default_budget() {
    static const Budget b{};
    return b;
}

}  // namespace fewprod

#endif
