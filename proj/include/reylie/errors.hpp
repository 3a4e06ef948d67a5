#pragma once

#include "reylie/exactlin.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace reylie {

/// Shapes or dimensions of the arguments do not fit together.
class ContractViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// One failed identity on one tuple of basis elements.
struct Violation {
    /// Short identity label, e.g. "jacobi", "reynolds", "derivation".
    std::string identity;
    /// Basis indices the identity was evaluated on (meaning depends on identity).
    std::vector<int> indices;
    /// LHS - RHS of the identity as written in `identity`'s documentation.
    Vector residual;
};

/// Outcome of a validator: empty list of violations means pass.
class Verdict {
  public:
    Verdict() = default;

    bool ok() const { return violations_.empty(); }
    explicit operator bool() const { return ok(); }
    const std::vector<Violation> &violations() const { return violations_; }

    void add(std::string identity, std::vector<int> indices, Vector residual);
    /// Record the residual only when it is nonzero.
    void check(const std::string &identity, std::vector<int> indices, Vector residual);
    void merge(const Verdict &other);
    /// Copy of the verdict where every identity label gets `prefix`.
    Verdict prefixed(const std::string &prefix) const;

    std::string summary() const;

  private:
    std::vector<Violation> violations_;
};

/// Input refused because a validator precondition does not hold.
class PreconditionFailure : public std::runtime_error {
  public:
    PreconditionFailure(const std::string &what, Verdict verdict);
    const Verdict &verdict() const { return verdict_; }

  private:
    Verdict verdict_;
};

/// A computed result failed an identity that the construction guarantees.
class PostconditionFailure : public std::logic_error {
  public:
    PostconditionFailure(const std::string &what, Verdict verdict);
    const Verdict &verdict() const { return verdict_; }

  private:
    Verdict verdict_;
};

/// Throws PreconditionFailure when the verdict is not ok.
void require(const Verdict &v, const std::string &what);
/// Throws PostconditionFailure when the verdict is not ok.
void ensure(const Verdict &v, const std::string &what);

} // namespace reylie
