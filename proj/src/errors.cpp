#include "reylie/errors.hpp"

#include <sstream>

namespace reylie {

void Verdict::add(std::string identity, std::vector<int> indices, Vector residual) {
    violations_.push_back({std::move(identity), std::move(indices), std::move(residual)});
}

void Verdict::check(const std::string &identity, std::vector<int> indices, Vector residual) {
    if (!is_zero(residual))
        add(identity, std::move(indices), std::move(residual));
}

void Verdict::merge(const Verdict &other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

Verdict Verdict::prefixed(const std::string &prefix) const {
    Verdict out = *this;
    for (auto &v : out.violations_)
        v.identity = prefix + v.identity;
    return out;
}

std::string Verdict::summary() const {
    if (ok())
        return "pass";
    std::ostringstream os;
    os << violations_.size() << " violation(s)";
    for (const auto &v : violations_) {
        os << "\n  " << v.identity << " (";
        for (std::size_t i = 0; i < v.indices.size(); ++i)
            os << (i ? "," : "") << v.indices[i];
        os << "): [";
        for (std::size_t i = 0; i < v.residual.size(); ++i)
            os << (i ? ", " : "") << format_scalar(v.residual[i]);
        os << ']';
    }
    return os.str();
}

PreconditionFailure::PreconditionFailure(const std::string &what, Verdict verdict)
    : std::runtime_error(what + ": " + verdict.summary()), verdict_(std::move(verdict)) {}

PostconditionFailure::PostconditionFailure(const std::string &what, Verdict verdict)
    : std::logic_error(what + ": " + verdict.summary()), verdict_(std::move(verdict)) {}

void require(const Verdict &v, const std::string &what) {
    if (!v.ok())
        throw PreconditionFailure(what, v);
}

void ensure(const Verdict &v, const std::string &what) {
    if (!v.ok())
        throw PostconditionFailure(what, v);
}

} // namespace reylie
