#pragma once

#include <stdexcept>
#include <string>

namespace oss {

// Base class for all numerical failures raised by the toolkit. The CLI maps
// these to exit code 3 and serializes name() into the error report.
class SolverError : public std::runtime_error {
public:
    SolverError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define OSS_DEFINE_ERROR(Name)                                        \
    class Name : public SolverError {                                 \
    public:                                                           \
        explicit Name(const std::string& what) : SolverError(#Name, what) {} \
    }

OSS_DEFINE_ERROR(DomainError);
OSS_DEFINE_ERROR(DivisionNearZero);
OSS_DEFINE_ERROR(OutsideAnalyticityStrip);
OSS_DEFINE_ERROR(NoConvergence);
OSS_DEFINE_ERROR(BranchAmbiguity);
OSS_DEFINE_ERROR(QuadratureFailure);
OSS_DEFINE_ERROR(NotContracting);
OSS_DEFINE_ERROR(ImagPartZero);
OSS_DEFINE_ERROR(SingularityTooStrong);
OSS_DEFINE_ERROR(DegenerateTrace);
OSS_DEFINE_ERROR(BasinEscape);
OSS_DEFINE_ERROR(NoSignChange);
OSS_DEFINE_ERROR(IllConditioned);
OSS_DEFINE_ERROR(SingularShift);
OSS_DEFINE_ERROR(ConfigError);

#undef OSS_DEFINE_ERROR

}  // namespace oss
