#pragma once

#include <stdexcept>
#include <string>

namespace tpht {

/// Base class for named numerical failures. The CLI maps these to exit code 3
/// and reports name() alongside the message.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
    virtual const char* name() const { return "NumericalError"; }
};

#define TPHT_DEFINE_ERROR(Type)                                                   \
    struct Type : NumericalError {                                                \
        explicit Type(const std::string& what) : NumericalError(what) {}          \
        const char* name() const override { return #Type; }                       \
    }

TPHT_DEFINE_ERROR(ZeroPivot);
TPHT_DEFINE_ERROR(ZeroLeadingMinor);
TPHT_DEFINE_ERROR(SingularBlock);
TPHT_DEFINE_ERROR(DegenerateFactorization);
TPHT_DEFINE_ERROR(NoConvergence);
TPHT_DEFINE_ERROR(ComplexSpectrum);
TPHT_DEFINE_ERROR(RepeatedEigenvalue);
TPHT_DEFINE_ERROR(VerificationFailed);
TPHT_DEFINE_ERROR(SpectrumMismatch);
TPHT_DEFINE_ERROR(ImagResidueTooLarge);

#undef TPHT_DEFINE_ERROR

} // namespace tpht
