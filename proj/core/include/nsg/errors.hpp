#ifndef NSG_ERRORS_HPP
#define NSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nsg {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define NSG_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                         \
    explicit Name(const std::string& what) : Error(what) {}     \
  }

// semigroup-core
NSG_DEFINE_ERROR(EmptyInput);
NSG_DEFINE_ERROR(GcdNotOne);
NSG_DEFINE_ERROR(NotAMember);
NSG_DEFINE_ERROR(TooManyGaps);
NSG_DEFINE_ERROR(AlphaEven);
NSG_DEFINE_ERROR(AlphaNotInH1);
NSG_DEFINE_ERROR(AlphaIsGenerator);

// relative-ideals
NSG_DEFINE_ERROR(BaseMismatch);
NSG_DEFINE_ERROR(NotContained);

// classify
NSG_DEFINE_ERROR(NotIntegral);
NSG_DEFINE_ERROR(NotPrimary);
NSG_DEFINE_ERROR(InconsistentClassification);
NSG_DEFINE_ERROR(NotTwoAGL);

// extensions
NSG_DEFINE_ERROR(NotAdmissible);
NSG_DEFINE_ERROR(NotLocal);
NSG_DEFINE_ERROR(TruncationTooSmall);

// ulrich
NSG_DEFINE_ERROR(NotGorenstein);
NSG_DEFINE_ERROR(HypothesisFailed);
NSG_DEFINE_ERROR(PreconditionFailed);

// trunc-algebra
NSG_DEFINE_ERROR(StabilizationFailed);
NSG_DEFINE_ERROR(NoReductionFound);

// presentations
NSG_DEFINE_ERROR(ShapeMismatch);
NSG_DEFINE_ERROR(DegreeTooLarge);

// cli / io
NSG_DEFINE_ERROR(ParseError);
NSG_DEFINE_ERROR(MalformedCase);

#undef NSG_DEFINE_ERROR

}  // namespace nsg

#endif
