#pragma once

#include <stdexcept>
#include <string>

namespace vknot {

/// Broad classification used by front ends to pick an exit status.
enum class ErrorCategory {
  Validation,  ///< malformed input or an operation applied outside its domain
  Hypothesis,  ///< input is well formed but a theorem hypothesis fails
};

class Error : public std::runtime_error {
 public:
  Error(std::string name, ErrorCategory category, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)), category_(category) {}

  const std::string& name() const noexcept { return name_; }
  ErrorCategory category() const noexcept { return category_; }

 private:
  std::string name_;
  ErrorCategory category_;
};

#define VKNOT_DEFINE_ERROR(Type, Category)                      \
  class Type : public Error {                                  \
   public:                                                     \
    explicit Type(const std::string& what)                     \
        : Error(#Type, ErrorCategory::Category, what) {}       \
  };

// gauss_model
VKNOT_DEFINE_ERROR(SyntaxError, Validation)
VKNOT_DEFINE_ERROR(PairingError, Validation)
VKNOT_DEFINE_ERROR(SignError, Validation)
VKNOT_DEFINE_ERROR(IndexError, Validation)
VKNOT_DEFINE_ERROR(InvalidArc, Validation)

// carter_surface
VKNOT_DEFINE_ERROR(DegenerateDiagram, Validation)

// diagram_analysis
VKNOT_DEFINE_ERROR(MultiComponentUnsupported, Validation)
VKNOT_DEFINE_ERROR(NotAlternatingReduced, Hypothesis)

// composition
VKNOT_DEFINE_ERROR(InvalidTriple, Validation)
VKNOT_DEFINE_ERROR(CorkNotSingular, Hypothesis)
VKNOT_DEFINE_ERROR(CorkSingular, Hypothesis)
VKNOT_DEFINE_ERROR(NotCertifiedAlternating, Hypothesis)
VKNOT_DEFINE_ERROR(InvalidRegion, Validation)
VKNOT_DEFINE_ERROR(InvalidArgument, Validation)

// volume_bounds
VKNOT_DEFINE_ERROR(FormatError, Validation)
VKNOT_DEFINE_ERROR(NegativeVolume, Validation)
VKNOT_DEFINE_ERROR(MissingField, Hypothesis)
VKNOT_DEFINE_ERROR(MixedGenusUnsupported, Hypothesis)

#undef VKNOT_DEFINE_ERROR

}  // namespace vknot
