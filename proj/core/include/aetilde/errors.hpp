// Error hierarchy for the aetilde library.
//
// Every library error derives from aet::Error, which carries a stable
// module-qualified code string ("quiver.OrientedCycle", "grcompute.NotASink",
// ...) alongside the human-readable message.  Callers that need to branch on
// the failure should use code(); the message is for diagnostics only.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace aet {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define AETILDE_DEFINE_ERROR(Name, Code)                       \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& message)                  \
        : Error(Code, message) {}                              \
  }

// quiver
AETILDE_DEFINE_ERROR(MalformedWord, "quiver.MalformedWord");
AETILDE_DEFINE_ERROR(OrientedCycle, "quiver.OrientedCycle");
AETILDE_DEFINE_ERROR(DuplicateLabel, "quiver.DuplicateLabel");
AETILDE_DEFINE_ERROR(LabelCountMismatch, "quiver.LabelCountMismatch");
AETILDE_DEFINE_ERROR(BoundTooSmall, "quiver.BoundTooSmall");

// measure
AETILDE_DEFINE_ERROR(EmptySequence, "measure.EmptySequence");
AETILDE_DEFINE_ERROR(EmptyPeriod, "measure.EmptyPeriod");

// strings
AETILDE_DEFINE_ERROR(UnknownLabel, "strings.UnknownLabel");
AETILDE_DEFINE_ERROR(NonpositiveDim, "strings.NonpositiveDim");
AETILDE_DEFINE_ERROR(NoIncomingArrow, "strings.NoIncomingArrow");
AETILDE_DEFINE_ERROR(NoOutgoingArrow, "strings.NoOutgoingArrow");

// grcompute
AETILDE_DEFINE_ERROR(NotASink, "grcompute.NotASink");
AETILDE_DEFINE_ERROR(NoPeriodicPart, "grcompute.NoPeriodicPart");
AETILDE_DEFINE_ERROR(BoundExceeded, "grcompute.BoundExceeded");

// artubes
AETILDE_DEFINE_ERROR(NoMonoStep, "artubes.NoMonoStep");
AETILDE_DEFINE_ERROR(NoEpiStep, "artubes.NoEpiStep");

// rhombic
AETILDE_DEFINE_ERROR(LimitMismatch, "rhombic.LimitMismatch");
AETILDE_DEFINE_ERROR(NotRegular, "rhombic.NotRegular");

// cli
AETILDE_DEFINE_ERROR(UsageError, "cli.UsageError");

#undef AETILDE_DEFINE_ERROR

}  // namespace aet
