#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kwall {

// All library errors carry a stable machine-readable code alongside the
// human-readable message.  Codes ending up on the CLI surface map to exit
// status 2 (bad input) or 3 (internal invariant violation).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define KWALL_DEFINE_ERROR(Name)                       \
  class Name : public Error {                          \
   public:                                             \
    explicit Name(const std::string& what)             \
        : Error(#Name, what) {}                        \
  }

// exact_algebra
KWALL_DEFINE_ERROR(WidthMismatch);
KWALL_DEFINE_ERROR(NonUnitExtremes);
KWALL_DEFINE_ERROR(Singular);
KWALL_DEFINE_ERROR(ShapeError);

// perverse_disk
KWALL_DEFINE_ERROR(InvalidInput);
KWALL_DEFINE_ERROR(CertificateFailure);

// kgit
KWALL_DEFINE_ERROR(NotCalabiYau);
KWALL_DEFINE_ERROR(NoWall);
KWALL_DEFINE_ERROR(InternalInvariantViolation);

// cli
KWALL_DEFINE_ERROR(ScenarioError);

#undef KWALL_DEFINE_ERROR

// Signals a bug in the library rather than bad user input.
inline bool is_internal_error(const Error& e) {
  return e.code() == "CertificateFailure" ||
         e.code() == "InternalInvariantViolation";
}

}  // namespace kwall
