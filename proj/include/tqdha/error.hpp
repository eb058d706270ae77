#pragma once

#include <stdexcept>
#include <string>

namespace tqdha {

// Base of every error the library raises. `kind()` is the stable name used
// in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define TQDHA_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

// scalar-field
TQDHA_DEFINE_ERROR(ParseError);
TQDHA_DEFINE_ERROR(ExtensionUnavailable);
TQDHA_DEFINE_ERROR(NonInvertible);
TQDHA_DEFINE_ERROR(FieldMismatch);

// group-action
TQDHA_DEFINE_ERROR(GroupTooLarge);
TQDHA_DEFINE_ERROR(SingularGenerator);
TQDHA_DEFINE_ERROR(FieldTooSmall);
TQDHA_DEFINE_ERROR(DimensionMismatch);

// pbw / hochschild
TQDHA_DEFINE_ERROR(PreconditionFailed);
TQDHA_DEFINE_ERROR(NotAdmissible);
TQDHA_DEFINE_ERROR(UnsupportedRegime);
TQDHA_DEFINE_ERROR(NotDiagonal);
TQDHA_DEFINE_ERROR(DegreeTooLarge);
TQDHA_DEFINE_ERROR(NotConstant);
TQDHA_DEFINE_ERROR(DiagonalNonzero);

// cli
TQDHA_DEFINE_ERROR(SchemaError);
TQDHA_DEFINE_ERROR(QInvariantViolation);
TQDHA_DEFINE_ERROR(UnknownCommand);

#undef TQDHA_DEFINE_ERROR

}  // namespace tqdha
