#pragma once

#include <stdexcept>
#include <string>

namespace wythoff {

/// Base class for every domain error raised by the library. `kind()` names the
/// error the way the CLI reports it (e.g. "NotFiniteType").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define WYTHOFF_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

WYTHOFF_DEFINE_ERROR(ParseError)
WYTHOFF_DEFINE_ERROR(NotFiniteType)
WYTHOFF_DEFINE_ERROR(BudgetExceeded)
WYTHOFF_DEFINE_ERROR(ToleranceCollision)
WYTHOFF_DEFINE_ERROR(SubgroupNotContained)
WYTHOFF_DEFINE_ERROR(NotApplicable)
WYTHOFF_DEFINE_ERROR(InvalidS)
WYTHOFF_DEFINE_ERROR(Degenerate)
WYTHOFF_DEFINE_ERROR(SingularSystem)
WYTHOFF_DEFINE_ERROR(DedupCollision)
WYTHOFF_DEFINE_ERROR(SpanDeficient)
WYTHOFF_DEFINE_ERROR(UnsupportedDimension)
WYTHOFF_DEFINE_ERROR(UnknownName)

#undef WYTHOFF_DEFINE_ERROR

}  // namespace wythoff
