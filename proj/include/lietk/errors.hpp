#pragma once

#include <stdexcept>
#include <string>

namespace lietk {

/// Base class for every domain error raised by the toolkit. `kind()` is the
/// stable machine-readable name printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LIETK_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

LIETK_DEFINE_ERROR(InvalidType)
LIETK_DEFINE_ERROR(UnrecognizedDiagram)
LIETK_DEFINE_ERROR(NotAnAutomorphism)
LIETK_DEFINE_ERROR(RankBoundExceeded)
LIETK_DEFINE_ERROR(SingularSystem)
LIETK_DEFINE_ERROR(NonTrivialCompactPart)
LIETK_DEFINE_ERROR(UnknownLine)
LIETK_DEFINE_ERROR(IllegalDifference)
LIETK_DEFINE_ERROR(BoundViolated)
LIETK_DEFINE_ERROR(InvalidSetting)
LIETK_DEFINE_ERROR(MalformedSkeleton)
LIETK_DEFINE_ERROR(NotHyperbolicCenter)
LIETK_DEFINE_ERROR(NonDominantUnresolvable)
LIETK_DEFINE_ERROR(ParseError)

#undef LIETK_DEFINE_ERROR

}  // namespace lietk
