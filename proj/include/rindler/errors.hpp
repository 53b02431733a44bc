#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rindler {

// Two failure families, chosen so a CLI driver can map exceptions to exit
// codes without enumerating types: configuration/domain problems (bad
// parameters, bad files) and numerical problems (quadrature breakdown,
// divergent integrands, inconsistent refinements).
enum class ErrorClass { Config, Numerical };

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what),
        class_(cls),
        kind_(std::move(kind)) {}

  ErrorClass error_class() const noexcept { return class_; }
  const std::string& kind() const noexcept { return kind_; }

private:
  ErrorClass class_;
  std::string kind_;
};

#define RINDLER_DEFINE_ERROR(NAME, CLASS)                                   \
  class NAME : public Error {                                               \
  public:                                                                   \
    explicit NAME(const std::string& what)                                  \
        : Error(ErrorClass::CLASS, #NAME, what) {}                          \
  };

RINDLER_DEFINE_ERROR(ConfigError, Config)
RINDLER_DEFINE_ERROR(DomainError, Config)
RINDLER_DEFINE_ERROR(SizeCapExceeded, Config)

RINDLER_DEFINE_ERROR(NonIntegrableSingularity, Numerical)
RINDLER_DEFINE_ERROR(TruncationFailure, Numerical)
RINDLER_DEFINE_ERROR(ExtrapolationDiverged, Numerical)
RINDLER_DEFINE_ERROR(OutsideWedge, Numerical)
RINDLER_DEFINE_ERROR(HorizonPoint, Numerical)
RINDLER_DEFINE_ERROR(GridTooCoarse, Numerical)
RINDLER_DEFINE_ERROR(HorizonClipping, Numerical)
RINDLER_DEFINE_ERROR(WindowTooNarrow, Numerical)
RINDLER_DEFINE_ERROR(SeriesNotConverged, Numerical)
RINDLER_DEFINE_ERROR(DivergentStaticResponse, Numerical)
RINDLER_DEFINE_ERROR(InterpolationOutOfRange, Numerical)
RINDLER_DEFINE_ERROR(TDependenceResidual, Numerical)

#undef RINDLER_DEFINE_ERROR

}  // namespace rindler
