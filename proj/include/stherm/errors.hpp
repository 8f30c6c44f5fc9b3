#pragma once

#include <stdexcept>
#include <string>

namespace stherm {

// Base for every error raised by the library. The kind() string is the
// stable name used in diagnostics and in sweep error sentinels.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string &what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string &kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define STHERM_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string &what) : Error(#Name, what) {}       \
  };

// hermitian_core
STHERM_DEFINE_ERROR(NotSquare)
STHERM_DEFINE_ERROR(NotHermitian)
STHERM_DEFINE_ERROR(ConvergenceFailure)
STHERM_DEFINE_ERROR(NonFiniteResult)

// thermal_states
STHERM_DEFINE_ERROR(DimensionMismatch)
STHERM_DEFINE_ERROR(InvalidSector)
STHERM_DEFINE_ERROR(InvalidDensityMatrix)
STHERM_DEFINE_ERROR(InvalidTemperature)
STHERM_DEFINE_ERROR(InvalidSectorDecomposition)
STHERM_DEFINE_ERROR(NotBlockDiagonal)
STHERM_DEFINE_ERROR(SupportViolation)
STHERM_DEFINE_ERROR(NotAProbabilityVector)

// ergotropy_engine
STHERM_DEFINE_ERROR(BracketFailure)
STHERM_DEFINE_ERROR(DegenerateEffectiveTemperature)
STHERM_DEFINE_ERROR(PureStateLimit)
STHERM_DEFINE_ERROR(DegenerateHamiltonian)

// demon_circuit
STHERM_DEFINE_ERROR(SpecMismatch)

// sweep_cli
STHERM_DEFINE_ERROR(ParseError)
STHERM_DEFINE_ERROR(ValidationError)
STHERM_DEFINE_ERROR(IoError)

#undef STHERM_DEFINE_ERROR

}  // namespace stherm
