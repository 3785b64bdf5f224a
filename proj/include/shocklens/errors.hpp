#pragma once

#include <stdexcept>
#include <string>

namespace shocklens {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SHOCKLENS_ERROR(NAME)                                         \
  struct NAME : Error {                                               \
    explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
  }

SHOCKLENS_ERROR(InvalidInput);
SHOCKLENS_ERROR(UnsupportedOrder);
SHOCKLENS_ERROR(NoShock);
SHOCKLENS_ERROR(DegenerateShock);
SHOCKLENS_ERROR(NonUniqueMin);
SHOCKLENS_ERROR(OutOfWindow);
SHOCKLENS_ERROR(CharacteristicsCrossed);
SHOCKLENS_ERROR(ToleranceNotMet);
SHOCKLENS_ERROR(NuTooSmall);
SHOCKLENS_ERROR(UnstableParameters);
SHOCKLENS_ERROR(EmptyGrid);
SHOCKLENS_ERROR(DegenerateInput);

#undef SHOCKLENS_ERROR

}  // namespace shocklens
