#pragma once

#include <stdexcept>
#include <string>

namespace qlat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error {
  using Error::Error;
};
struct EntryOutOfRange : Error {
  using Error::Error;
};
struct AmbientMismatch : Error {
  using Error::Error;
};
struct DimensionOrderViolation : Error {
  using Error::Error;
};
struct MixedDimensions : Error {
  using Error::Error;
};
struct TopLayer : Error {
  using Error::Error;
};
struct EmptyFamily : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct NegativeArgument : Error {
  using Error::Error;
};
struct SizeZero : Error {
  using Error::Error;
};
struct DimensionOverflow : Error {
  using Error::Error;
};
struct BadParameters : Error {
  using Error::Error;
};
struct HypothesisViolated : Error {
  using Error::Error;
};
struct BadAnchor : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qlat
