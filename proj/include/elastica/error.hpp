#pragma once

#include <stdexcept>
#include <string>

namespace elastica {

// Base class for all domain errors thrown by this library.  Callers that do
// not care about the precise failure can catch this one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- numerics ---
struct NoSignChange : Error {
  explicit NoSignChange(const std::string& what) : Error(what) {}
};
struct MaxIterExceeded : Error {
  explicit MaxIterExceeded(const std::string& what) : Error(what) {}
};
struct TooFewSamples : Error {
  explicit TooFewSamples(const std::string& what) : Error(what) {}
};

// --- elliptic ---
struct ParameterOutOfRange : Error {
  explicit ParameterOutOfRange(const std::string& what) : Error(what) {}
};

// --- curves ---
struct DegenerateCurve : Error {
  explicit DegenerateCurve(const std::string& what) : Error(what) {}
};
struct NotClosed : Error {
  explicit NotClosed(const std::string& what) : Error(what) {}
};

// --- networks ---
struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error(what) {}
};
struct DisconnectedNetwork : Error {
  explicit DisconnectedNetwork(const std::string& what) : Error(what) {}
};
struct JunctionMismatch : Error {
  explicit JunctionMismatch(const std::string& what) : Error(what) {}
};
struct NotTripleJunction : Error {
  explicit NotTripleJunction(const std::string& what) : Error(what) {}
};
struct AngleOutOfRange : Error {
  explicit AngleOutOfRange(const std::string& what) : Error(what) {}
};
struct NotTheta : Error {
  explicit NotTheta(const std::string& what) : Error(what) {}
};
struct InfiniteEnergy : Error {
  explicit InfiniteEnergy(const std::string& what) : Error(what) {}
};

// --- competitors ---
struct NonpositiveRadius : Error {
  explicit NonpositiveRadius(const std::string& what) : Error(what) {}
};
struct DegenerateAngle : Error {
  explicit DegenerateAngle(const std::string& what) : Error(what) {}
};

// --- rescaling ---
struct ZeroBending : Error {
  explicit ZeroBending(const std::string& what) : Error(what) {}
};
struct NonpositiveConstraint : Error {
  explicit NonpositiveConstraint(const std::string& what) : Error(what) {}
};

}  // namespace elastica
