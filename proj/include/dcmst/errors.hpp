#pragma once

#include <stdexcept>
#include <string>

namespace dcmst {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file (message carries the line number).
struct ParseError : Error {
  using Error::Error;
};

// Structural invariant violated (self-loop, duplicate edge, disconnected
// graph, bad tree encoding, ...).
struct ValidationError : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

// Brute-force oracle guard: enumeration is only allowed for tiny instances.
struct InstanceTooLarge : Error {
  using Error::Error;
};

// The degree-constrained greedy initializer gave up after its retry budget.
// Distinct from proven infeasibility: the greedy can fail on feasible input.
struct ConstructionFailed : Error {
  using Error::Error;
};

// A move no longer matches the tree it is being applied to.
struct StaleMove : Error {
  using Error::Error;
};

struct ProtocolError : Error {
  using Error::Error;
};

struct TransportError : Error {
  using Error::Error;
};

struct SatelliteLost : Error {
  using Error::Error;
};

struct CentralLost : Error {
  using Error::Error;
};

}  // namespace dcmst
