#pragma once

#include <stdexcept>
#include <string>

namespace footfall {

/// Base class for all library errors. Two branches: InputError for anything
/// wrong with the data or arguments handed in, NumericError for failures that
/// arise during computation (overflow, degenerate statistics).
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  /// Stable machine-readable error name, e.g. "InvalidEdge".
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class InputError : public Error {
  using Error::Error;
};

class NumericError : public Error {
  using Error::Error;
};

#define FOOTFALL_DEFINE_ERROR(NAME, BASE)                          \
  class NAME : public BASE {                                       \
  public:                                                          \
    explicit NAME(const std::string& message) : BASE(#NAME, message) {} \
  }

// graph
FOOTFALL_DEFINE_ERROR(InvalidEdge, InputError);
FOOTFALL_DEFINE_ERROR(DuplicateEdge, InputError);
FOOTFALL_DEFINE_ERROR(NodeNotFound, InputError);
FOOTFALL_DEFINE_ERROR(Unreachable, InputError);

// syntax
FOOTFALL_DEFINE_ERROR(IsolatedNode, InputError);

// mdp
FOOTFALL_DEFINE_ERROR(EmptyGraph, InputError);
FOOTFALL_DEFINE_ERROR(InvalidTrajectory, InputError);

// irl
FOOTFALL_DEFINE_ERROR(EmptyCorpus, InputError);
FOOTFALL_DEFINE_ERROR(TrajectoryTooLong, InputError);
FOOTFALL_DEFINE_ERROR(InvalidDistribution, InputError);
FOOTFALL_DEFINE_ERROR(TooLarge, InputError);
FOOTFALL_DEFINE_ERROR(NumericalOverflow, NumericError);

// datagen
FOOTFALL_DEFINE_ERROR(GraphTooSmall, InputError);
FOOTFALL_DEFINE_ERROR(BadSplit, InputError);
FOOTFALL_DEFINE_ERROR(MalformedXml, InputError);
FOOTFALL_DEFINE_ERROR(NoHighways, InputError);

// eval
FOOTFALL_DEFINE_ERROR(GraphMismatch, InputError);
FOOTFALL_DEFINE_ERROR(DegenerateInput, NumericError);

// io / config
FOOTFALL_DEFINE_ERROR(ParseError, InputError);
FOOTFALL_DEFINE_ERROR(ConfigError, InputError);
FOOTFALL_DEFINE_ERROR(IoError, InputError);

#undef FOOTFALL_DEFINE_ERROR

}  // namespace footfall
