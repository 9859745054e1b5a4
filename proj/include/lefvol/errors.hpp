#pragma once

#include <stdexcept>
#include <string>

namespace lefvol {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A simplex with repeated or missing vertices.
class MalformedSimplexError : public Error {
 public:
  using Error::Error;
};

/// A vertex assignment that is not a simplicial self-map.
class MapError : public Error {
 public:
  using Error::Error;
};

/// Queried face is not a face of the given simplex.
class FaceRelationError : public Error {
 public:
  using Error::Error;
};

/// Embedded simplex is affinely degenerate.
class DegenerateSimplexError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (sample counts, suite names, generator bounds).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Random-pair generation exhausted its rejection budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Least-squares system does not determine all coefficients.
class RankDeficientError : public Error {
 public:
  RankDeficientError(const std::string& what, int rank, int null_space_dim)
      : Error(what), rank(rank), null_space_dim(null_space_dim) {}

  int rank;
  int null_space_dim;
};

}  // namespace lefvol
