#pragma once

#include <stdexcept>
#include <string>

namespace qtree {

/// Base of every error raised by the library. `exit_code()` is what the CLI
/// returns when the error escapes a subcommand.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 2; }
};

/// Malformed input: unknown vertex ids, broken files, violated preconditions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The rotation system does not describe a plane embedding.
class EmbeddingError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Short-cycle enumeration exceeded its configured cap. Distinct from a
/// negative answer.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A metric query reaches past the radius up to which the patch is known to
/// agree with the graph it stands for.
class CertificationError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// A construction that the underlying theorem guarantees has failed. Either
/// the input violates a hypothesis that was not checked or there is a bug.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

}  // namespace qtree
