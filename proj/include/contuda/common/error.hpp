#pragma once

#include <stdexcept>
#include <string>

namespace contuda {

// Bad arguments, shape mismatches, violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// NaN/inf inputs, non-differentiable paths, diverged training.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level problems (missing file, unreadable image, bad directory layout).
class FileError : public std::runtime_error {
 public:
  explicit FileError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dataset directory does not match the class taxonomy.
class TaxonomyError : public std::runtime_error {
 public:
  explicit TaxonomyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Checkpoint file damaged or truncated.
class CorruptCheckpointError : public std::runtime_error {
 public:
  explicit CorruptCheckpointError(const std::string& msg) : std::runtime_error(msg) {}
};

// Checkpoint written by an incompatible format version.
class CheckpointVersionError : public std::runtime_error {
 public:
  explicit CheckpointVersionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Stored checksum does not match recomputed one (header or config hash).
class ChecksumError : public std::runtime_error {
 public:
  explicit ChecksumError(const std::string& msg) : std::runtime_error(msg) {}
};

// Command-line usage problems.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace contuda
