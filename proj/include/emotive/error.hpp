#pragma once

#include <stdexcept>
#include <string>

namespace emotive {

/// Bad or unreadable input: manifests, resource files, lexicons, config.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input was readable but could not be analyzed (empty document,
/// degenerate statistics, failed output write).
class ProcessingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emotive
