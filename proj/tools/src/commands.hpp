#pragma once

#include "document.hpp"

#include <string>

namespace gres::cli {

/// A command failed for a computational reason (size limit, degree range). Exit status 4.
class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs the commands in order; one result object per command.
Json run_commands(const Document& d, const Settings& settings);

/// Human-readable report of run_commands output.
std::string render(const Json& results);

}  // namespace gres::cli
