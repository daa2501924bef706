#pragma once

#include <stdexcept>
#include <string>

namespace mnl {

  // Malformed or mathematically invalid input (not a lattice, table not
  // total, precondition violated). Maps to exit status 2 in the CLI.
  class InputError : public std::runtime_error {
   public:
    explicit InputError(std::string const& what) : std::runtime_error(what) {}
  };

  // A search or construction would exceed a configured size limit.
  class LimitExceeded : public InputError {
   public:
    explicit LimitExceeded(std::string const& what) : InputError(what) {}
  };

  // A property that is a theorem for valid input failed to hold. Either the
  // input slipped past validation or the implementation is wrong.
  class InternalInconsistency : public std::logic_error {
   public:
    explicit InternalInconsistency(std::string const& what)
        : std::logic_error(what) {}
  };

}  // namespace mnl
