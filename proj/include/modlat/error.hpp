#pragma once

#include <stdexcept>
#include <string>

namespace modlat {

// Error categories surfaced by the library.  CLI maps usage/limit errors to
// exit code 2; `check_failed` marks an internal mathematical consistency
// assertion (closure of a returned set, dual-oracle agreement, ...) that
// should never fire on correct code.
enum class errc {
  invalid_ring,
  invalid_module,
  ring_mismatch,
  module_mismatch,
  improper_input,
  invalid_input,
  invalid_multiplicative_set,
  relation_violation,
  unsupported_structure,
  size_limit,
  precondition_failed,
  check_failed,
  unknown_id,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace modlat
