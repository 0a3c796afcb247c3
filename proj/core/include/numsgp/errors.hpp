#pragma once

#include <stdexcept>
#include <string>

namespace numsgp {

// Every failure mode the library reports. Exceptions carry one of these so
// callers (and tests) can dispatch without parsing messages.
enum class errc {
  gcd_not_one,
  not_minimal,
  overflow,
  not_an_element,
  index_out_of_range,
  precondition_failed,
  tie_undefined,
  symmetric_input,
  no_positive_decomposition,
  internal_inconsistency,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::not_minimal: return "NotMinimal";
    case errc::overflow: return "Overflow";
    case errc::not_an_element: return "NotAnElement";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::tie_undefined: return "TieUndefined";
    case errc::symmetric_input: return "SymmetricInput";
    case errc::no_positive_decomposition: return "NoPositiveDecomposition";
    case errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

}  // namespace numsgp
