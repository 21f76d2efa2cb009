#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace lgf {

enum class Errc {
  Syntax,                // malformed input text (carries a byte offset)
  Validation,            // well-formed text violating a notation rule
  Geometry,              // built diagram violates a FrontDiagram invariant
  NegativeCoeff,         // a coefficient would drop below zero
  Tangency,              // strands parallel AND touching: not an embedded link
  Degenerate,            // indecisive critical point; perturb amplitudes
  Inconclusive,          // value ladder matched no counting template
  Inconsistent,          // branch indices do not close up around a strand
  NormalizationSuspect,  // oracle output violates the total-homology bound
  Size,                  // input too large for exhaustive checking
  Internal,              // broken invariant inside this library
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Syntax: return "SYNTAX";
    case Errc::Validation: return "VALIDATION";
    case Errc::Geometry: return "GEOMETRY";
    case Errc::NegativeCoeff: return "NEGATIVE_COEFF";
    case Errc::Tangency: return "TANGENCY";
    case Errc::Degenerate: return "DEGENERATE";
    case Errc::Inconclusive: return "INCONCLUSIVE";
    case Errc::Inconsistent: return "INCONSISTENT";
    case Errc::NormalizationSuspect: return "NORMALIZATION_SUSPECT";
    case Errc::Size: return "SIZE";
    case Errc::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  static constexpr std::ptrdiff_t no_offset = -1;

  Error(Errc code, const std::string& message, std::ptrdiff_t byte_offset = no_offset)
      : std::runtime_error(render(code, message, byte_offset)),
        code_(code),
        offset_(byte_offset) {}

  Errc code() const { return code_; }
  std::ptrdiff_t offset() const { return offset_; }

 private:
  static std::string render(Errc code, const std::string& message, std::ptrdiff_t off) {
    std::string s = errc_name(code);
    s += ": ";
    s += message;
    if (off != no_offset) {
      s += " (byte ";
      s += std::to_string(off);
      s += ")";
    }
    return s;
  }

  Errc code_;
  std::ptrdiff_t offset_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message,
                              std::ptrdiff_t byte_offset = Error::no_offset) {
  throw Error(code, message, byte_offset);
}

}  // namespace lgf
