#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mosaic {

enum class ErrorCode {
  // input
  ParseError,
  UnknownElement,
  DuplicateLabel,
  SizeMismatch,
  // lattice construction
  CyclicCovers,
  NotBounded,
  NotALattice,
  NotAnInvolution,
  NotAnOrthocomplementation,
  NotASublattice,
  // hyperstructures
  NotAnLMosaic,
  NotASubmosaic,
  MissingBound,
  NoUniqueExtremum,
  ReconstructionFailure,
  PreconditionFailed,
  // catalog / cli
  UnknownName,
  SizeTooLarge,
  MissingOrtho,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mosaic
