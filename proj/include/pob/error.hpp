#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pob {

enum class ErrorCode {
  // presentation
  UnmatchedPair,
  NoBoundary,
  NonOrientable,
  InteriorVertex,
  InvalidPresentation,
  // arcs
  UnknownPair,
  UnknownSide,
  BadPosition,
  NoSharedStart,
  // partial open books
  BasisNotDisjoint,
  ImagesNotDisjoint,
  EndpointMismatch,
  ArcNotEmbedded,
  DuplicatePosition,
  InvalidPOB,
  SiteObstructed,
  // constructions
  OddTwist,
  ZeroTwist,
  EvenCoefficient,
  InvalidSpec,
  NotABasis,
  // documents
  ParseError,
};

std::string_view to_string(ErrorCode code);

struct Diagnostic {
  ErrorCode code;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pob
