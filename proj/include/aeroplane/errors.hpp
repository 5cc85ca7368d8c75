#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aeroplane {

enum class ErrorKind {
  BoundaryAngle,
  InadmissibleWord,
  UnsupportedAlphabet,
  PrefixRelated,
  MissingFinalC,
  InadmissibleCycle,
  OverlapDetected,
  MarkerNotPreceded,
  WindowViolation,
  DegenerateLeaf,
  UnsupportedAngle,
  UnsupportedDepth,
  PairingAmbiguity,
  EmptyRegion,
  NotFound,
  LiftMismatch,
  MultipleActiveComponents,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundaryAngle: return "BoundaryAngle";
    case ErrorKind::InadmissibleWord: return "InadmissibleWord";
    case ErrorKind::UnsupportedAlphabet: return "UnsupportedAlphabet";
    case ErrorKind::PrefixRelated: return "PrefixRelated";
    case ErrorKind::MissingFinalC: return "MissingFinalC";
    case ErrorKind::InadmissibleCycle: return "InadmissibleCycle";
    case ErrorKind::OverlapDetected: return "OverlapDetected";
    case ErrorKind::MarkerNotPreceded: return "MarkerNotPreceded";
    case ErrorKind::WindowViolation: return "WindowViolation";
    case ErrorKind::DegenerateLeaf: return "DegenerateLeaf";
    case ErrorKind::UnsupportedAngle: return "UnsupportedAngle";
    case ErrorKind::UnsupportedDepth: return "UnsupportedDepth";
    case ErrorKind::PairingAmbiguity: return "PairingAmbiguity";
    case ErrorKind::EmptyRegion: return "EmptyRegion";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::LiftMismatch: return "LiftMismatch";
    case ErrorKind::MultipleActiveComponents: return "MultipleActiveComponents";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Position inside the offending word or orbit, when one applies.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace aeroplane
