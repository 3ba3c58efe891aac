#pragma once

#include <stdexcept>
#include <string>

namespace wmcorr {

/// Base of every error raised by the library. `kind()` is a stable short
/// identifier used by the CLI and in reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define WMCORR_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  };

WMCORR_DEFINE_ERROR(InvalidState)
WMCORR_DEFINE_ERROR(InvalidObservable)
WMCORR_DEFINE_ERROR(DimensionError)
WMCORR_DEFINE_ERROR(InvalidCovariance)
WMCORR_DEFINE_ERROR(GridCoverage)
WMCORR_DEFINE_ERROR(NormalizationError)
WMCORR_DEFINE_ERROR(RepresentationError)
WMCORR_DEFINE_ERROR(PostselectionFailed)
WMCORR_DEFINE_ERROR(InvalidParams)
WMCORR_DEFINE_ERROR(UnusableProbe)

#undef WMCORR_DEFINE_ERROR

/// Raised when |<post|pre>| falls below the overlap floor.
class NearOrthogonalPostselection : public Error {
 public:
  explicit NearOrthogonalPostselection(double overlap)
      : Error("NearOrthogonalPostselection",
              "|<post|pre>| = " + std::to_string(overlap) + " below floor"),
        overlap_(overlap) {}
  double overlap() const noexcept { return overlap_; }

 private:
  double overlap_;
};

/// Configuration problems; `path` is a JSON-pointer-like location.
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& what)
      : Error("ConfigError", path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace wmcorr
