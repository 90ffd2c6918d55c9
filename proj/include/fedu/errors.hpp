#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fedu {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

#define FEDU_ERROR_KIND(Name, tag)                          \
  class Name : public Error {                               \
   public:                                                  \
    using Error::Error;                                     \
    const char* kind() const noexcept override { return tag; } \
  };

FEDU_ERROR_KIND(DimensionError, "dimension")
FEDU_ERROR_KIND(ArchError, "architecture")
FEDU_ERROR_KIND(ConformanceError, "conformance")
FEDU_ERROR_KIND(DomainError, "domain")
FEDU_ERROR_KIND(IngestionError, "ingestion")
FEDU_ERROR_KIND(IntegrityError, "integrity")
FEDU_ERROR_KIND(FormatError, "format")

#undef FEDU_ERROR_KIND

// Carries every problem found while validating a configuration, not just the
// first one.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> issues);
  const char* kind() const noexcept override { return "config"; }
  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  std::vector<std::string> issues_;
};

}  // namespace fedu
