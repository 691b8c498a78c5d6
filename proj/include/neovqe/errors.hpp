#pragma once

#include <stdexcept>
#include <string>

namespace neovqe {

// All library failures derive from Error so the CLI can attribute a
// failing pipeline stage from a single catch site.
class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct UnsupportedAngularMomentum : Error {
  explicit UnsupportedAngularMomentum(const std::string& what)
      : Error("basis-integrals", what) {}
};

struct IllConditionedBasis : Error {
  explicit IllConditionedBasis(const std::string& what)
      : Error("basis-integrals", what) {}
};

struct ParseError : Error {
  ParseError(std::string stage, const std::string& what)
      : Error(std::move(stage), what) {}
};

struct DimensionError : Error {
  DimensionError(std::string stage, const std::string& what)
      : Error(std::move(stage), what) {}
};

struct SymmetryViolation : Error {
  explicit SymmetryViolation(const std::string& what)
      : Error("tapering", what) {}
};

}  // namespace neovqe
