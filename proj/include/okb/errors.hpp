#pragma once

#include <stdexcept>
#include <string>

namespace okb {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed arguments: dimension mismatches, zero rays, bad parameters.
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

// A point was required to lie in a cone/polytope/fan support and does not.
struct ContainmentError : Error {
  explicit ContainmentError(const std::string& what) : Error(what) {}
};

// A class vector lies outside the image cone of a global body.
struct NotPseudoEffective : Error {
  explicit NotPseudoEffective(const std::string& what) : Error(what) {}
};

// An instance (file or generated data) failed validation.  `reason` is one
// of the stable tags below; `detail` names the offending datum.
struct ValidationError : Error {
  enum class Reason { Malformed, NotPointed, NotFullDim, UnboundedFiber };
  Reason reason;
  std::string detail;
  ValidationError(Reason r, const std::string& detail_)
      : Error(tag(r) + ": " + detail_), reason(r), detail(detail_) {}
  static std::string tag(Reason r) {
    switch (r) {
      case Reason::Malformed: return "malformed instance";
      case Reason::NotPointed: return "cone is not pointed";
      case Reason::NotFullDim: return "cone is not full-dimensional";
      case Reason::UnboundedFiber: return "fibers are unbounded";
    }
    return "invalid instance";
  }
};

// A decomposition referenced a ray that is not a basis element.
struct BasisLookupError : Error {
  explicit BasisLookupError(const std::string& what) : Error(what) {}
};

// The sampled chamber segment could not support exact interpolation.
struct InterpolationError : Error {
  explicit InterpolationError(const std::string& what) : Error(what) {}
};

}  // namespace okb
