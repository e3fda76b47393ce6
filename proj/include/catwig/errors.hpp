#pragma once

#include <stdexcept>
#include <string>

namespace catwig {

// Requested operation needs a normalizable state but got (numerically) zero norm.
class ZeroNormState : public std::runtime_error {
  public:
    explicit ZeroNormState(const std::string& what) : std::runtime_error(what) {}
};

// A truncated Fock expansion cannot hold the requested state accurately.
class TruncationTooSmall : public std::runtime_error {
  public:
    explicit TruncationTooSmall(const std::string& what) : std::runtime_error(what) {}
};

// Two grids with different geometry were combined.
class GridMismatch : public std::runtime_error {
  public:
    explicit GridMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Figure/panel outside the supported set.
class UnknownPanel : public std::runtime_error {
  public:
    explicit UnknownPanel(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace catwig
