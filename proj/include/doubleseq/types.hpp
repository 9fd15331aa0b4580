// types.hpp — basic index/domain types and the error hierarchy.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace doubleseq {

using Index = std::int64_t;

/// 1-based index pair (k, l) into a double sequence.
struct IndexPair {
  Index k = 1;
  Index l = 1;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scan was requested over an empty or inverted index window.
class InvalidWindowError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

class UnknownNameError : public Error {
 public:
  using Error::Error;
};

class InvalidSelectorError : public Error {
 public:
  using Error::Error;
};

/// A generated or applied point fell outside the declared domain box.
/// Carries the offending index pair.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, IndexPair where)
      : Error(what), index_(where) {}
  IndexPair index() const { return index_; }

 private:
  IndexPair index_;
};

class KindMismatchError : public Error {
 public:
  using Error::Error;
};

/// Axis-aligned rectangular domain with per-edge open/closed flags.
struct DomainBox {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
  bool x_lo_open = false;
  bool x_hi_open = false;
  bool y_lo_open = false;
  bool y_hi_open = false;

  bool contains_x(double x) const {
    if (x_lo_open ? !(x > x_lo) : !(x >= x_lo)) return false;
    if (x_hi_open ? !(x < x_hi) : !(x <= x_hi)) return false;
    return true;
  }
  bool contains_y(double y) const {
    if (y_lo_open ? !(y > y_lo) : !(y >= y_lo)) return false;
    if (y_hi_open ? !(y < y_hi) : !(y <= y_hi)) return false;
    return true;
  }
  bool contains(double x, double y) const {
    return contains_x(x) && contains_y(y);
  }
  bool contains(Point2 p) const { return contains(p.x, p.y); }

  double width() const { return x_hi - x_lo; }
  double height() const { return y_hi - y_lo; }

  static DomainBox closed(double x_lo, double x_hi, double y_lo, double y_hi) {
    return DomainBox{x_lo, x_hi, y_lo, y_hi, false, false, false, false};
  }
  /// Box with both lower edges excluded, e.g. (0,1] x (0,1].
  static DomainBox lower_open(double x_lo, double x_hi, double y_lo,
                              double y_hi) {
    return DomainBox{x_lo, x_hi, y_lo, y_hi, true, false, true, false};
  }
};

}  // namespace doubleseq
