#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace satake {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Rational extended by -infinity. Encodes the exponent of a value in
/// q^Q ∪ {0}: a vector entry of value 0 has exponent -infinity.
class ExtRat {
public:
  ExtRat() : finite_(true), v_(0) {}
  ExtRat(Rat v) : finite_(true), v_(std::move(v)) {}
  ExtRat(int v) : finite_(true), v_(v) {}

  static ExtRat neg_inf() {
    ExtRat e;
    e.finite_ = false;
    e.v_ = 0;
    return e;
  }

  bool is_neg_inf() const { return !finite_; }
  bool is_finite() const { return finite_; }

  const Rat& value() const {
    if (!finite_) throw std::logic_error("ExtRat: value() on -inf");
    return v_;
  }

  ExtRat operator+(const ExtRat& o) const {
    if (!finite_ || !o.finite_) return neg_inf();
    return ExtRat(v_ + o.v_);
  }
  ExtRat operator-(const Rat& s) const {
    if (!finite_) return neg_inf();
    return ExtRat(v_ - s);
  }
  ExtRat operator+(const Rat& s) const {
    if (!finite_) return neg_inf();
    return ExtRat(v_ + s);
  }

  bool operator==(const ExtRat& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || v_ == o.v_;
  }
  bool operator!=(const ExtRat& o) const { return !(*this == o); }
  bool operator<(const ExtRat& o) const {
    if (!finite_) return o.finite_;
    if (!o.finite_) return false;
    return v_ < o.v_;
  }
  bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }

private:
  bool finite_;
  Rat v_;
};

inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

/// Serializes as "p" or "p/q"; ExtRat additionally as "-inf".
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);
std::string extrat_to_string(const ExtRat& r);
ExtRat extrat_from_string(const std::string& s);

}  // namespace satake
