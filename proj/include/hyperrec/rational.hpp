#ifndef HYPERREC_RATIONAL_HPP
#define HYPERREC_RATIONAL_HPP

// rational.hpp - exact rational arithmetic plus a -infinity sentinel
//
// Threshold predicates and cover values are evaluated exactly so that
// boundary cases do not depend on floating-point rounding.  Converting a
// double to Rational is exact (every finite double is a dyadic rational).

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hyperrec {

using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_of(double x) { return Rational(x); }

inline Rational rational_frac(long long num, long long den) {
    return Rational(num) / Rational(den);
}

// Extended value: either a finite rational or negative infinity.
// Sums propagate the sentinel; comparisons treat it as below every
// finite value.
class GValue {
  public:
    GValue() : finite_(true), value_(0) {}
    GValue(Rational v) : finite_(true), value_(std::move(v)) {}
    GValue(long long v) : finite_(true), value_(v) {}
    static GValue neg_inf() {
        GValue g;
        g.finite_ = false;
        g.value_ = 0;
        return g;
    }

    bool is_finite() const { return finite_; }
    const Rational& value() const {
        if (!finite_) throw std::logic_error("GValue: value() on -inf");
        return value_;
    }
    double to_double() const {
        if (!finite_) throw std::logic_error("GValue: to_double() on -inf");
        return static_cast<double>(value_);
    }

    GValue operator+(const GValue& o) const {
        if (!finite_ || !o.finite_) return neg_inf();
        return GValue(value_ + o.value_);
    }
    GValue& operator+=(const GValue& o) {
        *this = *this + o;
        return *this;
    }

    bool operator==(const GValue& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || value_ == o.value_;
    }
    bool operator!=(const GValue& o) const { return !(*this == o); }
    bool operator<(const GValue& o) const {
        if (!finite_) return o.finite_;
        if (!o.finite_) return false;
        return value_ < o.value_;
    }
    bool operator>(const GValue& o) const { return o < *this; }
    bool operator<=(const GValue& o) const { return !(o < *this); }
    bool operator>=(const GValue& o) const { return !(*this < o); }

    std::string str() const {
        if (!finite_) return "-inf";
        return value_.str();
    }

  private:
    bool finite_;
    Rational value_;
};

inline GValue max(const GValue& a, const GValue& b) { return a < b ? b : a; }

}  // namespace hyperrec

#endif
