#pragma once

// Signed reals of tower size, held in level-index form so that iterated
// exponentials such as the logarithms of the proof constants stay finite.

#include "rpt/fraction.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

namespace rpt {

using Float = boost::multiprecision::cpp_bin_float_50;

/// sign * T(level, mag) with T(0, m) = m and T(k, m) = 2^T(k-1, m).
/// Normal form: level 0 has mag < 2^256; level >= 1 has mag in [256, 2^256).
class TowerReal
{
public:
    TowerReal() = default;
    TowerReal(const Float & x); // NOLINT(google-explicit-constructor)
    TowerReal(int x) : TowerReal(Float(x)) {} // NOLINT(google-explicit-constructor)
    static TowerReal from_fraction(const Fraction & f);
    static TowerReal from_parts(int sign, int level, const Float & mag);

    int sign() const { return sign_; }
    int level() const { return level_; }
    const Float & mag() const { return mag_; }
    bool is_zero() const { return sign_ == 0; }

    /// Plain value; throws RangeError when level > 0.
    Float value() const;

    TowerReal operator-() const;
    friend TowerReal operator+(const TowerReal & a, const TowerReal & b);
    friend TowerReal operator-(const TowerReal & a, const TowerReal & b) { return a + (-b); }
    friend TowerReal operator*(const TowerReal & a, const TowerReal & b);
    friend TowerReal operator/(const TowerReal & a, const TowerReal & b);

    friend int compare(const TowerReal & a, const TowerReal & b);
    friend bool operator<(const TowerReal & a, const TowerReal & b) { return compare(a, b) < 0; }
    friend bool operator>(const TowerReal & a, const TowerReal & b) { return compare(a, b) > 0; }
    friend bool operator<=(const TowerReal & a, const TowerReal & b) { return compare(a, b) <= 0; }
    friend bool operator>=(const TowerReal & a, const TowerReal & b) { return compare(a, b) >= 0; }
    friend bool operator==(const TowerReal & a, const TowerReal & b) { return compare(a, b) == 0; }

    /// Human-readable: "-12.5", or "2^(2^(300.1))" style for higher levels.
    std::string str(int digits = 12) const;

private:
    void normalize();

    int sign_ = 0;
    int level_ = 0;
    Float mag_ = 0;
};

/// log2|x| for x != 0.
TowerReal log2(const TowerReal & x);
/// 2^x. Throws RangeError when the result underflows below plain range.
TowerReal exp2(const TowerReal & x);

} // namespace rpt
