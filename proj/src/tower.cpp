#include "rpt/tower.hpp"
#include "rpt/error.hpp"

#include <sstream>

namespace rpt {

namespace {

const Float & lift_limit()
{
    static const Float x = boost::multiprecision::ldexp(Float(1), 256);
    return x;
}

const Float kLowerLimit = 256;
// Below 2^-kUnderflow the plain exponent range of Float is exhausted.
const Float kUnderflow = Float(1) * (1 << 30);

Float plain_log2(const Float & x)
{
    static const Float ln2 = boost::multiprecision::log(Float(2));
    return boost::multiprecision::log(x) / ln2;
}

Float plain_exp2(const Float & x)
{
    return boost::multiprecision::pow(Float(2), x);
}

// |a| vs |b|.
int compare_magnitude(const TowerReal & a, const TowerReal & b)
{
    if (a.is_zero() || b.is_zero())
        return (a.is_zero() ? 0 : 1) - (b.is_zero() ? 0 : 1);
    if (a.level() != b.level())
        return a.level() < b.level() ? -1 : 1;
    if (a.mag() == b.mag())
        return 0;
    return a.mag() < b.mag() ? -1 : 1;
}

TowerReal abs_of(const TowerReal & x)
{
    return x.sign() < 0 ? -x : x;
}

BigInt shifted(const BigInt & z, long & exponent)
{
    const long bits = static_cast<long>(boost::multiprecision::msb(z)) + 1;
    exponent = std::max(0L, bits - 200);
    return z >> static_cast<unsigned>(exponent);
}

} // namespace

TowerReal::TowerReal(const Float & x)
{
    sign_ = x > 0 ? 1 : (x < 0 ? -1 : 0);
    mag_ = boost::multiprecision::abs(x);
    normalize();
}

TowerReal TowerReal::from_fraction(const Fraction & f)
{
    if (f == 0)
        return {};
    BigInt num = boost::multiprecision::numerator(f), den = boost::multiprecision::denominator(f);
    const int s = num < 0 ? -1 : 1;
    if (num < 0)
        num = -num;
    long en = 0, ed = 0;
    BigInt n2 = shifted(num, en), d2 = shifted(den, ed);
    Float v = Float(n2.str()) / Float(d2.str());
    v = boost::multiprecision::ldexp(v, static_cast<int>(en - ed));
    return TowerReal(s * v);
}

TowerReal TowerReal::from_parts(int sign, int level, const Float & mag)
{
    if (level < 0 || mag < 0)
        throw PreconditionError("invalid tower representation");
    TowerReal t;
    t.sign_ = mag == 0 ? 0 : (sign < 0 ? -1 : 1);
    t.level_ = level;
    t.mag_ = mag;
    t.normalize();
    return t;
}

void TowerReal::normalize()
{
    if (mag_ == 0 || sign_ == 0) {
        sign_ = 0;
        level_ = 0;
        mag_ = 0;
        return;
    }
    while (mag_ >= lift_limit()) {
        mag_ = plain_log2(mag_);
        ++level_;
    }
    while (level_ > 0 && mag_ < kLowerLimit) {
        mag_ = plain_exp2(mag_);
        --level_;
    }
}

Float TowerReal::value() const
{
    if (level_ > 0)
        throw RangeError("tower value " + str() + " exceeds plain range");
    return sign_ < 0 ? Float(-mag_) : mag_;
}

TowerReal TowerReal::operator-() const
{
    TowerReal t = *this;
    t.sign_ = -t.sign_;
    return t;
}

TowerReal log2(const TowerReal & x)
{
    if (x.is_zero())
        throw RangeError("log2 of zero");
    if (x.level() == 0)
        return TowerReal(plain_log2(x.mag()));
    return TowerReal::from_parts(1, x.level() - 1, x.mag());
}

TowerReal exp2(const TowerReal & x)
{
    if (x.is_zero())
        return TowerReal(1);
    if (x.sign() > 0) {
        if (x.level() == 0 && x.mag() < kLowerLimit)
            return TowerReal(plain_exp2(x.mag()));
        return TowerReal::from_parts(1, x.level() + 1, x.mag());
    }
    if (x.level() == 0 && x.mag() < kUnderflow)
        return TowerReal(plain_exp2(-x.mag()));
    throw RangeError("2^(" + x.str() + ") underflows");
}

TowerReal operator+(const TowerReal & a, const TowerReal & b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.level() == 0 && b.level() == 0)
        return TowerReal(a.value() + b.value());

    const bool a_big = compare_magnitude(a, b) >= 0;
    const TowerReal & big = a_big ? a : b;
    const TowerReal & small = a_big ? b : a;
    const TowerReal lb = log2(big);
    const TowerReal d = log2(small) - lb;
    if (d.level() > 0 || d.value() < -300)
        return big;
    const Float t = d.value();
    Float delta;
    if (big.sign() == small.sign())
        delta = plain_log2(1 + plain_exp2(t));
    else {
        if (t >= 0)
            return {};
        delta = plain_log2(1 - plain_exp2(t));
    }
    TowerReal m = exp2(lb + TowerReal(delta));
    return big.sign() < 0 ? -m : m;
}

TowerReal operator*(const TowerReal & a, const TowerReal & b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.level() == 0 && b.level() == 0)
        return TowerReal(a.value() * b.value());
    TowerReal m = exp2(log2(a) + log2(b));
    return a.sign() * b.sign() < 0 ? -m : m;
}

TowerReal operator/(const TowerReal & a, const TowerReal & b)
{
    if (b.is_zero())
        throw RangeError("division by zero");
    if (a.is_zero())
        return {};
    if (a.level() == 0 && b.level() == 0)
        return TowerReal(a.value() / b.value());
    TowerReal m = exp2(log2(a) - log2(b));
    return a.sign() * b.sign() < 0 ? -m : m;
}

int compare(const TowerReal & a, const TowerReal & b)
{
    if (a.sign() != b.sign())
        return a.sign() < b.sign() ? -1 : 1;
    const int m = compare_magnitude(abs_of(a), abs_of(b));
    return a.sign() < 0 ? -m : m;
}

std::string TowerReal::str(int digits) const
{
    std::ostringstream os;
    os.precision(digits);
    if (sign_ < 0)
        os << '-';
    for (int i = 0; i < level_; ++i)
        os << "2^(";
    os << mag_;
    for (int i = 0; i < level_; ++i)
        os << ')';
    return os.str();
}

} // namespace rpt
