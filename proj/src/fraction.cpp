#include "rpt/fraction.hpp"
#include "rpt/error.hpp"

#include <cctype>

namespace rpt {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole)
{
    if (digits.empty())
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (char c : digits)
        if (! std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed rational '" + std::string(whole) + "'");
    return BigInt(std::string(digits));
}

} // namespace

Fraction parse_fraction(std::string_view text)
{
    std::string_view s = text;
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);

    bool negative = false;
    if (! s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Fraction result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt p = parse_integer(s.substr(0, slash), text);
        BigInt q = parse_integer(s.substr(slash + 1), text);
        if (q == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        result = Fraction(p, q);
    }
    else {
        long long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_part = s.substr(e + 1);
            bool exp_negative = false;
            if (! exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
                exp_negative = exp_part.front() == '-';
                exp_part.remove_prefix(1);
            }
            BigInt ev = parse_integer(exp_part, text);
            if (ev > 4096)
                throw ParseError("exponent too large in '" + std::string(text) + "'");
            exponent = ev.convert_to<long long>() * (exp_negative ? -1 : 1);
            s = s.substr(0, e);
        }
        std::string_view int_part = s, frac_part;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            int_part = s.substr(0, dot);
            frac_part = s.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty())
            throw ParseError("malformed rational '" + std::string(text) + "'");
        std::string digits = std::string(int_part) + std::string(frac_part);
        BigInt mantissa = parse_integer(digits, text);
        exponent -= static_cast<long long>(frac_part.size());
        BigInt scale = 1;
        for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
            scale *= 10;
        result = exponent < 0 ? Fraction(mantissa, scale) : Fraction(mantissa * scale);
    }
    return negative ? Fraction(-result) : result;
}

std::string to_string(const Fraction & f)
{
    return numerator(f).str() + "/" + denominator(f).str();
}

std::string to_string(const BigInt & z) { return z.str(); }

BigInt floor_of(const Fraction & f)
{
    BigInt n = numerator(f), d = denominator(f);
    BigInt q = n / d;
    if (n < 0 && q * d != n)
        q -= 1;
    return q;
}

BigInt ceil_of(const Fraction & f)
{
    BigInt fl = floor_of(f);
    return Fraction(fl) == f ? fl : BigInt(fl + 1);
}

std::int64_t ceil_times(const Fraction & f, std::int64_t k)
{
    BigInt c = ceil_of(f * k);
    if (c > BigInt(INT64_MAX) || c < BigInt(INT64_MIN))
        throw RangeError("ceil_times overflow");
    return c.convert_to<std::int64_t>();
}

std::int64_t floor_times(const Fraction & f, std::int64_t k)
{
    BigInt c = floor_of(f * k);
    if (c > BigInt(INT64_MAX) || c < BigInt(INT64_MIN))
        throw RangeError("floor_times overflow");
    return c.convert_to<std::int64_t>();
}

Fraction pow(const Fraction & base, unsigned exponent)
{
    Fraction result = 1, b = base;
    while (exponent) {
        if (exponent & 1u)
            result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

double to_double(const Fraction & f) { return f.convert_to<double>(); }

} // namespace rpt
