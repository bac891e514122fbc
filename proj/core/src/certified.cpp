#include "lllshift/certified.hpp"

#include "lllshift/error.hpp"

namespace lllshift {

const Rational& e_lower()
{
    static const Rational value(BigInt("2718281828459045"), BigInt("1000000000000000"));
    return value;
}

const Rational& e_upper()
{
    static const Rational value(BigInt("2718281828459046"), BigInt("1000000000000000"));
    return value;
}

Enclosure e_times(const Rational& x)
{
    if (x < 0)
        throw InvalidArgument("e_times expects a nonnegative argument");
    return {e_lower() * x, e_upper() * x};
}

Verdict compare_below_one(const Enclosure& value)
{
    if (value.upper < 1)
        return Verdict::correct;
    if (value.lower >= 1)
        return Verdict::incorrect;
    return Verdict::borderline;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::correct:
        return "correct";
    case Verdict::incorrect:
        return "incorrect";
    case Verdict::borderline:
        return "borderline";
    }
    return "?";
}

BigInt ipow(const BigInt& base, std::uint64_t exponent)
{
    BigInt result = 1;
    BigInt b = base;
    while (exponent) {
        if (exponent & 1U)
            result *= b;
        exponent >>= 1U;
        if (exponent)
            b *= b;
    }
    return result;
}

namespace {

// m * 2^ex with m >= 0
struct Dyadic {
    BigInt m;
    std::int64_t ex = 0;
};

void round_to(Dyadic& x, unsigned bits, bool up)
{
    if (x.m == 0)
        return;
    const auto top = static_cast<std::int64_t>(boost::multiprecision::msb(x.m)) + 1;
    if (top <= static_cast<std::int64_t>(bits))
        return;
    const auto shift = static_cast<unsigned>(top - bits);
    BigInt q = x.m >> shift;
    if (up && (q << shift) != x.m)
        ++q;
    x.m = std::move(q);
    x.ex += shift;
}

Dyadic from_rational(const Rational& r, unsigned bits, bool up)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (num == 0)
        return {0, 0};
    const auto p = static_cast<unsigned>(bits + boost::multiprecision::msb(den) + 2);
    BigInt q;
    BigInt rem;
    boost::multiprecision::divide_qr(BigInt(num << p), den, q, rem);
    if (up && rem != 0)
        ++q;
    Dyadic d{std::move(q), -static_cast<std::int64_t>(p)};
    round_to(d, bits, up);
    return d;
}

Dyadic multiply(const Dyadic& a, const Dyadic& b, unsigned bits, bool up)
{
    Dyadic d{a.m * b.m, a.ex + b.ex};
    round_to(d, bits, up);
    return d;
}

Dyadic power(Dyadic base, std::uint64_t exponent, unsigned bits, bool up)
{
    Dyadic result{1, 0};
    while (exponent) {
        if (exponent & 1U)
            result = multiply(result, base, bits, up);
        exponent >>= 1U;
        if (exponent)
            base = multiply(base, base, bits, up);
    }
    return result;
}

Rational to_rational(const Dyadic& d)
{
    if (d.ex >= 0)
        return Rational(BigInt(d.m << static_cast<unsigned>(d.ex)));
    return Rational(d.m, BigInt(1) << static_cast<unsigned>(-d.ex));
}

} // namespace

Enclosure power_enclosure(const Rational& base, std::uint64_t exponent, unsigned bits)
{
    if (base < 0 || base > 1)
        throw InvalidArgument("power_enclosure expects a base in [0, 1]");
    if (bits < 8)
        throw InvalidArgument("power_enclosure needs at least 8 bits");
    const auto lo = power(from_rational(base, bits, false), exponent, bits, false);
    const auto hi = power(from_rational(base, bits, true), exponent, bits, true);
    return {to_rational(lo), to_rational(hi)};
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r)
{
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace lllshift
