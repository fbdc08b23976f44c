#pragma once

#include "scalar.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace parabose {

struct capacity_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct params_mismatch_error : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact computation contradicts one of the structural
/// theorems the decomposition relies on. Always an implementation bug.
struct theorem_violation_error : std::logic_error
{
    using std::logic_error::logic_error;
};

/// Exact half-integer, stored as twice its value.
struct HalfInt
{
    long long twice = 0;

    HalfInt() = default;
    explicit HalfInt(long long t) : twice(t) {}
    static HalfInt of_int(long long v) { return HalfInt(2 * v); }
    static HalfInt half() { return HalfInt(1); }

    bool is_integer() const { return twice % 2 == 0; }
    long long as_int() const
    {
        if (!is_integer())
            throw std::logic_error("HalfInt: not an integer: " + str());
        return twice / 2;
    }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
    friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
    friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
    friend bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
    friend bool operator>(HalfInt a, HalfInt b) { return a.twice > b.twice; }
    friend bool operator>=(HalfInt a, HalfInt b) { return a.twice >= b.twice; }

    Rational as_rational() const { return Rational(twice, 2); }
    Scalar as_scalar() const { return Scalar(as_rational()); }

    std::string str() const
    {
        if (is_integer())
            return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    /// Parses "3", "-2", "7/2", "-1/2".
    static HalfInt parse(const std::string &text)
    {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return of_int(std::stoll(text));
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        if (den != 2)
            throw std::invalid_argument("half-integer must have denominator 1 or 2: " + text);
        return HalfInt(num);
    }
};

using WeightVector = std::vector<HalfInt>;

inline std::string weight_str(const WeightVector &w)
{
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ",";
        out += w[i].str();
    }
    out += ")";
    return out;
}

/// Shell-size guard. The default can be overridden per call or through the
/// PARABOSE_CAPACITY environment variable.
inline unsigned long long default_capacity()
{
    if (const char *env = std::getenv("PARABOSE_CAPACITY"))
        return std::strtoull(env, nullptr, 10);
    return 1000000ULL;
}

} // namespace parabose
