#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace improper {

/// Exact rational with reduced representation, den > 0. Every endpoint this
/// library produces has a power-of-two denominator, so comparisons never
/// overflow at the magnitudes in play; cross multiplication in 64 bits.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }

    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend std::strong_ordering operator<=>(Rational a, Rational b) {
        return a.num * b.den <=> b.num * a.den;
    }

    /// "p/q" reduced, or plain "p" when q == 1.
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /// Exact decimal string; requires the reduced denominator to be 2^a * 5^b,
    /// which holds for everything this library emits.
    std::string decimal() const {
        long long d = den, exp2 = 0, exp5 = 0;
        while (d % 2 == 0) {
            d /= 2;
            ++exp2;
        }
        while (d % 5 == 0) {
            d /= 5;
            ++exp5;
        }
        if (d != 1) throw std::invalid_argument("denominator is not decimal-exact: " + str());
        long long digits = exp2 > exp5 ? exp2 : exp5;
        long long scale = 1;
        for (long long i = 0; i < digits; ++i) scale *= 10;
        long long scaled = num * (scale / den);
        bool neg = scaled < 0;
        if (neg) scaled = -scaled;
        std::string out = std::to_string(scaled / scale);
        if (digits > 0) {
            std::string frac = std::to_string(scaled % scale);
            frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
            out += "." + frac;
        }
        return (neg ? "-" : "") + out;
    }
};

inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

}  // namespace improper
