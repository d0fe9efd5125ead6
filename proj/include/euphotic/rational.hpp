#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace euphotic {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(int v) : v_(v) {}
    Rat(long v) : v_(v) {}
    Rat(long long v) : v_(v) {}
    Rat(const BigInt& v) : v_(v) {}
    Rat(const BigInt& num, const BigInt& den);
    Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p", "p/q". Throws InputError on malformed text or q = 0.
    static Rat parse(std::string_view text);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_.sign(); }

    /// Largest integer not exceeding this value.
    BigInt floor() const;
    /// Representative of this value modulo 1 in [0, 1).
    Rat frac() const;

    /// "p/q", with "/q" omitted when q = 1.
    std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (b.v_ < a.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

    const boost::multiprecision::cpp_rational& raw() const { return v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

using RatVec = std::vector<Rat>;
using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;

/// Dot product; throws InputError on length mismatch.
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& s, const RatVec& v);

RatVec to_rat(const IntVec& v);

/// Least common multiple of all denominators (1 for an empty vector).
BigInt common_denominator(const RatVec& v);

std::string to_string(const RatVec& v);
std::vector<std::string> to_strings(const RatVec& v);
RatVec parse_ratvec(const std::vector<std::string>& parts);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

} // namespace euphotic

template <>
struct std::hash<euphotic::Rat> {
    std::size_t operator()(const euphotic::Rat& r) const noexcept;
};
