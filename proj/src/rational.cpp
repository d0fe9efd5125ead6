#include "euphotic/rational.hpp"

#include "euphotic/errors.hpp"

#include <boost/functional/hash.hpp>

#include <cctype>
#include <sstream>

namespace euphotic {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) v_ = boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den));
    else v_ = boost::multiprecision::cpp_rational(num, den);
}

namespace {

BigInt parse_int(std::string_view t, std::string_view whole) {
    if (t.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
    std::size_t i = 0;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
        neg = t[0] == '-';
        i = 1;
    }
    if (i == t.size()) throw InputError("malformed rational '" + std::string(whole) + "'");
    BigInt v = 0;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw InputError("malformed rational '" + std::string(whole) + "'");
        v = v * 10 + (t[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

} // namespace

Rat Rat::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text, text));
    BigInt num = parse_int(text.substr(0, slash), text);
    BigInt den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'");
    return Rat(num, den);
}

BigInt Rat::floor() const {
    BigInt n = num(), d = den();
    BigInt q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

std::string Rat::str() const {
    std::string s = num().str();
    if (den() != 1) s += "/" + den().str();
    return s;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rat(a[i]) * b[i];
    return s;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator*(const Rat& s, const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

RatVec to_rat(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (int x : v) r.emplace_back(x);
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a < 0 ? BigInt(-a) : a;
    BigInt y = b < 0 ? BigInt(-b) : b;
    while (y != 0) {
        BigInt t = x % y;
        x = y;
        y = t;
    }
    return x;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    BigInt g = gcd(a, b);
    BigInt r = (a / g) * b;
    return r < 0 ? BigInt(-r) : r;
}

BigInt common_denominator(const RatVec& v) {
    BigInt d = 1;
    for (const auto& x : v) d = lcm(d, x.den());
    return d;
}

std::string to_string(const RatVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ')';
    return os.str();
}

std::vector<std::string> to_strings(const RatVec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

RatVec parse_ratvec(const std::vector<std::string>& parts) {
    RatVec r;
    r.reserve(parts.size());
    for (const auto& p : parts) r.push_back(Rat::parse(p));
    return r;
}

} // namespace euphotic

std::size_t std::hash<euphotic::Rat>::operator()(const euphotic::Rat& r) const noexcept {
    std::size_t seed = 0;
    boost::hash_combine(seed, r.num().str());
    boost::hash_combine(seed, r.den().str());
    return seed;
}
