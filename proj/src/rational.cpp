#include "binpack/rational.hpp"

#include <cctype>
#include <numeric>

namespace binpack {

void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

long long rat_floor(const Rat& r) {
    long long n = r.numerator(), d = r.denominator();  // d > 0 after normalization
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

long long rat_ceil(const Rat& r) { return -rat_floor(-r); }

long long floor_div(const Rat& a, const Rat& b) {
    if (b <= Rat(0)) fail(ErrorCode::invalid_argument, "floor_div: divisor must be positive");
    return rat_floor(a / b);
}

long long ceil_div_ll(long long a, long long b) {
    if (b <= 0 || a < 0) fail(ErrorCode::invalid_argument, "ceil_div_ll: bad operands");
    return (a + b - 1) / b;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

Rat parse_decimal(std::string_view text) {
    size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string s(text.substr(begin, end - begin));
    if (s.empty()) fail(ErrorCode::parse, "empty number");

    bool negative = false;
    size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        pos = 1;
    }

    auto parse_ll = [&](const std::string& digits) -> long long {
        if (digits.empty() || digits.size() > 18) fail(ErrorCode::parse, "number out of range: " + s);
        long long v = 0;
        for (char ch : digits) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) fail(ErrorCode::parse, "not a number: " + s);
            v = v * 10 + (ch - '0');
        }
        return v;
    };

    std::string body = s.substr(pos);
    size_t slash = body.find('/');
    if (slash != std::string::npos) {
        long long num = parse_ll(body.substr(0, slash));
        long long den = parse_ll(body.substr(slash + 1));
        if (den == 0) fail(ErrorCode::parse, "zero denominator: " + s);
        Rat r(num, den);
        return negative ? -r : r;
    }

    size_t dot = body.find('.');
    std::string ipart = dot == std::string::npos ? body : body.substr(0, dot);
    std::string fpart = dot == std::string::npos ? "" : body.substr(dot + 1);
    if (ipart.empty() && fpart.empty()) fail(ErrorCode::parse, "not a number: " + s);
    if (ipart.empty()) ipart = "0";
    if (ipart.size() + fpart.size() > 18) fail(ErrorCode::parse, "number out of range: " + s);

    long long scale = 1;
    for (size_t i = 0; i < fpart.size(); ++i) scale *= 10;
    long long num = parse_ll(ipart) * scale + (fpart.empty() ? 0 : parse_ll(fpart));
    Rat r(num, scale);
    return negative ? -r : r;
}

std::string format_exact(const Rat& r) {
    long long num = r.numerator(), den = r.denominator();
    std::string sign = num < 0 ? "-" : "";
    unsigned long long n = num < 0 ? static_cast<unsigned long long>(-(num + 1)) + 1ULL
                                   : static_cast<unsigned long long>(num);
    long long d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return sign + std::to_string(n) + "/" + std::to_string(den);

    int places = twos > fives ? twos : fives;
    unsigned long long scaled = n;
    for (int i = 0; i < places - twos; ++i) scaled *= 2;
    for (int i = 0; i < places - fives; ++i) scaled *= 5;

    std::string digits = std::to_string(scaled);
    if (places == 0) return sign + digits;
    if (digits.size() <= static_cast<size_t>(places))
        digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<size_t>(places), ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
    return sign + digits;
}

std::string format_fixed(const Rat& r, int places) {
    if (places < 0 || places > 12) fail(ErrorCode::invalid_argument, "format_fixed: places out of range");
    __int128 pow10 = 1;
    for (int i = 0; i < places; ++i) pow10 *= 10;
    bool neg = r < Rat(0);
    Rat a = neg ? -r : r;
    // round half-up on |r|
    __int128 scaled = (static_cast<__int128>(a.numerator()) * pow10 * 2 + a.denominator()) /
                      (static_cast<__int128>(a.denominator()) * 2);
    unsigned long long ip = static_cast<unsigned long long>(scaled / pow10);
    unsigned long long fp = static_cast<unsigned long long>(scaled % pow10);
    std::string out = (neg && scaled != 0 ? "-" : "") + std::to_string(ip);
    if (places > 0) {
        std::string frac = std::to_string(fp);
        frac.insert(0, static_cast<size_t>(places) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

}  // namespace binpack
