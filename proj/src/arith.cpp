#include "wqap/arith.hpp"

#include <cmath>

namespace wqap {

std::string wide_to_string(Wide v) {
    if (v == 0) return "0";
    bool negative = v < 0;
    UWide mag = negative ? UWide(-(v + 1)) + 1 : UWide(v);
    std::string digits;
    while (mag > 0) {
        digits.push_back(static_cast<char>('0' + int(mag % 10)));
        mag /= 10;
    }
    if (negative) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

Wide wide_from_string(const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::Malformed, "empty integer literal");
    std::size_t pos = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw Error(ErrorCode::Malformed, "sign without digits");
    Wide value = 0;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c < '0' || c > '9')
            throw Error(ErrorCode::Malformed, "non-digit in integer literal: " + s);
        value = checked_add(checked_mul(value, 10), c - '0');
    }
    return negative ? -value : value;
}

std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) throw Error(ErrorCode::BadParams, "isqrt of negative value");
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (root > 0 && root * root > v) --root;
    while ((root + 1) * (root + 1) <= v) ++root;
    return root;
}

}  // namespace wqap
