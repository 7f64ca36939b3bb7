#include "crossplane/rational.hpp"

#include "crossplane/errors.hpp"

namespace crossplane {

std::string rat_to_string(const big_rat& x) {
    if (is_integer(x)) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

big_rat rat_from_string(std::string_view s) {
    if (s.empty()) throw error("empty rational literal");
    auto parse_int = [](std::string_view t) -> big_int {
        if (t.empty()) throw error("empty integer literal");
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw error("sign without digits");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw error("malformed integer literal: " + std::string(t));
        return big_int(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return big_rat(parse_int(s));
    big_int num = parse_int(s.substr(0, slash));
    big_int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw error("zero denominator: " + std::string(s));
    return big_rat(num, den);
}

std::string format_factor(const big_rat& x) {
    // round up at two decimals
    big_int scaled = ceil_rat(x * 100);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    big_int whole = scaled / 100;
    int frac = static_cast<int>(scaled % 100);
    std::string out = (neg ? "-" : "") + whole.str();
    if (frac != 0) {
        out += '.';
        out += static_cast<char>('0' + frac / 10);
        if (frac % 10 != 0) out += static_cast<char>('0' + frac % 10);
    }
    return out;
}

} // namespace crossplane
