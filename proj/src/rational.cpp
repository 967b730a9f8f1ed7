#include "zf/rational.hpp"

namespace zf {

std::string rat_to_decimal(const Rat& r, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    bool negative = sgn(r) < 0;
    Rat a = abs(r) * Rat(scale);
    // round half up
    mpz_class scaled = rat_floor(a + Rat(1, 2));
    mpz_class whole = scaled / scale;
    mpz_class frac = scaled % scale;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), static_cast<size_t>(digits) - fs.size(), '0');
    std::string out = whole.get_str();
    if (digits > 0) out += "." + fs;
    if (negative && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
    return out;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
        r.canonicalize();
        return r;
    }
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad decimal literal: " + s);
    bool neg = !head.empty() && head[0] == '-';
    if (neg || (!head.empty() && head[0] == '+')) head.erase(head.begin());
    if (head.empty()) head = "0";
    mpz_class whole(head), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
    mpz_class frac = tail.empty() ? mpz_class(0) : mpz_class(tail);
    Rat r = Rat(whole) + Rat(frac) / Rat(scale);
    if (neg) r = -r;
    r.canonicalize();
    return r;
}

}  // namespace zf
