#include "coxfold/golden.hpp"

#include <gmp.h>

#include <cmath>
#include <cstddef>

namespace coxfold {

double embed_real(const Golden& x, unsigned digits) {
    // Work at generous precision so the final double rounding is the only loss.
    const mp_bitcnt_t bits = 64 + static_cast<mp_bitcnt_t>(digits * 4);
    mpf_class five(5, bits);
    mpf_class root(0, bits);
    mpf_sqrt(root.get_mpf_t(), five.get_mpf_t());
    mpf_class tau = (1 + root) / 2;
    mpf_class av(x.a, bits), bv(x.b, bits);
    mpf_class val = av + bv * tau;
    return val.get_d();
}

static std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Golden& x) {
    std::string s = rational_str(x.a);
    if (sgn(x.b) < 0) {
        s += "-" + rational_str(-x.b);
    } else {
        s += "+" + rational_str(x.b);
    }
    return s + "*t";
}

static Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
    r.canonicalize();
    return r;
}

Golden golden_from_string(const std::string& s) {
    // Canonical form is "a/b+c/d*t" but plain rationals ("1", "-3/2") and
    // pure tau parts ("1/2*t") are accepted too.
    if (s.size() < 2 || s.substr(s.size() - 2) != "*t") {
        return Golden(parse_rational(s));
    }
    std::string body = s.substr(0, s.size() - 2);
    // Split at the sign separating the rational part from the tau part:
    // the first '+' or '-' that is not the leading sign.
    std::size_t pos = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if (body[i] == '+' || body[i] == '-') {
            pos = i;
            break;
        }
    }
    if (pos == std::string::npos) {
        return Golden(Rational(0), parse_rational(body));
    }
    Rational a = parse_rational(body.substr(0, pos));
    char sign = body[pos];
    Rational b = parse_rational(body.substr(pos + 1));
    if (sign == '-') b = -b;
    return Golden(a, b);
}

}  // namespace coxfold
