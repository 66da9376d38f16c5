#include "hookzeta/rational.hpp"

#include <stdexcept>

namespace hookzeta {

Integer binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer c = 1;
    for (long long t = 0; t < k; ++t) {
        c *= n - t;
        c /= t + 1; // always exact: c is C(n, t+1) after this step
    }
    return c;
}

Integer factorial(long long n) {
    Integer f = 1;
    for (long long t = 2; t <= n; ++t)
        f *= t;
    return f;
}

Rational pow2(long long e) {
    Integer p = Integer(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, p) : Rational(p);
}

std::string to_fraction_string(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

} // namespace hookzeta
