#include "kraw/numeric.hpp"

#include <cctype>
#include <stdexcept>

#include "kraw/errors.hpp"

namespace kraw {

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int pow2(unsigned long e) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rpow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    // num/den already coprime, so the power is canonical too.
    return r;
}

Rat rising_factorial(const Rat& q, unsigned long n) {
    Rat r = 1;
    Rat f = q;
    for (unsigned long i = 0; i < n; ++i) {
        r *= f;
        f += 1;
    }
    return r;
}

bool is_integer(const Rat& q) {
    return q.get_den() == 1;
}

std::string to_string(const Int& v) {
    return v.get_str();
}

std::string to_string(const Rat& v) {
    return v.get_str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

Int parse_int(const std::string& token) {
    const std::string t = strip(token);
    try {
        return Int(t);
    } catch (const std::invalid_argument&) {
        throw DomainError("not an integer: '" + token + "'");
    }
}

Rat parse_rat(const std::string& token) {
    const std::string t = strip(token);
    Rat q;
    try {
        q = Rat(t);
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational: '" + token + "'");
    }
    if (q.get_den() == 0) {
        throw DomainError("zero denominator: '" + token + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace kraw
