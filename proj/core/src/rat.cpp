#include "reptiler/rat.hpp"

namespace reptiler {

std::optional<Rat> Rat::sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class num = numerator(), den = denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn, rd);
}

std::string Rat::to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += "/";
        s += v_.get_den().get_str();
    }
    return s;
}

Rat Rat::parse(const std::string& text) {
    std::string t;
    t.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN -> ASCII '-'
        if (i + 2 < text.size() && (unsigned char)text[i] == 0xE2 &&
            (unsigned char)text[i + 1] == 0x88 && (unsigned char)text[i + 2] == 0x92) {
            t += '-';
            i += 2;
        } else if (!std::isspace((unsigned char)text[i])) {
            t += text[i];
        }
    }
    if (t.empty()) throw Error("empty rational literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(mpz_class(t));
        }
        mpz_class num(t.substr(0, slash));
        mpz_class den(t.substr(slash + 1));
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: '" + text + "'");
    }
}

std::pair<mpz_class, mpz_class> extract_square(const mpz_class& n) {
    if (n < 0) throw Error("extract_square: negative argument");
    if (n == 0) return {0, 0};
    mpz_class s = 1, m = n;
    // Pull out squared small factors, then check the remainder for a
    // perfect square. Desk-scale inputs keep this cheap.
    for (mpz_class p = 2; p <= 100000 && p * p <= m; ++p) {
        mpz_class pp = p * p;
        while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
            m /= pp;
            s *= p;
        }
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        s *= r;
        m = 1;
    }
    return {s, m};
}

}  // namespace reptiler
