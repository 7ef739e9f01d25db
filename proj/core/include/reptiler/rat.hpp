#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace reptiler {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParameterOutOfRange : public Error {
public:
    explicit ParameterOutOfRange(const std::string& what) : Error(what) {}
};

/// Exact rational number. Always canonical: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rat(long n, long d) : v_(n, d) { canonicalize_checked(); }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) { canonicalize_checked(); }
    explicit Rat(const mpq_class& q) : v_(q) { canonicalize_checked(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_), already_canonical{}); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_), already_canonical{}); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_), already_canonical{}); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_), already_canonical{}); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Rat(mpq_class(a.v_ / b.v_), already_canonical{});
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Largest integer <= value.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    /// Exact square root if the value is the square of a rational.
    std::optional<Rat> sqrt() const;

    double to_double() const { return v_.get_d(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    /// Parses "p", "p/q", with optional leading '-' (U+2212 minus accepted).
    static Rat parse(const std::string& text);

    const mpq_class& raw() const { return v_; }

private:
    struct already_canonical {};
    Rat(mpq_class q, already_canonical) : v_(std::move(q)) {}
    void canonicalize_checked() {
        if (sgn(v_.get_den()) == 0) throw DivisionByZero();
        v_.canonicalize();
    }

    mpq_class v_;
};

/// Splits n >= 0 as s^2 * m with m square-free; returns {s, m}.
/// Used to normalize radicands (e.g. sqrt(117) = 3*sqrt(13)).
std::pair<mpz_class, mpz_class> extract_square(const mpz_class& n);

}  // namespace reptiler
