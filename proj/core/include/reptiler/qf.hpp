#pragma once

#include "reptiler/rat.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <utility>

namespace reptiler {

// Scalar plumbing shared by Rat and nested QuadExt levels.
inline int num_sign(const Rat& v) { return v.sign(); }
inline bool num_same_field(const Rat&, const Rat&) { return true; }
inline Rat num_embed_int(long v, const Rat&) { return Rat(v); }
inline std::string num_to_string(const Rat& v) { return v.to_string(); }
inline double num_to_double(const Rat& v) { return v.to_double(); }
inline bool num_uses_radicand(const Rat&, unsigned long) { return false; }

/// x + y*sqrt(m) over the scalar ring T, with m a fixed square-free
/// radicand. m = 0 is the degenerate pure-scalar field (y must be 0).
/// Values from different fields never mix; every operation checks.
template <class T>
class QuadExt {
public:
    QuadExt() : x_(), y_(), m_(0) {}

    QuadExt(T x, T y, unsigned long m) : x_(std::move(x)), y_(std::move(y)), m_(m) {
        validate_radicand(m_);
        if (m_ == 0 && num_sign(y_) != 0)
            throw FieldMismatch("radicand 0 admits no irrational part");
        if (!num_same_field(x_, y_))
            throw FieldMismatch("component fields differ");
        if (m_ != 0 && num_uses_radicand(x_, m_))
            throw FieldMismatch("radicand " + std::to_string(m_) +
                                " already lives in the base field");
    }

    static QuadExt rational(T x, unsigned long m) {
        T zero = num_embed_int(0, x);
        return QuadExt(std::move(x), std::move(zero), m);
    }

    const T& x() const { return x_; }
    const T& y() const { return y_; }
    unsigned long radicand() const { return m_; }

    /// Same-field constant from a scalar.
    QuadExt embed(T scalar) const { return QuadExt(std::move(scalar), num_embed_int(0, x_), m_); }
    QuadExt embed_int(long v) const { return embed(num_embed_int(v, x_)); }
    QuadExt zero() const { return embed_int(0); }
    QuadExt one() const { return embed_int(1); }
    /// Same-field sqrt(m) itself (requires m > 0).
    QuadExt root() const {
        if (m_ == 0) throw FieldMismatch("no root element in the rational field");
        return QuadExt(num_embed_int(0, x_), num_embed_int(1, x_), m_);
    }

    bool is_zero() const { return num_sign(x_) == 0 && num_sign(y_) == 0; }

    /// Exact sign of the real value x + y*sqrt(m).
    int sign() const {
        int sx = num_sign(x_), sy = num_sign(y_);
        if (sy == 0) return sx;
        if (sx == 0 || sx == sy) return sy;
        // Signs differ: |x| vs |y|*sqrt(m) decided by squaring.
        T diff = x_ * x_ - scale_by_m(y_ * y_);
        int s2 = num_sign(diff);
        if (s2 == 0)
            throw FieldMismatch("radicand is a square in the base field");
        return sx * s2;
    }

    QuadExt operator-() const { return QuadExt(-x_, -y_, m_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        a.require_same_field(b);
        return QuadExt(a.x_ + b.x_, a.y_ + b.y_, a.m_);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        a.require_same_field(b);
        return QuadExt(a.x_ - b.x_, a.y_ - b.y_, a.m_);
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        a.require_same_field(b);
        return QuadExt(a.x_ * b.x_ + a.scale_by_m(a.y_ * b.y_),
                       a.x_ * b.y_ + a.y_ * b.x_, a.m_);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        a.require_same_field(b);
        if (b.is_zero()) throw DivisionByZero();
        // Multiply by the conjugate; the norm is a nonzero scalar.
        T norm = b.x_ * b.x_ - b.scale_by_m(b.y_ * b.y_);
        if (num_sign(norm) == 0) throw DivisionByZero();
        QuadExt num = a * QuadExt(b.x_, -b.y_, b.m_);
        return QuadExt(num.x_ / norm, num.y_ / norm, a.m_);
    }

    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
    QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        a.require_same_field(b);
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    /// Ordering consistent with the real values (same field required).
    friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
             : s > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (m_ == 0 || num_sign(y_) == 0) return num_to_string(x_);
        std::string s;
        if (num_sign(x_) != 0) s += num_to_string(x_) + "+";
        s += "(" + num_to_string(y_) + ")r" + std::to_string(m_);
        return s;
    }

    /// Display-only conversion; all decisions stay exact.
    double to_double() const {
        return num_to_double(x_) + num_to_double(y_) * std::sqrt((double)m_);
    }

    static void validate_radicand(unsigned long m) {
        if (m == 1) throw FieldMismatch("radicand 1 is not a field extension");
        if (m == 0) return;
        for (unsigned long p = 2; p * p <= m && p <= 100000; ++p) {
            if (m % (p * p) == 0)
                throw FieldMismatch("radicand " + std::to_string(m) + " is not square-free");
        }
    }

private:
    void require_same_field(const QuadExt& o) const {
        if (m_ != o.m_ || !num_same_field(x_, o.x_))
            throw FieldMismatch("mixed radicands: " + std::to_string(m_) + " vs " +
                                std::to_string(o.m_));
    }
    T scale_by_m(const T& v) const { return v * num_embed_int((long)m_, x_); }

    T x_, y_;
    unsigned long m_;
};

template <class T>
int num_sign(const QuadExt<T>& v) { return v.sign(); }
template <class T>
bool num_same_field(const QuadExt<T>& a, const QuadExt<T>& b) {
    return a.radicand() == b.radicand() && num_same_field(a.x(), b.x());
}
template <class T>
QuadExt<T> num_embed_int(long v, const QuadExt<T>& like) { return like.embed_int(v); }
template <class T>
std::string num_to_string(const QuadExt<T>& v) { return v.to_string(); }
template <class T>
double num_to_double(const QuadExt<T>& v) { return v.to_double(); }
template <class T>
bool num_uses_radicand(const QuadExt<T>& v, unsigned long m) {
    return v.radicand() == m || num_uses_radicand(v.x(), m);
}

/// The working field of a run: x + y*sqrt(m) with rational x, y.
using QF = QuadExt<Rat>;
/// One tower level, used only where a single extension provably cannot
/// host an instance (family (ii) coordinates).
using QFTower = QuadExt<QF>;

inline int qf_sign(const QF& u) { return u.sign(); }

inline int qf_cmp(const QF& u, const QF& v) { return (u - v).sign(); }

/// Exact square root within the same field, if one exists.
std::optional<QF> qf_sqrt(const QF& u);

/// Rational bracket [lo, hi] with lo <= u <= hi and hi - lo <= eps,
/// found by bisection against exact comparison.
std::pair<Rat, Rat> rational_enclosure(const QF& u, const Rat& eps);

/// sqrt(v) for rational v >= 0 expressed over the square-free radicand
/// it needs: returns (coefficient, m) with sqrt(v) = coefficient*sqrt(m),
/// m = 0 when v is a perfect rational square.
std::pair<Rat, unsigned long> rational_sqrt_normalized(const Rat& v);

}  // namespace reptiler
