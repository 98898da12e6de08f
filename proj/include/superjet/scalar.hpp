#ifndef SUPERJET_SCALAR_HPP
#define SUPERJET_SCALAR_HPP

#include <gmpxx.h>
#include <string>
#include <iosfwd>

namespace superjet {

/// Element of the field Q(i,sqrt2), stored as a + b*i + c*s + d*i*s with
/// s^2 = 2, i^2 = -1 and rational coordinates of arbitrary precision.
/// Equality is exact; there is no floating point anywhere.
class Scalar {
public:
    Scalar() : a_(0), b_(0), c_(0), d_(0) {}
    Scalar(long v) : a_(v), b_(0), c_(0), d_(0) {}
    Scalar(long num, long den) : a_(num, den), b_(0), c_(0), d_(0) { a_.canonicalize(); }
    explicit Scalar(const mpq_class& q) : a_(q), b_(0), c_(0), d_(0) {}
    Scalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        a_.canonicalize();
        b_.canonicalize();
        c_.canonicalize();
        d_.canonicalize();
    }

    static Scalar i() { return Scalar(0, 1, 0, 0); }
    static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }
    static Scalar i_sqrt2() { return Scalar(0, 0, 0, 1); }
    static Scalar rational(long num, long den) { return Scalar(num, den); }

    const mpq_class& re_rat() const { return a_; }
    const mpq_class& im_rat() const { return b_; }
    const mpq_class& re_s2() const { return c_; }
    const mpq_class& im_s2() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
    bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
    bool is_one() const { return a_ == 1 && is_rational(); }

    Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }

    Scalar& operator+=(const Scalar& o) {
        a_ += o.a_; b_ += o.b_; c_ += o.c_; d_ += o.d_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        a_ -= o.a_; b_ -= o.b_; c_ -= o.c_; d_ -= o.d_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this * o.inverse(); return *this; }

    friend Scalar operator+(Scalar l, const Scalar& r) { l += r; return l; }
    friend Scalar operator-(Scalar l, const Scalar& r) { l -= r; return l; }

    friend Scalar operator*(const Scalar& l, const Scalar& r) {
        // fast path: both purely rational (the common case in large eliminations)
        if (l.is_rational() && r.is_rational()) {
            if (sgn(l.a_) == 0 || sgn(r.a_) == 0) return Scalar();
            return Scalar(l.a_ * r.a_);
        }
        // (a1 + b1 i + c1 s + d1 is)(a2 + b2 i + c2 s + d2 is), s^2 = 2
        Scalar out;
        out.a_ = l.a_ * r.a_ - l.b_ * r.b_ + 2 * (l.c_ * r.c_) - 2 * (l.d_ * r.d_);
        out.b_ = l.a_ * r.b_ + l.b_ * r.a_ + 2 * (l.c_ * r.d_) + 2 * (l.d_ * r.c_);
        out.c_ = l.a_ * r.c_ + l.c_ * r.a_ - l.b_ * r.d_ - l.d_ * r.b_;
        out.d_ = l.a_ * r.d_ + l.d_ * r.a_ + l.b_ * r.c_ + l.c_ * r.b_;
        return out;
    }
    friend Scalar operator/(const Scalar& l, const Scalar& r) { return l * r.inverse(); }

    friend bool operator==(const Scalar& l, const Scalar& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
    }
    friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

    /// i -> -i
    Scalar conj_i() const { return Scalar(a_, -b_, c_, -d_); }
    /// sqrt2 -> -sqrt2
    Scalar conj_s2() const { return Scalar(a_, b_, -c_, -d_); }

    Scalar inverse() const;

    /// Total order (for use as map key); not compatible with field structure.
    friend bool operator<(const Scalar& l, const Scalar& r) {
        int c = cmp(l.a_, r.a_); if (c) return c < 0;
        c = cmp(l.b_, r.b_); if (c) return c < 0;
        c = cmp(l.c_, r.c_); if (c) return c < 0;
        return cmp(l.d_, r.d_) < 0;
    }

    std::string str() const;

private:
    mpq_class a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace superjet

#endif
