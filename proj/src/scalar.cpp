#include "superjet/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace superjet {

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
    if (is_rational()) return Scalar(mpq_class(1) / a_);
    // n1 = x * conj_i(x) lies in Q(sqrt2); n = n1 * conj_s2(n1) lies in Q.
    Scalar n1 = *this * conj_i();
    Scalar n = n1 * n1.conj_s2();
    // 1/x = conj_i(x) * conj_s2(n1) / n
    Scalar num = conj_i() * n1.conj_s2();
    mpq_class inv_n = mpq_class(1) / n.a_;
    return Scalar(num.a_ * inv_n, num.b_ * inv_n, num.c_ * inv_n, num.d_ * inv_n);
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const mpq_class& q, const char* unit) {
        if (sgn(q) == 0) return;
        if (!first && sgn(q) > 0) os << "+";
        if (unit[0] == '\0') {
            os << q.get_str();
        } else if (q == 1) {
            os << unit;
        } else if (q == -1) {
            os << "-" << unit;
        } else {
            os << q.get_str() << "*" << unit;
        }
        first = false;
    };
    emit(a_, "");
    emit(b_, "i");
    emit(c_, "r2");
    emit(d_, "i*r2");
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace superjet
