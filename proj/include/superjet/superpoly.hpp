#ifndef SUPERJET_SUPERPOLY_HPP
#define SUPERJET_SUPERPOLY_HPP

#include "superjet/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace superjet {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity l, Parity r) {
    return static_cast<Parity>((static_cast<uint8_t>(l) ^ static_cast<uint8_t>(r)));
}

/// Declaration table for polynomial variables. Names are unique, parities are
/// fixed at declaration, ids are stable and dense. At most 64 variables per
/// table (odd monomial parts are bitmasks over variable ids).
class VarTable {
public:
    int add(const std::string& name, Parity p);
    int id(const std::string& name) const;          // throws if absent
    bool has(const std::string& name) const;
    const std::string& name(int id) const { return names_.at(static_cast<size_t>(id)); }
    Parity parity(int id) const { return parities_.at(static_cast<size_t>(id)); }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::vector<Parity> parities_;
    std::map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Canonical monomial: even part as ascending (id, exponent) pairs, odd part
/// as a bitmask over variable ids (structurally enforcing theta^2 = 0; the
/// sign of any reordering is absorbed into the coefficient).
struct Monomial {
    std::vector<std::pair<int, int>> even;  // ascending ids, exponents > 0
    uint64_t odd = 0;

    bool is_one() const { return even.empty() && odd == 0; }
    Parity parity() const { return static_cast<Parity>(__builtin_popcountll(odd) & 1); }
    int degree() const;

    friend bool operator<(const Monomial& l, const Monomial& r) {
        if (l.odd != r.odd) return l.odd < r.odd;
        return l.even < r.even;
    }
    friend bool operator==(const Monomial& l, const Monomial& r) {
        return l.odd == r.odd && l.even == r.even;
    }
};

/// Supercommutative polynomial with Scalar coefficients over a shared
/// VarTable. Canonical form is unique, so equality is structural.
class SuperPoly {
public:
    SuperPoly() = default;
    explicit SuperPoly(VarTablePtr vt) : vt_(std::move(vt)) {}
    SuperPoly(VarTablePtr vt, const Scalar& c);

    static SuperPoly var(const VarTablePtr& vt, int id);
    static SuperPoly var(const VarTablePtr& vt, const std::string& name);
    static SuperPoly constant(const VarTablePtr& vt, const Scalar& c) { return SuperPoly(vt, c); }

    const VarTablePtr& table() const { return vt_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    /// Parity if homogeneous; throws if the polynomial mixes parities.
    Parity parity() const;
    bool is_homogeneous() const;
    bool is_even_zero_ok() const;   // zero or homogeneous even
    int degree() const;             // total degree, -1 for zero

    Scalar coefficient(const Monomial& m) const;
    Scalar constant_term() const;

    SuperPoly operator-() const;
    SuperPoly& operator+=(const SuperPoly& o);
    SuperPoly& operator-=(const SuperPoly& o);
    friend SuperPoly operator+(SuperPoly l, const SuperPoly& r) { l += r; return l; }
    friend SuperPoly operator-(SuperPoly l, const SuperPoly& r) { l -= r; return l; }
    friend SuperPoly operator*(const SuperPoly& l, const SuperPoly& r);
    friend SuperPoly operator*(const Scalar& c, const SuperPoly& p);
    friend bool operator==(const SuperPoly& l, const SuperPoly& r) {
        return l.terms_ == r.terms_;
    }
    friend bool operator!=(const SuperPoly& l, const SuperPoly& r) { return !(l == r); }

    void add_term(const Monomial& m, const Scalar& c);

    std::string str() const;

private:
    VarTablePtr vt_;
    std::map<Monomial, Scalar> terms_;
    friend SuperPoly mul_impl(const SuperPoly&, const SuperPoly&);
};

/// Left superderivation with respect to variable v: for odd v the variable is
/// anticommuted to the leftmost position (collecting the sign) and deleted.
SuperPoly partial(const SuperPoly& p, int v);

/// Substitution homomorphism within one table; variables absent from the map
/// are kept. Parities of images must match the substituted variables.
SuperPoly substitute(const SuperPoly& p, const std::map<int, SuperPoly>& sigma);

/// Substitution into a different table; every variable occurring in p must be
/// mapped, and images must live in `target`.
SuperPoly substitute_into(const SuperPoly& p, const std::map<int, SuperPoly>& sigma,
                          const VarTablePtr& target);

std::ostream& operator<<(std::ostream& os, const SuperPoly& p);

} // namespace superjet

#endif
