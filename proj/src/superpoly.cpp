#include "superjet/superpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace superjet {

int VarTable::add(const std::string& name, Parity p) {
    if (index_.count(name)) throw std::invalid_argument("VarTable: duplicate name " + name);
    if (names_.size() >= 64) throw std::length_error("VarTable: at most 64 variables");
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    parities_.push_back(p);
    index_[name] = id;
    return id;
}

int VarTable::id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("VarTable: unknown variable " + name);
    return it->second;
}

bool VarTable::has(const std::string& name) const { return index_.count(name) != 0; }

int Monomial::degree() const {
    int d = __builtin_popcountll(odd);
    for (auto& [v, e] : even) { (void)v; d += e; }
    return d;
}

SuperPoly::SuperPoly(VarTablePtr vt, const Scalar& c) : vt_(std::move(vt)) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
}

SuperPoly SuperPoly::var(const VarTablePtr& vt, int id) {
    SuperPoly p(vt);
    Monomial m;
    if (vt->parity(id) == Parity::Odd) m.odd = (1ull << id);
    else m.even.push_back({id, 1});
    p.terms_[m] = Scalar(1);
    return p;
}

SuperPoly SuperPoly::var(const VarTablePtr& vt, const std::string& name) {
    return var(vt, vt->id(name));
}

Parity SuperPoly::parity() const {
    if (terms_.empty()) return Parity::Even;
    Parity p = terms_.begin()->first.parity();
    for (auto& [m, c] : terms_)
        if (m.parity() != p) throw std::domain_error("SuperPoly: mixed parity");
    return p;
}

bool SuperPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    Parity p = terms_.begin()->first.parity();
    for (auto& [m, c] : terms_)
        if (m.parity() != p) return false;
    return true;
}

int SuperPoly::degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Scalar SuperPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar SuperPoly::constant_term() const { return coefficient(Monomial{}); }

SuperPoly SuperPoly::operator-() const {
    SuperPoly out(vt_);
    for (auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

void SuperPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

static void check_same_table(const SuperPoly& l, const SuperPoly& r) {
    if (l.table() && r.table() && l.table() != r.table())
        throw std::invalid_argument("SuperPoly: mismatched variable tables");
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
    check_same_table(*this, o);
    if (!vt_) vt_ = o.vt_;
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
    check_same_table(*this, o);
    if (!vt_) vt_ = o.vt_;
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

// Sign of merging two disjoint ascending odd-id lists (Koszul bookkeeping):
// each bit b of `rhs` moves left past the bits of `lhs` above it.
static int merge_sign(uint64_t lhs, uint64_t rhs) {
    int swaps = 0;
    uint64_t r = rhs;
    while (r) {
        int b = __builtin_ctzll(r);
        swaps += __builtin_popcountll(lhs >> (b + 1));
        r &= r - 1;
    }
    return (swaps & 1) ? -1 : 1;
}

static Monomial merge_even(const Monomial& a, const Monomial& b, uint64_t odd) {
    Monomial m;
    m.odd = odd;
    auto ia = a.even.begin(), ib = b.even.begin();
    while (ia != a.even.end() || ib != b.even.end()) {
        if (ib == b.even.end() || (ia != a.even.end() && ia->first < ib->first)) {
            m.even.push_back(*ia++);
        } else if (ia == a.even.end() || ib->first < ia->first) {
            m.even.push_back(*ib++);
        } else {
            m.even.push_back({ia->first, ia->second + ib->second});
            ++ia; ++ib;
        }
    }
    return m;
}

SuperPoly operator*(const SuperPoly& l, const SuperPoly& r) {
    check_same_table(l, r);
    SuperPoly out(l.vt_ ? l.vt_ : r.vt_);
    for (auto& [ml, cl] : l.terms_) {
        for (auto& [mr, cr] : r.terms_) {
            if (ml.odd & mr.odd) continue;  // theta^2 = 0
            Scalar c = cl * cr;
            if (merge_sign(ml.odd, mr.odd) < 0) c = -c;
            out.add_term(merge_even(ml, mr, ml.odd | mr.odd), c);
        }
    }
    return out;
}

SuperPoly operator*(const Scalar& c, const SuperPoly& p) {
    SuperPoly out(p.table());
    if (c.is_zero()) return out;
    for (auto& [m, q] : p.terms()) out.add_term(m, c * q);
    return out;
}

SuperPoly partial(const SuperPoly& p, int v) {
    const VarTablePtr& vt = p.table();
    SuperPoly out(vt);
    if (vt->parity(v) == Parity::Odd) {
        uint64_t bit = 1ull << v;
        for (auto& [m, c] : p.terms()) {
            if (!(m.odd & bit)) continue;
            Monomial d = m;
            d.odd &= ~bit;
            int below = __builtin_popcountll(m.odd & (bit - 1));
            out.add_term(d, (below & 1) ? -c : c);
        }
    } else {
        for (auto& [m, c] : p.terms()) {
            for (size_t k = 0; k < m.even.size(); ++k) {
                if (m.even[k].first != v) continue;
                Monomial d = m;
                int e = d.even[k].second;
                if (e == 1) d.even.erase(d.even.begin() + static_cast<long>(k));
                else d.even[k].second = e - 1;
                out.add_term(d, Scalar(e) * c);
                break;
            }
        }
    }
    return out;
}

static SuperPoly power(const SuperPoly& base, int e) {
    SuperPoly acc = SuperPoly::constant(base.table(), Scalar(1));
    for (int k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

static SuperPoly substitute_generic(const SuperPoly& p, const std::map<int, SuperPoly>& sigma,
                                    const VarTablePtr& target, bool require_total) {
    const VarTablePtr& src = p.table();
    for (auto& [v, img] : sigma) {
        if (img.table() != target)
            throw std::invalid_argument("substitute: image not over target table");
        if (!img.is_zero() && img.parity() != src->parity(v))
            throw std::invalid_argument("substitute: parity mismatch for " + src->name(v));
    }
    SuperPoly out(target);
    for (auto& [m, c] : p.terms()) {
        SuperPoly term = SuperPoly::constant(target, c);
        for (auto& [v, e] : m.even) {
            auto it = sigma.find(v);
            if (it != sigma.end()) {
                term = term * power(it->second, e);
            } else if (require_total) {
                throw std::invalid_argument("substitute: unmapped variable " + src->name(v));
            } else {
                Monomial mv;
                mv.even.push_back({v, e});
                SuperPoly pv(target);
                pv.add_term(mv, Scalar(1));
                term = term * pv;
            }
            if (term.is_zero()) break;
        }
        uint64_t odd = m.odd;
        while (odd && !term.is_zero()) {
            int v = __builtin_ctzll(odd);
            odd &= odd - 1;
            auto it = sigma.find(v);
            if (it != sigma.end()) {
                term = term * it->second;
            } else if (require_total) {
                throw std::invalid_argument("substitute: unmapped variable " + src->name(v));
            } else {
                term = term * SuperPoly::var(target, v);
            }
        }
        out += term;
    }
    return out;
}

SuperPoly substitute(const SuperPoly& p, const std::map<int, SuperPoly>& sigma) {
    return substitute_generic(p, sigma, p.table(), false);
}

SuperPoly substitute_into(const SuperPoly& p, const std::map<int, SuperPoly>& sigma,
                          const VarTablePtr& target) {
    return substitute_generic(p, sigma, target, true);
}

std::string SuperPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string cs = c.str();
        if (!first) os << " + ";
        first = false;
        bool unit = c.is_one();
        bool bare = c.is_rational() || cs.find('+') == std::string::npos;
        if (m.is_one()) {
            os << cs;
            continue;
        }
        if (!unit) os << (bare ? cs : "(" + cs + ")") << "*";
        bool fv = true;
        for (auto& [v, e] : m.even) {
            if (!fv) os << "*";
            fv = false;
            os << vt_->name(v);
            if (e > 1) os << "^" << e;
        }
        uint64_t odd = m.odd;
        while (odd) {
            int v = __builtin_ctzll(odd);
            odd &= odd - 1;
            if (!fv) os << "*";
            fv = false;
            os << vt_->name(v);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SuperPoly& p) { return os << p.str(); }

} // namespace superjet
