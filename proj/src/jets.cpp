#include "superjet/jets.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace superjet {

namespace {

int pbit(Parity p) { return p == Parity::Odd ? 1 : 0; }

std::string subscript(std::initializer_list<int> idx) {
    std::ostringstream os;
    for (int i : idx) os << i;
    return os.str();
}

} // namespace

JetContext::JetContext(const std::vector<Parity>& independents, int order)
    : xpar_(independents), order_(order) {
    if (order < 1 || order > 3) throw std::invalid_argument("JetContext: order must be 1..3");
    table_ = std::make_shared<VarTable>();
    const int n = num_x();
    for (int i = 0; i < n; ++i)
        x_.push_back(table_->add("x" + std::to_string(i), xpar_[static_cast<size_t>(i)]));
    u_ = table_->add("u", Parity::Even);
    for (int i = 0; i < n; ++i)
        u1_.push_back(table_->add("u" + subscript({i}), xpar_[static_cast<size_t>(i)]));
    if (order >= 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                if (i == j && xpar_[static_cast<size_t>(i)] == Parity::Odd) continue;
                Parity p = xpar_[static_cast<size_t>(i)] + xpar_[static_cast<size_t>(j)];
                int id = table_->add("u" + subscript({i, j}), p);
                u2_id_[{i, j}] = id;
                u2_ids_.push_back(id);
                u2_pairs_.push_back({i, j});
            }
    }
    if (order >= 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (int k = j; k < n; ++k) {
                    bool zero = (i == j && xpar_[static_cast<size_t>(i)] == Parity::Odd) ||
                                (j == k && xpar_[static_cast<size_t>(j)] == Parity::Odd);
                    if (zero) continue;
                    Parity p = xpar_[static_cast<size_t>(i)] + xpar_[static_cast<size_t>(j)] +
                               xpar_[static_cast<size_t>(k)];
                    int id = table_->add("u" + subscript({i, j, k}), p);
                    u3_id_[{i, j, k}] = id;
                    u3_ids_.push_back(id);
                    u3_triples_.push_back({i, j, k});
                }
    }
    vt_ = table_;
}

std::pair<int, int> JetContext::u2(int i, int j) const {
    int sign = 1;
    if (i > j) {
        if (xpar_[static_cast<size_t>(i)] == Parity::Odd && xpar_[static_cast<size_t>(j)] == Parity::Odd)
            sign = -sign;
        std::swap(i, j);
    }
    if (i == j && xpar_[static_cast<size_t>(i)] == Parity::Odd) return {0, -1};
    return {sign, u2_id_.at({i, j})};
}

std::pair<int, int> JetContext::u3(int i, int j, int k) const {
    std::array<int, 3> idx = {i, j, k};
    int sign = 1;
    // bubble sort with the supersymmetric sign (odd-odd swaps flip)
    for (int pass = 0; pass < 2; ++pass)
        for (int t = 0; t < 2 - pass; ++t)
            if (idx[static_cast<size_t>(t)] > idx[static_cast<size_t>(t + 1)]) {
                if (xpar_[static_cast<size_t>(idx[static_cast<size_t>(t)])] == Parity::Odd &&
                    xpar_[static_cast<size_t>(idx[static_cast<size_t>(t + 1)])] == Parity::Odd)
                    sign = -sign;
                std::swap(idx[static_cast<size_t>(t)], idx[static_cast<size_t>(t + 1)]);
            }
    for (int t = 0; t < 2; ++t)
        if (idx[static_cast<size_t>(t)] == idx[static_cast<size_t>(t + 1)] &&
            xpar_[static_cast<size_t>(idx[static_cast<size_t>(t)])] == Parity::Odd)
            return {0, -1};
    return {sign, u3_id_.at(idx)};
}

SuperPoly SuperVectorField::apply(const SuperPoly& f) const {
    SuperPoly out(vt);
    for (auto& [v, c] : coeff) {
        if (c.is_zero()) continue;
        out += c * partial(f, v);
    }
    return out;
}

SuperPoly SuperVectorField::coefficient(int id) const {
    auto it = coeff.find(id);
    return it == coeff.end() ? SuperPoly(vt) : it->second;
}

void SuperVectorField::add(int id, const SuperPoly& p) {
    if (p.is_zero()) return;
    auto [it, ins] = coeff.try_emplace(id, p);
    if (!ins) {
        it->second += p;
        if (it->second.is_zero()) coeff.erase(it);
    }
}

SuperVectorField& SuperVectorField::operator+=(const SuperVectorField& o) {
    for (auto& [v, c] : o.coeff) add(v, c);
    return *this;
}

SuperVectorField operator*(const SuperPoly& f, const SuperVectorField& v) {
    SuperVectorField out;
    out.vt = v.vt;
    out.parity = f.parity() + v.parity;
    for (auto& [id, c] : v.coeff) out.add(id, f * c);
    return out;
}

SuperVectorField field_bracket(const SuperVectorField& a, const SuperVectorField& b) {
    SuperVectorField out;
    out.vt = a.vt;
    out.parity = a.parity + b.parity;
    bool both_odd = a.parity == Parity::Odd && b.parity == Parity::Odd;
    for (auto& [v, c] : b.coeff) out.add(v, a.apply(c));
    for (auto& [v, c] : a.coeff) {
        SuperPoly t = b.apply(c);
        out.add(v, both_odd ? t : -t);
    }
    return out;
}

SuperVectorField total_derivative(const JetContext& ctx, int i, int order) {
    if (order < 1 || order > ctx.order())
        throw std::invalid_argument("total_derivative: order out of range");
    SuperVectorField d;
    d.vt = ctx.vars();
    d.parity = ctx.x_parity(i);
    d.add(ctx.x(i), ctx.constant(Scalar(1)));
    d.add(ctx.u(), ctx.var(ctx.u1(i)));
    if (order >= 2) {
        for (int j = 0; j < ctx.num_x(); ++j) {
            auto [sign, id] = ctx.u2(i, j);
            if (sign == 0) continue;
            d.add(ctx.u1(j), Scalar(sign) * ctx.var(id));
        }
    }
    if (order >= 3) {
        for (auto& [j, k] : ctx.u2_pairs()) {
            auto [sign, id] = ctx.u3(i, j, k);
            if (sign == 0) continue;
            d.add(ctx.u2(j, k).second, Scalar(sign) * ctx.var(id));
        }
    }
    return d;
}

SuperVectorField contact_field(const JetContext& ctx, const SuperPoly& f) {
    if (!f.is_homogeneous()) throw std::invalid_argument("contact_field: mixed-parity superfunction");
    int pf = pbit(f.parity());
    SuperVectorField s;
    s.vt = ctx.vars();
    s.parity = f.parity();
    s.add(ctx.u(), f);
    for (int i = 0; i < ctx.num_x(); ++i) {
        int pi = pbit(ctx.x_parity(i));
        SuperVectorField di = total_derivative(ctx, i, 1);
        SuperPoly fu = partial(f, ctx.u1(i));
        if (!fu.is_zero()) {
            Scalar sign = ((pi * (pf + 1)) & 1) ? Scalar(-1) : Scalar(1);
            s += ((-sign) * fu) * di;
        }
        SuperPoly df = di.apply(f);
        if (!df.is_zero()) {
            Scalar sign = ((pi * pf) & 1) ? Scalar(-1) : Scalar(1);
            s.add(ctx.u1(i), sign * df);
        }
    }
    return s;
}

SuperPoly lagrange_bracket(const JetContext& ctx, const SuperPoly& f, const SuperPoly& g) {
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw std::invalid_argument("lagrange_bracket: mixed-parity argument");
    int pf = pbit(f.parity()), pg = pbit(g.parity());
    SuperPoly out = f * partial(g, ctx.u());
    SuperPoly gf = g * partial(f, ctx.u());
    out += ((pf * pg) & 1) ? gf : -gf;
    for (int i = 0; i < ctx.num_x(); ++i) {
        int pi = pbit(ctx.x_parity(i));
        SuperVectorField di = total_derivative(ctx, i, 1);
        SuperPoly t1 = di.apply(f) * partial(g, ctx.u1(i));
        out += ((pi * pf) & 1) ? -t1 : t1;
        SuperPoly t2 = di.apply(g) * partial(f, ctx.u1(i));
        out += ((pg * (pf + pi)) & 1) ? t2 : -t2;
    }
    return out;
}

SuperVectorField prolong(const JetContext& ctx, const SuperPoly& f, int order) {
    if (order < 2 || order > ctx.order()) throw std::invalid_argument("prolong: order out of range");
    int pf = pbit(f.parity());
    SuperVectorField s = contact_field(ctx, f);
    for (auto& [j, k] : ctx.u2_pairs()) {
        SuperVectorField dj = total_derivative(ctx, j, 2);
        SuperVectorField dk = total_derivative(ctx, k, 2);
        SuperPoly h = dj.apply(dk.apply(f));
        int pj = pbit(ctx.x_parity(j)), pk = pbit(ctx.x_parity(k));
        if (((pj + pk) * pf) & 1) h = -h;
        s.add(ctx.u2(j, k).second, h);
    }
    if (order >= 3) {
        for (auto& t : ctx.u3_triples()) {
            SuperVectorField dj = total_derivative(ctx, t[0], 3);
            SuperVectorField dk = total_derivative(ctx, t[1], 3);
            SuperVectorField dl = total_derivative(ctx, t[2], 3);
            SuperPoly h = dj.apply(dk.apply(dl.apply(f)));
            int p = pbit(ctx.x_parity(t[0])) + pbit(ctx.x_parity(t[1])) + pbit(ctx.x_parity(t[2]));
            if ((p * pf) & 1) h = -h;
            s.add(ctx.u3(t[0], t[1], t[2]).second, h);
        }
    }
    return s;
}

SuperPoly contact_form_insertion(const JetContext& ctx, const SuperVectorField& X) {
    SuperPoly out = X.coefficient(ctx.u());
    for (int i = 0; i < ctx.num_x(); ++i)
        out -= X.coefficient(ctx.x(i)) * ctx.var(ctx.u1(i));
    return out;
}

CartanResidues cartan_residues(const JetContext& ctx, const SuperVectorField& X) {
    CartanResidues r;
    std::vector<SuperPoly> a;
    for (int i = 0; i < ctx.num_x(); ++i) a.push_back(X.coefficient(ctx.x(i)));

    r.du = X.coefficient(ctx.u());
    for (int i = 0; i < ctx.num_x(); ++i) r.du -= a[static_cast<size_t>(i)] * ctx.var(ctx.u1(i));

    for (int j = 0; j < ctx.num_x(); ++j) {
        SuperPoly c = X.coefficient(ctx.u1(j));
        for (int i = 0; i < ctx.num_x(); ++i) {
            auto [sign, id] = ctx.u2(i, j);
            if (sign == 0) continue;
            c -= a[static_cast<size_t>(i)] * (Scalar(sign) * ctx.var(id));
        }
        r.du1.push_back(c);
    }

    if (ctx.order() >= 3) {
        for (auto& [j, k] : ctx.u2_pairs()) {
            SuperPoly c = X.coefficient(ctx.u2(j, k).second);
            for (int i = 0; i < ctx.num_x(); ++i) {
                auto [sign, id] = ctx.u3(i, j, k);
                if (sign == 0) continue;
                c -= a[static_cast<size_t>(i)] * (Scalar(sign) * ctx.var(id));
            }
            r.du2.push_back(c);
        }
    }
    return r;
}

bool CartanResidues::in_distribution() const {
    if (!du.is_zero()) return false;
    for (auto& c : du1)
        if (!c.is_zero()) return false;
    for (auto& c : du2)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace superjet
