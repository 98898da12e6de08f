#include "superjet/pdesym.hpp"
#include "superjet/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace superjet {
namespace pdesym {

namespace {

bool contains_any(const SuperPoly& p, const std::map<int, SuperPoly>& solved) {
    for (auto& [m, c] : p.terms()) {
        for (auto& [v, e] : m.even)
            if (solved.count(v)) return true;
        uint64_t odd = m.odd;
        while (odd) {
            int v = __builtin_ctzll(odd);
            odd &= odd - 1;
            if (solved.count(v)) return true;
        }
    }
    return false;
}

} // namespace

PDESystem::PDESystem(std::shared_ptr<JetContext> ctx, std::map<int, SuperPoly> solved,
                     std::vector<int> free_ids)
    : ctx_(std::move(ctx)), solved_(std::move(solved)), free_ids_(std::move(free_ids)) {
    for (auto& [lhs, rhs] : solved_) {
        if (!rhs.is_zero() && rhs.parity() != ctx_->vars()->parity(lhs))
            throw std::invalid_argument("PDESystem: parity mismatch on " + ctx_->vars()->name(lhs));
        if (contains_any(rhs, solved_))
            throw std::invalid_argument("PDESystem: right-hand side not in free coordinates");
    }
}

SuperPoly PDESystem::reduce(SuperPoly p) const {
    std::map<int, SuperPoly> sub;
    for (auto& [lhs, rhs] : solved_) sub[lhs] = rhs;
    for (int pass = 0; pass < 16; ++pass) {
        if (!contains_any(p, solved_)) return p;
        p = substitute(p, sub);
    }
    throw std::runtime_error("PDESystem::reduce: substitution did not terminate");
}

SymmetryCheck is_symmetry(const PDESystem& sys, const SuperPoly& f) {
    const JetContext& ctx = sys.context();
    SuperVectorField X = prolong(ctx, f, ctx.order());
    SymmetryCheck out;
    out.ok = true;
    for (auto& [w, rhs] : sys.solved()) {
        SuperPoly res = X.apply(ctx.var(w)) - X.apply(rhs);
        res = sys.reduce(res);
        if (!res.is_zero()) {
            out.ok = false;
            out.residuals.push_back({w, res});
        }
    }
    return out;
}

// --- JSON schema -----------------------------------------------------------

namespace {

nlohmann::ordered_json poly_to_json(const SuperPoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["coeff"] = {c.re_rat().get_str(), c.im_rat().get_str(), c.re_s2().get_str(),
                      c.im_s2().get_str()};
        nlohmann::ordered_json even = nlohmann::ordered_json::array();
        for (auto& [v, e] : m.even) even.push_back({v, e});
        t["even"] = even;
        nlohmann::ordered_json odd = nlohmann::ordered_json::array();
        uint64_t bits = m.odd;
        while (bits) {
            int v = __builtin_ctzll(bits);
            bits &= bits - 1;
            odd.push_back(v);
        }
        t["odd"] = odd;
        terms.push_back(t);
    }
    return terms;
}

SuperPoly poly_from_json(const nlohmann::json& j, const VarTablePtr& vt) {
    SuperPoly p(vt);
    for (auto& t : j) {
        auto c = t.at("coeff");
        Scalar s(mpq_class(c.at(0).get<std::string>()), mpq_class(c.at(1).get<std::string>()),
                 mpq_class(c.at(2).get<std::string>()), mpq_class(c.at(3).get<std::string>()));
        Monomial m;
        for (auto& ve : t.at("even")) m.even.push_back({ve.at(0).get<int>(), ve.at(1).get<int>()});
        for (auto& v : t.at("odd")) m.odd |= (1ull << v.get<int>());
        p.add_term(m, s);
    }
    return p;
}

} // namespace

std::string PDESystem::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json xs = nlohmann::ordered_json::array();
    for (int i = 0; i < ctx_->num_x(); ++i)
        xs.push_back(ctx_->x_parity(i) == Parity::Odd ? "odd" : "even");
    j["context"] = {{"independents", xs}, {"order", ctx_->order()}};
    j["determined"] = nlohmann::ordered_json::array();
    for (auto& [lhs, rhs] : solved_)
        j["determined"].push_back(
            {{"lhs", ctx_->vars()->name(lhs)}, {"rhs", poly_to_json(rhs)}});
    j["free"] = nlohmann::ordered_json::array();
    for (int id : free_ids_) j["free"].push_back(ctx_->vars()->name(id));
    return j.dump(2);
}

PDESystem PDESystem::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Parity> xs;
    for (auto& s : j.at("context").at("independents"))
        xs.push_back(s.get<std::string>() == "odd" ? Parity::Odd : Parity::Even);
    auto ctx = std::make_shared<JetContext>(xs, j.at("context").at("order").get<int>());
    std::map<int, SuperPoly> solved;
    for (auto& eq : j.at("determined")) {
        int lhs = ctx->vars()->id(eq.at("lhs").get<std::string>());
        solved[lhs] = poly_from_json(eq.at("rhs"), ctx->vars());
    }
    std::vector<int> free_ids;
    for (auto& s : j.at("free")) free_ids.push_back(ctx->vars()->id(s.get<std::string>()));
    return PDESystem(ctx, std::move(solved), std::move(free_ids));
}

// --- symmetry algebra assembly ----------------------------------------------

std::pair<int, int> SymmetryBasis::super_dim() const {
    int e = 0, o = 0;
    for (auto& g : gens) (g.parity() == Parity::Odd ? o : e) += 1;
    return {e, o};
}

std::pair<int, int> SymmetryBasis::graded_dim(long d) const {
    int e = 0, o = 0;
    for (size_t k = 0; k < gens.size(); ++k)
        if (degrees[k] == d) (gens[k].parity() == Parity::Odd ? o : e) += 1;
    return {e, o};
}

SymmetryBasis assemble_symmetry_algebra(const std::shared_ptr<JetContext>& ctx,
                                        const std::vector<std::pair<std::string, SuperPoly>>& gens,
                                        Report* rep, bool parallel) {
    SymmetryBasis basis;
    basis.ctx = ctx;
    for (auto& [label, g] : gens) {
        basis.labels.push_back(label);
        basis.gens.push_back(g);
    }
    const int n = static_cast<int>(basis.gens.size());

    // monomial dictionary over the span
    std::map<Monomial, int> dict;
    for (auto& g : basis.gens)
        for (auto& [m, c] : g.terms()) dict.try_emplace(m, static_cast<int>(dict.size()));
    ScalarMat span(static_cast<int>(dict.size()), n);
    for (int k = 0; k < n; ++k)
        for (auto& [m, c] : basis.gens[static_cast<size_t>(k)].terms())
            span.at(dict.at(m), k) = c;
    RowEchelon re(span);
    if (rep) rep->add("generator_span_rank", std::to_string(n), std::to_string(re.rank()));

    auto coords_of = [&](const SuperPoly& p) -> std::optional<std::vector<Scalar>> {
        std::vector<Scalar> v(dict.size());
        for (auto& [m, c] : p.terms()) {
            auto it = dict.find(m);
            if (it == dict.end()) return std::nullopt;  // escapes the span
            v[static_cast<size_t>(it->second)] = c;
        }
        return re.solve(v);
    };

    // grading element Z = 2u - x^i u_i lies in the span
    SuperPoly Z = Scalar(2) * ctx->var(ctx->u());
    for (int i = 0; i < ctx->num_x(); ++i) Z -= ctx->var(ctx->x(i)) * ctx->var(ctx->u1(i));
    bool z_in_span = false;
    {
        std::vector<Scalar> v(dict.size());
        bool representable = true;
        for (auto& [m, c] : Z.terms()) {
            auto it = dict.find(m);
            if (it == dict.end()) representable = false;
            else v[static_cast<size_t>(it->second)] = c;
        }
        if (representable && re.solve(v)) z_in_span = true;
    }
    if (rep) rep->add_bool("grading_function_in_span", z_in_span);

    bool diagonal = true, integer_degrees = true;
    for (int k = 0; k < n; ++k) {
        SuperPoly br = lagrange_bracket(*ctx, Z, basis.gens[static_cast<size_t>(k)]);
        // exact proportionality br = d * gen
        const SuperPoly& g = basis.gens[static_cast<size_t>(k)];
        Scalar lead_g = g.terms().begin()->second;
        Scalar d = br.is_zero() ? Scalar(0) : br.coefficient(g.terms().begin()->first) / lead_g;
        if (br != d * g) diagonal = false;
        if (!d.is_rational() || d.re_rat().get_den() != 1) integer_degrees = false;
        basis.degrees.push_back(d.re_rat().get_num().get_si());
    }
    if (rep) {
        rep->add_bool("ad_Z_diagonal", diagonal);
        rep->add_bool("ad_Z_integer_degrees", integer_degrees);
    }

    // the n^2 bracket solves are independent
    std::vector<std::optional<std::vector<Scalar>>> coords(static_cast<size_t>(n) * static_cast<size_t>(n));
    parallel_for(static_cast<long>(n) * n, parallel, [&](long idx) {
        int i = static_cast<int>(idx) / n, j = static_cast<int>(idx) % n;
        SuperPoly br = lagrange_bracket(*ctx, basis.gens[static_cast<size_t>(i)],
                                        basis.gens[static_cast<size_t>(j)]);
        coords[static_cast<size_t>(idx)] = coords_of(br);
    });
    bool closed = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& cc = coords[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
            if (!cc) {
                closed = false;
                continue;
            }
            std::vector<std::pair<int, Scalar>> entry;
            for (int k = 0; k < n; ++k)
                if (!(*cc)[static_cast<size_t>(k)].is_zero())
                    entry.push_back({k, (*cc)[static_cast<size_t>(k)]});
            if (!entry.empty()) basis.structure[{i, j}] = std::move(entry);
        }
    if (rep) rep->add_bool("bracket_closed", closed);
    return basis;
}

// --- tabulated generators ---------------------------------------------------

std::vector<std::pair<std::string, SuperPoly>> mixed_symmetry_generators(const JetContext& ctx) {
    const VarTablePtr& vt = ctx.vars();
    auto X = [&](int i) { return SuperPoly::var(vt, ctx.x(i)); };
    auto U1 = [&](int i) { return SuperPoly::var(vt, ctx.u1(i)); };
    SuperPoly u = SuperPoly::var(vt, ctx.u());

    // cubic data on X = (x^1,x^2|x^3,x^4) and P = (u_1,u_2|u_3,u_4)
    std::array<int, 4> xids = {ctx.x(1), ctx.x(2), ctx.x(3), ctx.x(4)};
    std::array<int, 4> pids = {ctx.u1(1), ctx.u1(2), ctx.u1(3), ctx.u1(4)};
    cubicforms::CubicTensors C = cubicforms::primal_cubic(vt, xids);
    cubicforms::CubicTensors Cs = cubicforms::dual_cubic(vt, pids);

    auto sgn_a = [&](int a) { return ctx.x_parity(a) == Parity::Odd ? Scalar(-1) : Scalar(1); };
    SuperPoly euler(vt);  // x^i u_i, 0 <= i <= 4
    for (int i = 0; i <= 4; ++i) euler += X(i) * U1(i);

    std::vector<std::pair<std::string, SuperPoly>> out;

    // top degree
    {
        SuperPoly f = u * (u - euler) - Scalar(1, 2) * (C.C * U1(0)) + Scalar(1, 2) * (Cs.C * X(0));
        for (int c = 0; c < 4; ++c)
            f += Scalar(9, 4) * (C.C1[static_cast<size_t>(c)] * Cs.C1[static_cast<size_t>(c)]);
        out.push_back({"g2", f});
    }
    // degree +1
    out.push_back({"g1_x0", X(0) * (u - euler) - Scalar(1, 2) * C.C});
    for (int a = 1; a <= 4; ++a) {
        SuperPoly f = X(a) * (u - euler);
        SuperPoly tail = Scalar(3, 2) * (Cs.C1[static_cast<size_t>(a - 1)] * X(0));
        for (int b = 1; b <= 4; ++b)
            tail += Scalar(9, 2) *
                    (C.C1[static_cast<size_t>(b - 1)] * Cs.C2[static_cast<size_t>(b - 1)][static_cast<size_t>(a - 1)]);
        f += sgn_a(a) * tail;
        out.push_back({"g1_x" + std::to_string(a), f});
    }
    out.push_back({"g1_u0", u * U1(0) - Scalar(1, 2) * Cs.C});
    for (int a = 1; a <= 4; ++a) {
        SuperPoly f = u * U1(a) + Scalar(3, 2) * (C.C1[static_cast<size_t>(a - 1)] * U1(0));
        for (int b = 1; b <= 4; ++b)
            f -= Scalar(9, 2) *
                 (C.C2[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] * Cs.C1[static_cast<size_t>(b - 1)]);
        out.push_back({"g1_u" + std::to_string(a), f});
    }
    // center of degree zero
    out.push_back({"Z", Scalar(2) * u - euler});
    // f_1
    for (int a = 1; a <= 4; ++a) {
        SuperPoly f = X(a) * U1(0) - Scalar(3, 2) * (sgn_a(a) * Cs.C1[static_cast<size_t>(a - 1)]);
        out.push_back({"f1_" + std::to_string(a), f});
    }
    // center of f_0
    {
        SuperPoly f = Scalar(3, 2) * (X(0) * U1(0));
        for (int c = 1; c <= 4; ++c) f += Scalar(1, 2) * (X(c) * U1(c));
        out.push_back({"Z0", f});
    }
    // f_0 semisimple slice: the eight independent psi^a_b
    {
        auto psi = [&](int a, int b) {
            SuperPoly f = X(a) * U1(b);
            SuperPoly inner(vt);
            if (a == b)
                for (int c = 1; c <= 4; ++c) inner += Scalar(1, 3) * (X(c) * U1(c));
            SuperPoly corr(vt);
            for (int c = 1; c <= 4; ++c)
                corr += C.C2[static_cast<size_t>(b - 1)][static_cast<size_t>(c - 1)] *
                        Cs.C2[static_cast<size_t>(c - 1)][static_cast<size_t>(a - 1)];
            bool aodd = ctx.x_parity(a) == Parity::Odd;
            bool bodd = ctx.x_parity(b) == Parity::Odd;
            // tail = (1/3) delta_ab x^c u_c - 9 (-1)^{|a||b|} corr, scaled by (-1)^{|a|}
            SuperPoly tail = inner + ((aodd && bodd) ? Scalar(9) : Scalar(-9)) * corr;
            f += sgn_a(a) * tail;
            return f;
        };
        const std::pair<int, int> idx[8] = {{1, 1}, {3, 3}, {3, 4}, {4, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
        for (auto& [a, b] : idx)
            out.push_back({"f0ss_" + std::to_string(a) + std::to_string(b), psi(a, b)});
    }
    // f_{-1}
    for (int a = 1; a <= 4; ++a)
        out.push_back({"fm1_" + std::to_string(a),
                       U1(a) * X(0) + Scalar(3, 2) * C.C1[static_cast<size_t>(a - 1)]});
    // degree -1 and -2
    for (int i = 0; i <= 4; ++i) out.push_back({"x" + std::to_string(i), X(i)});
    for (int i = 0; i <= 4; ++i) out.push_back({"u" + std::to_string(i), U1(i)});
    out.push_back({"one", ctx.constant(Scalar(1))});
    return out;
}

std::vector<std::pair<std::string, SuperPoly>> odd_symmetry_generators(const JetContext& ctx) {
    const VarTablePtr& vt = ctx.vars();
    auto X = [&](int i) { return SuperPoly::var(vt, ctx.x(i)); };
    auto U1 = [&](int i) { return SuperPoly::var(vt, ctx.u1(i)); };
    SuperPoly u = SuperPoly::var(vt, ctx.u());
    const Scalar th(1, 3), tt(2, 3);

    std::vector<std::pair<std::string, SuperPoly>> out;

    // degree +2
    {
        SuperPoly f = u * u;
        for (int i = 0; i < 4; ++i) f += u * (U1(i) * X(i));
        for (int a = 1; a <= 3; ++a) f -= tt * (U1(0) * (U1(a) * X(0) * X(a)));
        f += th * (U1(0) * X(1) * X(2) * X(3));
        f -= th * (U1(1) * U1(2) * U1(3) * X(0));
        f -= th * (U1(1) * U1(2) * X(1) * X(2));
        f -= th * (U1(1) * U1(3) * X(1) * X(3));
        f -= th * (U1(2) * U1(3) * X(2) * X(3));
        out.push_back({"g2", f});
    }
    // degree +1: the four x-type and four u-type rows
    {
        SuperPoly f = -(u + th * (U1(1) * X(1)) + th * (U1(2) * X(2)) + th * (U1(3) * X(3))) * X(0) +
                      th * (X(1) * X(2) * X(3));
        out.push_back({"g1_x0", f});
    }
    {
        const int rows[3][4] = {{1, 2, 3, 0}, {2, 1, 3, 0}, {3, 1, 2, 0}};
        for (auto& r : rows) {
            int a = r[0], b = r[1], c = r[2];
            SuperPoly f = -(u + th * (U1(0) * X(0)) + tt * (U1(b) * X(b)) + tt * (U1(c) * X(c))) * X(a);
            // pair term: -1/3 u_b u_c x^0 in cyclic order (23),(31),(12)
            if (a == 1) f -= th * (U1(2) * U1(3) * X(0));
            if (a == 2) f -= th * (U1(3) * U1(1) * X(0));
            if (a == 3) f -= th * (U1(1) * U1(2) * X(0));
            out.push_back({"g1_x" + std::to_string(a), f});
        }
    }
    {
        SuperPoly f = -(u + tt * (U1(1) * X(1)) + tt * (U1(2) * X(2)) + tt * (U1(3) * X(3))) * U1(0) +
                      th * (U1(1) * U1(2) * U1(3));
        out.push_back({"g1_u0", f});
    }
    {
        for (int a = 1; a <= 3; ++a) {
            int b = (a == 1) ? 2 : 1;
            int c = (a == 3) ? 2 : 3;
            SuperPoly f = -(u + tt * (U1(0) * X(0)) + th * (U1(b) * X(b)) + th * (U1(c) * X(c))) * U1(a);
            if (a == 1) f -= th * (X(2) * X(3) * U1(0));
            if (a == 2) f -= th * (X(3) * X(1) * U1(0));
            if (a == 3) f -= th * (X(1) * X(2) * U1(0));
            out.push_back({"g1_u" + std::to_string(a), f});
        }
    }
    // degree 0 (22 generators)
    out.push_back({"g0_x0x1", X(0) * X(1)});
    out.push_back({"g0_x0x2", X(0) * X(2)});
    out.push_back({"g0_x0x3", X(0) * X(3)});
    out.push_back({"g0_u1x0", U1(1) * X(0) + X(2) * X(3)});
    out.push_back({"g0_u2x0", U1(2) * X(0) + X(3) * X(1)});
    out.push_back({"g0_u3x0", U1(3) * X(0) + X(1) * X(2)});
    out.push_back({"g0_u0x1", U1(0) * X(1) - U1(2) * U1(3)});
    out.push_back({"g0_u0x2", U1(0) * X(2) - U1(3) * U1(1)});
    out.push_back({"g0_u0x3", U1(0) * X(3) - U1(1) * U1(2)});
    out.push_back({"g0_u0x0", U1(0) * X(0) - u});
    out.push_back({"g0_u1x1", U1(1) * X(1) + u});
    out.push_back({"g0_u2x2", U1(2) * X(2) + u});
    out.push_back({"g0_u3x3", U1(3) * X(3) + u});
    out.push_back({"g0_u1x2", U1(1) * X(2)});
    out.push_back({"g0_u2x3", U1(2) * X(3)});
    out.push_back({"g0_u3x1", U1(3) * X(1)});
    out.push_back({"g0_u1x3", U1(1) * X(3)});
    out.push_back({"g0_u3x2", U1(3) * X(2)});
    out.push_back({"g0_u2x1", U1(2) * X(1)});
    out.push_back({"g0_u0u1", U1(0) * U1(1)});
    out.push_back({"g0_u0u2", U1(0) * U1(2)});
    out.push_back({"g0_u0u3", U1(0) * U1(3)});
    // degree -1 and -2
    for (int i = 0; i < 4; ++i) out.push_back({"x" + std::to_string(i), X(i)});
    for (int i = 0; i < 4; ++i) out.push_back({"u" + std::to_string(i), U1(i)});
    out.push_back({"one", ctx.constant(Scalar(1))});
    return out;
}

PDESystem second_order_system() {
    cubicforms::OsculationOutput o = cubicforms::supervariety_and_osculation();
    return PDESystem(o.ctx, o.solved, o.free_ids);
}

// --- second-order verification ----------------------------------------------

Report verify_second_order(bool parallel) {
    Report rep;
    rep.command = "verify-2pde";
    PDESystem sys = second_order_system();
    auto gens = mixed_symmetry_generators(sys.context());
    rep.add("generator_count", "40", std::to_string(gens.size()));

    std::vector<int> ok(gens.size(), 0);
    parallel_for(static_cast<long>(gens.size()), parallel, [&](long k) {
        ok[static_cast<size_t>(k)] = is_symmetry(sys, gens[static_cast<size_t>(k)].second).ok ? 1 : 0;
    });
    int pass = 0;
    for (int v : ok) pass += v;
    rep.add("symmetries_certified", "40", std::to_string(pass));

    SymmetryBasis basis = assemble_symmetry_algebra(sys.context_ptr(), gens, &rep, parallel);
    auto [e, o] = basis.super_dim();
    rep.add("super_dim", "24|16", std::to_string(e) + "|" + std::to_string(o));
    std::ostringstream dims;
    for (long d = -2; d <= 2; ++d) {
        auto [de, dodd] = basis.graded_dim(d);
        if (d > -2) dims << ",";
        dims << de << "|" << dodd;
    }
    rep.add("graded_dims", "1|0,6|4,10|8,6|4,1|0", dims.str());

    // the semisimple degree-zero slice spanned by the psi generators is
    // (4|4)-dimensional and matches the tabulated explicit basis
    const JetContext& ctx = sys.context();
    const VarTablePtr& vt = ctx.vars();
    std::vector<SuperPoly> psis;
    for (auto& [label, g] : gens)
        if (label.rfind("f0ss_", 0) == 0) psis.push_back(g);
    auto X = [&](int i) { return SuperPoly::var(vt, ctx.x(i)); };
    auto U1 = [&](int i) { return SuperPoly::var(vt, ctx.u1(i)); };
    std::vector<SuperPoly> explicit8 = {
        Scalar(4) * (U1(1) * X(1)) - Scalar(2) * (U1(2) * X(2)) - U1(3) * X(3) - U1(4) * X(4),
        U1(3) * X(3) - U1(4) * X(4),
        U1(4) * X(3),
        U1(3) * X(4),
        -(U1(2) * X(4)) + U1(3) * X(1),
        U1(2) * X(3) + U1(4) * X(1),
        Scalar(-2) * (U1(1) * X(4)) + U1(3) * X(2),
        Scalar(2) * (U1(1) * X(3)) + U1(4) * X(2),
    };
    // span equality by double containment, exact
    std::map<Monomial, int> dict;
    for (auto& p : psis)
        for (auto& [m, c] : p.terms()) dict.try_emplace(m, static_cast<int>(dict.size()));
    for (auto& p : explicit8)
        for (auto& [m, c] : p.terms()) dict.try_emplace(m, static_cast<int>(dict.size()));
    auto coords = [&](const SuperPoly& p) {
        std::vector<Scalar> v(dict.size());
        for (auto& [m, c] : p.terms()) v[static_cast<size_t>(dict.at(m))] = c;
        return v;
    };
    ScalarMat mp(static_cast<int>(dict.size()), static_cast<int>(psis.size()));
    for (size_t k = 0; k < psis.size(); ++k) {
        auto v = coords(psis[k]);
        for (size_t r = 0; r < v.size(); ++r) mp.at(static_cast<int>(r), static_cast<int>(k)) = v[r];
    }
    RowEchelon rp(mp);
    int podd = 0, peven = 0;
    for (auto& p : psis) (p.parity() == Parity::Odd ? podd : peven) += 1;
    rep.add("f0ss_slice_dims", "4|4", std::to_string(peven) + "|" + std::to_string(podd));
    rep.add("f0ss_rank", "8", std::to_string(rp.rank()));
    bool contained = true;
    for (auto& p : explicit8)
        if (!rp.solve(coords(p))) contained = false;
    rep.add_bool("f0ss_matches_tabulated_basis", contained);
    return rep;
}

// --- incidence pipeline -------------------------------------------------------

namespace {

std::shared_ptr<JetContext> odd_ctx(int order) {
    return std::make_shared<JetContext>(
        std::vector<Parity>{Parity::Odd, Parity::Odd, Parity::Odd, Parity::Odd}, order);
}

// u_{31} etc. through the canonical lookup
SuperPoly u2s(const JetContext& ctx, int i, int j) {
    auto [sign, id] = ctx.u2(i, j);
    if (sign == 0) return SuperPoly(ctx.vars());
    return Scalar(sign) * ctx.var(id);
}

} // namespace

IncidencePipeline build_incidence_pipeline() {
    IncidencePipeline out;
    out.ctx2 = odd_ctx(2);
    out.ctx3 = odd_ctx(3);
    const JetContext& c2 = *out.ctx2;

    // the distribution: three twisted verticals (cyclic in the lower index
    // triple) and the lifted odd direction
    {
        SuperVectorField v1;
        v1.vt = c2.vars();
        v1.parity = Parity::Even;
        v1.add(c2.u2(2, 3).second, c2.constant(Scalar(1)));
        v1.add(c2.u2(0, 2).second, -u2s(c2, 1, 2));
        v1.add(c2.u2(0, 3).second, u2s(c2, 3, 1));
        SuperVectorField v2;
        v2.vt = c2.vars();
        v2.parity = Parity::Even;
        v2.add(c2.u2(1, 3).second, Scalar(-1) * c2.constant(Scalar(1)));  // d_{u31} = -d_{u13}
        v2.add(c2.u2(0, 3).second, -u2s(c2, 2, 3));
        v2.add(c2.u2(0, 1).second, u2s(c2, 1, 2));
        SuperVectorField v3;
        v3.vt = c2.vars();
        v3.parity = Parity::Even;
        v3.add(c2.u2(1, 2).second, c2.constant(Scalar(1)));
        v3.add(c2.u2(0, 1).second, -u2s(c2, 3, 1));
        v3.add(c2.u2(0, 2).second, u2s(c2, 2, 3));
        SuperVectorField e0 = total_derivative(c2, 0, 2);
        auto add_scaled = [&](SuperVectorField& dst, const SuperPoly& s, const SuperVectorField& src) {
            for (auto& [id, c] : src.coeff) dst.add(id, s * c);
        };
        add_scaled(e0, -u2s(c2, 2, 3), total_derivative(c2, 1, 2));
        add_scaled(e0, -u2s(c2, 3, 1), total_derivative(c2, 2, 2));
        add_scaled(e0, -u2s(c2, 1, 2), total_derivative(c2, 3, 2));
        e0.parity = Parity::Odd;
        out.D = {v1, v2, v3, e0};
    }

    // third-order system from the lifted odd direction
    const JetContext& c3 = *out.ctx3;
    SuperVectorField W = total_derivative(c3, 0, 3);
    {
        auto add_scaled = [&](SuperVectorField& dst, const SuperPoly& s, const SuperVectorField& src) {
            for (auto& [id, c] : src.coeff) dst.add(id, s * c);
        };
        add_scaled(W, -u2s(c3, 2, 3), total_derivative(c3, 1, 3));
        add_scaled(W, -u2s(c3, 3, 1), total_derivative(c3, 2, 3));
        add_scaled(W, -u2s(c3, 1, 2), total_derivative(c3, 3, 3));
    }
    // vanish the d_{u_{jk}} components on the locus: the 0 < j < k slots
    // solve to u_{0jk} = u_{jk} u_{123}
    std::map<int, SuperPoly> solved;
    for (auto& [j, k] : c3.u2_pairs()) {
        if (j == 0) continue;
        SuperPoly coeff = W.coefficient(c3.u2(j, k).second);
        SuperPoly expect = c3.var(c3.u3(0, j, k).second) - c3.var(c3.u2(j, k).second) * c3.var(c3.u3(1, 2, 3).second);
        if (coeff != expect)
            throw std::logic_error("incidence: unexpected lift coefficient");
        solved[c3.u3(0, j, k).second] = c3.var(c3.u2(j, k).second) * c3.var(c3.u3(1, 2, 3).second);
    }
    std::vector<int> free_ids;
    for (int id = 0; id < c3.vars()->size(); ++id)
        if (!solved.count(id)) free_ids.push_back(id);
    out.system = std::make_shared<PDESystem>(out.ctx3, solved, free_ids);

    // re-substitution: all six lift coefficients vanish on the locus
    for (auto& [j, k] : c3.u2_pairs()) {
        SuperPoly coeff = W.coefficient(c3.u2(j, k).second);
        if (!out.system->reduce(coeff).is_zero())
            throw std::logic_error("incidence: lift coefficients do not vanish on the locus");
    }
    return out;
}

std::vector<std::pair<int, int>> derived_flag(const JetContext& ctx,
                                              const std::vector<SuperVectorField>& gens) {
    const int nv = ctx.vars()->size();
    auto origin_vector = [&](const SuperVectorField& f) {
        std::vector<Scalar> v(static_cast<size_t>(nv));
        for (auto& [id, c] : f.coeff) v[static_cast<size_t>(id)] = c.constant_term();
        return v;
    };
    auto rank_split = [&](const std::vector<SuperVectorField>& fields) {
        std::vector<std::vector<Scalar>> evens, odds;
        for (auto& f : fields)
            (f.parity == Parity::Odd ? odds : evens).push_back(origin_vector(f));
        auto rank_of = [&](std::vector<std::vector<Scalar>>& vecs) {
            if (vecs.empty()) return 0;
            ScalarMat m(static_cast<int>(vecs.size()), nv);
            for (size_t r = 0; r < vecs.size(); ++r)
                for (int c = 0; c < nv; ++c) m.at(static_cast<int>(r), c) = vecs[r][static_cast<size_t>(c)];
            return m.rank();
        };
        return std::pair<int, int>{rank_of(evens), rank_of(odds)};
    };

    std::vector<SuperVectorField> all = gens;
    std::vector<SuperVectorField> layer = gens;
    std::vector<std::pair<int, int>> growth;
    auto prev = rank_split(all);
    growth.push_back(prev);
    for (int step = 0; step < 8; ++step) {
        std::vector<SuperVectorField> next_layer;
        for (auto& a : gens)
            for (auto& b : layer) next_layer.push_back(field_bracket(a, b));
        for (auto& f : next_layer) all.push_back(f);
        auto r = rank_split(all);
        if (r == prev) break;
        growth.push_back({r.first - prev.first, r.second - prev.second});
        prev = r;
        layer = std::move(next_layer);
    }
    return growth;
}

namespace {

// membership of a field in the span (over superfunctions) of the
// order-2 flag frame: verticals d_{u_{jk}}, the twisted odd E0,
// the lifted D~_{x_a}, and d_{u_a} + u_{bc} d_{u_0}. Triangular reduction.
bool in_flag3_span(const JetContext& c2, SuperVectorField v) {
    auto sub_scaled = [&](SuperVectorField& dst, const SuperPoly& s, const SuperVectorField& src) {
        for (auto& [id, c] : src.coeff) dst.add(id, -(s * c));
    };
    // clear x-slots
    SuperVectorField e0 = total_derivative(c2, 0, 2);
    {
        auto add_scaled = [&](SuperVectorField& dst, const SuperPoly& s, const SuperVectorField& src) {
            for (auto& [id, c] : src.coeff) dst.add(id, s * c);
        };
        add_scaled(e0, -u2s(c2, 2, 3), total_derivative(c2, 1, 2));
        add_scaled(e0, -u2s(c2, 3, 1), total_derivative(c2, 2, 2));
        add_scaled(e0, -u2s(c2, 1, 2), total_derivative(c2, 3, 2));
    }
    sub_scaled(v, v.coefficient(c2.x(0)), e0);
    for (int a = 1; a <= 3; ++a) sub_scaled(v, v.coefficient(c2.x(a)), total_derivative(c2, a, 2));
    // clear u_a-slots with d_{u_a} + u_{bc} d_{u_0}
    const int bc[4][2] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
    for (int a = 1; a <= 3; ++a) {
        SuperVectorField w;
        w.vt = c2.vars();
        w.parity = Parity::Odd;
        w.add(c2.u1(a), c2.constant(Scalar(1)));
        w.add(c2.u1(0), u2s(c2, bc[a][0], bc[a][1]));
        sub_scaled(v, v.coefficient(c2.u1(a)), w);
    }
    // vertical directions are free
    for (int id : c2.u2_ids()) v.coeff.erase(id);
    v.coeff.erase(c2.x(0));
    for (int a = 1; a <= 3; ++a) v.coeff.erase(c2.x(a));
    for (int a = 1; a <= 3; ++a) v.coeff.erase(c2.u1(a));
    for (auto& [id, c] : v.coeff)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace

Report verify_flag_growth() {
    Report rep;
    rep.command = "flag-growth";
    IncidencePipeline pipe = build_incidence_pipeline();
    const JetContext& c2 = *pipe.ctx2;

    auto growth = derived_flag(c2, pipe.D);
    std::ostringstream gs;
    for (size_t k = 0; k < growth.size(); ++k) {
        if (k) gs << ",";
        gs << growth[k].first << "|" << growth[k].second;
    }
    rep.add("growth_vector", "3|1,3|3,0|3,0|1,1|0", gs.str());

    // D^2 equals the order-2 Cartan distribution: the brackets stay inside
    // it as a module and reach its full rank at the origin
    {
        std::vector<SuperVectorField> d2 = pipe.D;
        for (auto& a : pipe.D)
            for (auto& b : pipe.D) d2.push_back(field_bracket(a, b));
        bool inside = true;
        for (auto& f : d2)
            if (!cartan_residues(c2, f).in_distribution()) inside = false;
        rep.add_bool("D2_inside_cartan_distribution", inside);
        std::vector<SuperVectorField> cartan;
        for (int i = 0; i < 4; ++i) cartan.push_back(total_derivative(c2, i, 2));
        for (int id : c2.u2_ids()) {
            SuperVectorField v;
            v.vt = c2.vars();
            v.parity = Parity::Even;
            v.add(id, c2.constant(Scalar(1)));
            cartan.push_back(v);
        }
        auto span_dim = [&](std::vector<SuperVectorField>& fs) {
            ScalarMat m(static_cast<int>(fs.size()), c2.vars()->size());
            for (size_t r = 0; r < fs.size(); ++r)
                for (auto& [id, c] : fs[r].coeff)
                    m.at(static_cast<int>(r), id) = c.constant_term();
            return m.rank();
        };
        int rd2 = span_dim(d2), rc = span_dim(cartan);
        rep.add("D2_origin_rank", std::to_string(rc), std::to_string(rd2));
    }

    // the single odd characteristic field of the cube of the flag
    {
        const SuperVectorField& e0 = pipe.D[3];
        // frame of D^3
        std::vector<SuperVectorField> frame;
        for (int id : c2.u2_ids()) {
            SuperVectorField v;
            v.vt = c2.vars();
            v.parity = Parity::Even;
            v.add(id, c2.constant(Scalar(1)));
            frame.push_back(v);
        }
        frame.push_back(e0);
        for (int a = 1; a <= 3; ++a) frame.push_back(total_derivative(c2, a, 2));
        const int bc[4][2] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
        for (int a = 1; a <= 3; ++a) {
            SuperVectorField w;
            w.vt = c2.vars();
            w.parity = Parity::Odd;
            w.add(c2.u1(a), c2.constant(Scalar(1)));
            w.add(c2.u1(0), u2s(c2, bc[a][0], bc[a][1]));
            frame.push_back(w);
        }
        bool char_ok = true;
        for (auto& g : frame)
            if (!in_flag3_span(c2, field_bracket(e0, g))) char_ok = false;
        rep.add_bool("E0_is_cauchy_characteristic_of_D3", char_ok);

        // Residues of all frame brackets modulo the span: a section
        // sum g_i F_i is characteristic iff sum g_i r_{ij} = 0 for all j.
        // The E0 residues vanish identically, so its coefficient is free;
        // certify that no section supported on the other twelve frame
        // fields exists with coefficients of degree <= 2.
        const int n = static_cast<int>(frame.size());
        int e0_index = 6;  // position of e0 in the frame list above
        std::vector<std::vector<std::pair<SuperPoly, SuperPoly>>> res(
            static_cast<size_t>(n),
            std::vector<std::pair<SuperPoly, SuperPoly>>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SuperVectorField br = field_bracket(frame[static_cast<size_t>(i)], frame[static_cast<size_t>(j)]);
                auto sub_scaled = [&](SuperVectorField& dst, const SuperPoly& s,
                                      const SuperVectorField& src) {
                    for (auto& [id, c] : src.coeff) dst.add(id, -(s * c));
                };
                sub_scaled(br, br.coefficient(c2.x(0)), e0);
                for (int a = 1; a <= 3; ++a)
                    sub_scaled(br, br.coefficient(c2.x(a)), total_derivative(c2, a, 2));
                for (int a = 1; a <= 3; ++a) {
                    SuperVectorField w;
                    w.vt = c2.vars();
                    w.parity = Parity::Odd;
                    w.add(c2.u1(a), c2.constant(Scalar(1)));
                    w.add(c2.u1(0), u2s(c2, bc[a][0], bc[a][1]));
                    sub_scaled(br, br.coefficient(c2.u1(a)), w);
                }
                res[static_cast<size_t>(i)][static_cast<size_t>(j)] = {br.coefficient(c2.u()),
                                                                       br.coefficient(c2.u1(0))};
            }
        bool e0_res_zero = true;
        for (int j = 0; j < n; ++j)
            if (!res[static_cast<size_t>(e0_index)][static_cast<size_t>(j)].first.is_zero() ||
                !res[static_cast<size_t>(e0_index)][static_cast<size_t>(j)].second.is_zero())
                e0_res_zero = false;
        rep.add_bool("E0_residues_vanish_identically", e0_res_zero);

        // degree <= 2 coefficient monomials
        std::vector<SuperPoly> monos;
        monos.push_back(c2.constant(Scalar(1)));
        int nv = c2.vars()->size();
        for (int v = 0; v < nv; ++v) monos.push_back(c2.var(v));
        for (int v = 0; v < nv; ++v)
            for (int w = v; w < nv; ++w) {
                SuperPoly p = c2.var(v) * c2.var(w);
                if (!p.is_zero()) monos.push_back(p);
            }
        std::map<Monomial, int> rowdict;
        SparseMat sys;
        std::vector<std::vector<std::pair<int, Scalar>>> cols;
        for (int i = 0; i < n; ++i) {
            if (i == e0_index) continue;
            for (auto& mo : monos) {
                std::vector<std::pair<int, Scalar>> col;
                for (int j = 0; j < n; ++j)
                    for (int comp = 0; comp < 2; ++comp) {
                        const SuperPoly& r = comp == 0 ? res[static_cast<size_t>(i)][static_cast<size_t>(j)].first
                                                       : res[static_cast<size_t>(i)][static_cast<size_t>(j)].second;
                        if (r.is_zero()) continue;
                        SuperPoly prod = mo * r;
                        for (auto& [m, c] : prod.terms()) {
                            Monomial key = m;
                            // tag rows by (j, comp) through disjoint id ranges
                            key.even.push_back({1000 + 2 * j + comp, 1});
                            auto [it, ins] = rowdict.try_emplace(key, static_cast<int>(rowdict.size()));
                            col.push_back({it->second, c});
                        }
                    }
                std::sort(col.begin(), col.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                std::vector<std::pair<int, Scalar>> merged;
                for (auto& [r, c] : col) {
                    if (!merged.empty() && merged.back().first == r) merged.back().second += c;
                    else merged.push_back({r, c});
                }
                merged.erase(std::remove_if(merged.begin(), merged.end(),
                                            [](const auto& p) { return p.second.is_zero(); }),
                             merged.end());
                cols.push_back(std::move(merged));
            }
        }
        // transpose columns into sparse rows
        sys.init(static_cast<int>(rowdict.size()), static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (auto& [r, v] : cols[c]) sys.add(r, static_cast<int>(c), v);
        int rank = sparse_rank(std::move(sys));
        rep.add("characteristic_module_kernel_deg2", "0",
                std::to_string(static_cast<int>(cols.size()) - rank));
    }

    // Cauchy characteristics of the derived square of the order-2 Cartan
    // distribution on the flat context: exactly the verticals
    {
        std::vector<SuperVectorField> c2gens;
        for (int i = 0; i < 4; ++i) c2gens.push_back(total_derivative(c2, i, 2));
        for (int i = 0; i < 4; ++i) {
            SuperVectorField v;
            v.vt = c2.vars();
            v.parity = Parity::Odd;
            v.add(c2.u1(i), c2.constant(Scalar(1)));
            c2gens.push_back(v);
        }
        for (int id : c2.u2_ids()) {
            SuperVectorField v;
            v.vt = c2.vars();
            v.parity = Parity::Even;
            v.add(id, c2.constant(Scalar(1)));
            c2gens.push_back(v);
        }
        // membership in C~^2 means: d_u residue vanishes after clearing x-slots
        auto in_c2sq = [&](SuperVectorField v) {
            auto sub_scaled = [&](SuperVectorField& dst, const SuperPoly& s,
                                  const SuperVectorField& src) {
                for (auto& [id, c] : src.coeff) dst.add(id, -(s * c));
            };
            for (int i = 0; i < 4; ++i)
                sub_scaled(v, v.coefficient(c2.x(i)), total_derivative(c2, i, 2));
            return v.coefficient(c2.u()).is_zero();
        };
        bool verticals_char = true;
        for (int id : c2.u2_ids()) {
            SuperVectorField v;
            v.vt = c2.vars();
            v.parity = Parity::Even;
            v.add(id, c2.constant(Scalar(1)));
            for (auto& g : c2gens)
                if (!in_c2sq(field_bracket(v, g))) verticals_char = false;
        }
        rep.add_bool("verticals_are_characteristics_of_C2sq", verticals_char);

        // Levi form of C~^2 valued in d_u: radical must be the (6|0) verticals
        const int n = static_cast<int>(c2gens.size());
        ScalarMat levi(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SuperVectorField br = field_bracket(c2gens[static_cast<size_t>(i)], c2gens[static_cast<size_t>(j)]);
                auto sub_scaled = [&](SuperVectorField& dst, const SuperPoly& s,
                                      const SuperVectorField& src) {
                    for (auto& [id, c] : src.coeff) dst.add(id, -(s * c));
                };
                for (int t = 0; t < 4; ++t)
                    sub_scaled(br, br.coefficient(c2.x(t)), total_derivative(c2, t, 2));
                levi.at(i, j) = br.coefficient(c2.u()).constant_term();
            }
        RowEchelon rl(levi);
        auto rad = rl.kernel_basis();
        int rad_even = 0, rad_odd = 0;
        for (auto& v : rad) {
            bool e = false, o = false;
            for (int i = 0; i < n; ++i)
                if (!v[static_cast<size_t>(i)].is_zero())
                    (c2gens[static_cast<size_t>(i)].parity == Parity::Odd ? o : e) = true;
            if (o && !e) ++rad_odd;
            else if (e && !o) ++rad_even;
        }
        rep.add("cartan2_characteristic_dims", "6|0",
                std::to_string(rad_even) + "|" + std::to_string(rad_odd));
    }
    return rep;
}

// --- third-order verification -------------------------------------------------

Report verify_third_order(bool parallel) {
    Report rep;
    rep.command = "verify-3pde";
    IncidencePipeline pipe = build_incidence_pipeline();
    const JetContext& c3 = *pipe.ctx3;

    rep.add("equation_count", "3", std::to_string(pipe.system->solved().size()));
    bool eq_ok = true;
    for (auto& [j, k] : c3.u2_pairs()) {
        if (j == 0) continue;
        auto it = pipe.system->solved().find(c3.u3(0, j, k).second);
        SuperPoly expect = c3.var(c3.u2(j, k).second) * c3.var(c3.u3(1, 2, 3).second);
        if (it == pipe.system->solved().end() || it->second != expect) eq_ok = false;
    }
    rep.add_bool("equations_are_u0ab_eq_uab_u123", eq_ok);

    auto gens = odd_symmetry_generators(c3);
    rep.add("generator_count", "40", std::to_string(gens.size()));
    std::vector<int> ok(gens.size(), 0);
    parallel_for(static_cast<long>(gens.size()), parallel, [&](long k) {
        ok[static_cast<size_t>(k)] = is_symmetry(*pipe.system, gens[static_cast<size_t>(k)].second).ok ? 1 : 0;
    });
    int pass = 0;
    for (int v : ok) pass += v;
    rep.add("symmetries_certified", "40", std::to_string(pass));

    SymmetryBasis basis = assemble_symmetry_algebra(pipe.ctx3, gens, &rep, parallel);
    auto [e, o] = basis.super_dim();
    rep.add("super_dim", "24|16", std::to_string(e) + "|" + std::to_string(o));
    std::ostringstream dims;
    for (long d = -2; d <= 2; ++d) {
        auto [de, dodd] = basis.graded_dim(d);
        if (d > -2) dims << ",";
        dims << de << "|" << dodd;
    }
    rep.add("graded_dims", "1|0,0|8,22|0,0|8,1|0", dims.str());

    // negative control: a generic quadratic is not a symmetry
    SuperPoly bad = c3.var(c3.u()) * c3.var(c3.u());
    rep.add_bool("uu_is_not_a_symmetry", !is_symmetry(*pipe.system, bad).ok);
    return rep;
}

// --- matrix-exponential reproduction of the spin orbit -------------------------

namespace {

// the lowering part of the spin action as an 8x8 polynomial matrix in the
// second-order jet coordinates; each root vector from the Clifford model is
// rescaled so its defining slot is exactly +-1
std::vector<std::vector<SuperPoly>> incidence_nilpotent(const JetContext& c2) {
    const CliffordModel& cl = clifford();
    const VarTablePtr& vt = c2.vars();

    // symbol -> (7x7 slot where it appears with +1 in the split frame,
    //            list of (spin slot, sign) where its tilde appears)
    struct SymbolData {
        int r7, c7;
        std::vector<std::tuple<int, int, int>> spin;  // (row, col, sign)
    };
    // the six lower symbols that receive jet coordinates
    std::map<std::string, SymbolData> syms;
    syms["b111"] = {3, 0, {{1, 0, -1}, {4, 5, 1}, {6, 3, -1}, {7, 2, 1}}};
    syms["b011"] = {3, 1, {{2, 0, -1}, {4, 6, 1}, {5, 3, 1}, {7, 1, -1}}};
    syms["b001"] = {3, 2, {{3, 0, -1}, {4, 7, 1}, {5, 2, -1}, {6, 1, 1}}};
    syms["b012"] = {4, 1, {{4, 1, -1}, {5, 0, 1}}};
    syms["b112"] = {4, 0, {{4, 2, -1}, {6, 0, 1}}};
    syms["b122"] = {5, 0, {{4, 3, -1}, {7, 0, 1}}};

    std::map<std::string, SuperPoly> coord;
    coord["b111"] = u2s(c2, 2, 3);
    coord["b011"] = u2s(c2, 3, 1);
    coord["b001"] = u2s(c2, 1, 2);
    coord["b012"] = u2s(c2, 0, 1);
    coord["b112"] = u2s(c2, 0, 2);
    coord["b122"] = u2s(c2, 0, 3);

    std::vector<std::vector<SuperPoly>> N(8, std::vector<SuperPoly>(8, SuperPoly(vt)));
    for (auto& [name, sd] : syms) {
        ScalarMat x(7, 7);
        x.at(sd.r7, sd.c7) = Scalar(1);
        // complete to an so(V) matrix: the split-frame pattern pairs the
        // slot (r,c) with (6-c, 6-r) carrying the opposite sign
        x.at(6 - sd.c7, 6 - sd.r7) = Scalar(-1);
        ScalarMat sp = cl.spin_rep(x);
        // normalization from the first tilde slot
        auto [r0, c0, s0] = sd.spin[0];
        Scalar kappa = Scalar(s0) / sp.at(r0, c0);
        // consistency: all tilde slots carry the same factor, others vanish
        ScalarMat scaled = kappa * sp;
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                Scalar expect;
                for (auto& [rr, cc, ss] : sd.spin)
                    if (rr == r && cc == c) expect = Scalar(ss);
                if (scaled.at(r, c) != expect)
                    throw std::logic_error("incidence_nilpotent: tilde factors inconsistent");
            }
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                if (!scaled.at(r, c).is_zero()) N[static_cast<size_t>(r)][static_cast<size_t>(c)] +=
                    scaled.at(r, c) * coord.at(name);
    }
    return N;
}

std::vector<std::vector<SuperPoly>> poly_mat_exp(const std::vector<std::vector<SuperPoly>>& n) {
    size_t dim = n.size();
    const VarTablePtr& vt = n[0][0].table();
    std::vector<std::vector<SuperPoly>> acc(dim, std::vector<SuperPoly>(dim, SuperPoly(vt)));
    std::vector<std::vector<SuperPoly>> pw = acc;
    for (size_t i = 0; i < dim; ++i) {
        acc[i][i] = SuperPoly::constant(vt, Scalar(1));
        pw[i][i] = SuperPoly::constant(vt, Scalar(1));
    }
    mpz_class fact = 1;
    for (int k = 1; k <= static_cast<int>(dim); ++k) {
        std::vector<std::vector<SuperPoly>> nx(dim, std::vector<SuperPoly>(dim, SuperPoly(vt)));
        bool zero = true;
        for (size_t r = 0; r < dim; ++r)
            for (size_t m = 0; m < dim; ++m) {
                if (pw[r][m].is_zero()) continue;
                for (size_t c = 0; c < dim; ++c)
                    if (!n[m][c].is_zero()) {
                        nx[r][c] += pw[r][m] * n[m][c];
                    }
            }
        for (auto& row : nx)
            for (auto& p : row)
                if (!p.is_zero()) zero = false;
        if (zero) break;
        pw = nx;
        fact *= k;
        Scalar inv(mpq_class(1, fact));
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                if (!pw[r][c].is_zero()) acc[r][c] += inv * pw[r][c];
    }
    return acc;
}

} // namespace

Report verify_quartic_symmetries(bool parallel) {
    Report rep;
    rep.command = "quartic";
    auto ctx1 = std::make_shared<JetContext>(
        std::vector<Parity>{Parity::Odd, Parity::Odd, Parity::Odd, Parity::Odd}, 1);
    // generators live on first-order coordinates shared with the order-3 table
    auto ctx3 = odd_ctx(3);
    auto gens3 = odd_symmetry_generators(*ctx3);

    // transport each generator to the first-order table by name
    std::vector<std::pair<std::string, SuperPoly>> gens;
    for (auto& [label, g] : gens3) {
        std::map<int, SuperPoly> to1;
        for (int i = 0; i < 4; ++i) {
            to1[ctx3->x(i)] = ctx1->var(ctx1->x(i));
            to1[ctx3->u1(i)] = ctx1->var(ctx1->u1(i));
        }
        to1[ctx3->u()] = ctx1->var(ctx1->u());
        gens.push_back({label, substitute_into(g, to1, ctx1->vars())});
    }

    std::vector<int> ok(gens.size(), 0);
    std::vector<int> contact(gens.size(), 0);
    parallel_for(static_cast<long>(gens.size()), parallel, [&](long k) {
        QuarticSymmetry q = quartic_symmetry_check(*ctx1, gens[static_cast<size_t>(k)].second);
        contact[static_cast<size_t>(k)] = q.contact ? 1 : 0;
        ok[static_cast<size_t>(k)] = q.preserves ? 1 : 0;
    });
    int pass = 0, cont = 0;
    for (size_t k = 0; k < gens.size(); ++k) {
        pass += ok[k];
        cont += contact[k];
    }
    rep.add("contact_fields", "40", std::to_string(cont));
    rep.add("quartic_symmetries", "40", std::to_string(pass));

    // examples: f = 1 has factor 0, f = Z has a constant factor
    QuarticSymmetry q1 = quartic_symmetry_check(*ctx1, ctx1->constant(Scalar(1)));
    rep.add_bool("constant_is_symmetry_with_zero_factor", q1.preserves && q1.factor.is_zero());
    SuperPoly Z = Scalar(2) * ctx1->var(ctx1->u());
    for (int i = 0; i < 4; ++i) Z -= ctx1->var(ctx1->x(i)) * ctx1->var(ctx1->u1(i));
    QuarticSymmetry qz = quartic_symmetry_check(*ctx1, Z);
    rep.add_bool("grading_function_scales_quartic",
                 qz.preserves && !qz.factor.is_zero() && qz.factor.degree() == 0);

    // negative control
    QuarticSymmetry qb = quartic_symmetry_check(*ctx1, ctx1->var(ctx1->u()) * ctx1->var(ctx1->u()));
    rep.add_bool("uu_fails_quartic_check", !qb.preserves);

    // the framed convention is pinned by agreement with tangency on the
    // third-order system: both certifications accept and reject together
    {
        IncidencePipeline pipe = build_incidence_pipeline();
        std::vector<SuperPoly> candidates;
        for (size_t k = 0; k < gens.size(); k += 7) candidates.push_back(gens[k].second);
        candidates.push_back(gens[2].second + gens[6].second);  // two degree-one rows
        // perturbed and generic rejects
        auto Xc = [&](int i) { return ctx1->var(ctx1->x(i)); };
        auto Uc = [&](int i) { return ctx1->var(ctx1->u1(i)); };
        candidates.push_back(gens[0].second + Xc(0) * Xc(1));
        candidates.push_back(Uc(0) * Uc(1) + Xc(2) * Uc(3));
        candidates.push_back(ctx1->var(ctx1->u()) * Uc(0));
        candidates.push_back(Xc(0) * Xc(1) * Xc(2) * Uc(0));
        const JetContext& pc3 = *pipe.ctx3;
        bool agree = true;
        for (auto& f : candidates) {
            std::map<int, SuperPoly> to3;
            for (int i = 0; i < 4; ++i) {
                to3[ctx1->x(i)] = pc3.var(pc3.x(i));
                to3[ctx1->u1(i)] = pc3.var(pc3.u1(i));
            }
            to3[ctx1->u()] = pc3.var(pc3.u());
            SuperPoly f3 = substitute_into(f, to3, pc3.vars());
            bool tangency = is_symmetry(*pipe.system, f3).ok;
            bool conformal = quartic_symmetry_check(*ctx1, f).preserves;
            if (tangency != conformal) agree = false;
        }
        rep.add_bool("quartic_check_agrees_with_tangency", agree);
    }
    return rep;
}

QuarticSymmetry quartic_symmetry_check(const JetContext& ctx1, const SuperPoly& f) {
    QuarticSymmetry out;
    SuperVectorField X = contact_field(ctx1, f);

    // frame: Y_0..3 = total derivatives, Y_4..7 = verticals d_{u_i}
    std::vector<SuperVectorField> Y;
    for (int i = 0; i < 4; ++i) Y.push_back(total_derivative(ctx1, i, 1));
    for (int i = 0; i < 4; ++i) {
        SuperVectorField v;
        v.vt = ctx1.vars();
        v.parity = Parity::Odd;
        v.add(ctx1.u1(i), ctx1.constant(Scalar(1)));
        Y.push_back(v);
    }

    // [X, Y_a] = sum_b c_a^b Y_b with vanishing residue along d_u
    std::vector<std::array<SuperPoly, 8>> c(8);
    out.contact = true;
    for (int a = 0; a < 8; ++a) {
        SuperVectorField br = field_bracket(X, Y[static_cast<size_t>(a)]);
        for (int b = 0; b < 4; ++b) c[static_cast<size_t>(a)][static_cast<size_t>(b)] = br.coefficient(ctx1.x(b));
        for (int b = 0; b < 4; ++b) c[static_cast<size_t>(a)][static_cast<size_t>(4 + b)] = br.coefficient(ctx1.u1(b));
        SuperPoly reeb = br.coefficient(ctx1.u());
        for (int b = 0; b < 4; ++b)
            reeb -= c[static_cast<size_t>(a)][static_cast<size_t>(b)] * ctx1.var(ctx1.u1(b));
        if (!reeb.is_zero()) out.contact = false;
    }
    if (!out.contact) return out;

    // constant quartic components in the flat coframe
    QuarticTensor q = clifford().cayley_quartic();
    auto q_eval = [&](int i0, int i1, int i2, int i3) -> Scalar {
        int idx[4] = {i0, i1, i2, i3};
        int sign = 1;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                if (idx[a] == idx[b]) return Scalar();
                if (idx[a] > idx[b]) { std::swap(idx[a], idx[b]); sign = -sign; }
            }
        uint8_t mask = static_cast<uint8_t>((1u << idx[0]) | (1u << idx[1]) | (1u << idx[2]) | (1u << idx[3]));
        Scalar v = q.component(mask);
        return sign < 0 ? -v : v;
    };

    // framed Lie derivative: components constant, so only insertion terms
    std::map<uint8_t, SuperPoly> lie;
    for (uint8_t mask = 0; mask < 255; ++mask) {
        if (__builtin_popcount(mask) != 4) continue;
        int I[4], t = 0;
        for (int b = 0; b < 8; ++b)
            if (mask & (1u << b)) I[t++] = b;
        SuperPoly v(ctx1.vars());
        for (int pos = 0; pos < 4; ++pos)
            for (int e = 0; e < 8; ++e) {
                const SuperPoly& ce = c[static_cast<size_t>(I[pos])][static_cast<size_t>(e)];
                if (ce.is_zero()) continue;
                int idx[4] = {I[0], I[1], I[2], I[3]};
                idx[pos] = e;
                Scalar qv = q_eval(idx[0], idx[1], idx[2], idx[3]);
                if (!qv.is_zero()) v -= qv * ce;
            }
        if (!v.is_zero()) lie[mask] = v;
    }

    // conformal factor read off the unit component, then exact comparison
    uint8_t unit = (1u << 0) | (1u << 1) | (1u << 4) | (1u << 5);
    SuperPoly mu = lie.count(unit) ? lie.at(unit) : SuperPoly(ctx1.vars());
    out.preserves = true;
    for (uint8_t mask = 0; mask < 255; ++mask) {
        if (__builtin_popcount(mask) != 4) continue;
        SuperPoly want = q.component(mask) * mu;
        SuperPoly got = lie.count(mask) ? lie.at(mask) : SuperPoly(ctx1.vars());
        if (got != want) out.preserves = false;
    }
    out.factor = mu;
    return out;
}

// --- isomorphism witness --------------------------------------------------------

Report isomorphism_witness() {
    Report rep;
    rep.command = "isomorphism-witness";
    const F4Algebra& F = f4();
    const SuperLieAlgebra& alg = F.algebra();
    auto ctx = odd_ctx(3);
    const VarTablePtr& vt = ctx->vars();
    auto gens = odd_symmetry_generators(*ctx);

    SuperPoly g2row(vt);
    for (auto& [label, g] : gens)
        if (label == "g2") g2row = g;

    auto Xv = [&](int i) { return SuperPoly::var(vt, ctx->x(i)); };
    auto Uv = [&](int i) { return SuperPoly::var(vt, ctx->u1(i)); };
    auto LB = [&](const SuperPoly& a, const SuperPoly& b) { return lagrange_bracket(*ctx, a, b); };

    // candidate identifications: spinor block signs and the g_2 scale eps
    struct Candidate {
        int sx, su, eps;
    };
    std::optional<Candidate> found;
    std::vector<SuperPoly> phi(static_cast<size_t>(alg.dim()), SuperPoly(vt));

    for (int sx : {1, -1})
        for (int su : {1, -1})
            for (int eps : {1, -1}) {
                // phi on g_{-1} and g_{-2}: the pairing bracket fixes phi(one)
                std::vector<SuperPoly> p(static_cast<size_t>(alg.dim()), SuperPoly(vt));
                for (int a = 0; a < 4; ++a) {
                    p[static_cast<size_t>(F.idx_spinor(a))] = Scalar(sx) * Xv(a);
                    p[static_cast<size_t>(F.idx_spinor(4 + a))] = Scalar(su) * Uv(a);
                }
                SuperPoly pone = LB(p[static_cast<size_t>(F.idx_spinor(0))],
                                    p[static_cast<size_t>(F.idx_spinor(4))]);
                if (pone.is_zero()) continue;
                p[static_cast<size_t>(F.idx_one())] = pone;  // [s,t] = <s,t> one with <phi0,psi0> = 1
                p[static_cast<size_t>(F.idx_one_dual())] = Scalar(eps) * g2row;
                for (int a = 0; a < 8; ++a)
                    p[static_cast<size_t>(F.idx_spinor_dual(a))] =
                        LB(p[static_cast<size_t>(F.idx_one_dual())], p[static_cast<size_t>(F.idx_spinor(a))]);

                // solve for phi on g_0 from [s_a+, s_b] structure constants
                ScalarMat M(64, 22);
                std::vector<SuperPoly> rhs;
                for (int a = 0; a < 8; ++a)
                    for (int b = 0; b < 8; ++b) {
                        int row = a * 8 + b;
                        for (auto& [k, cc] : alg.bracket(F.idx_spinor_dual(a), F.idx_spinor(b))) {
                            if (k >= F.idx_so(0) && k < F.idx_so(0) + 21) M.at(row, k - F.idx_so(0)) = cc;
                            else if (k == F.idx_Z()) M.at(row, 21) = cc;
                        }
                        rhs.push_back(LB(p[static_cast<size_t>(F.idx_spinor_dual(a))],
                                         p[static_cast<size_t>(F.idx_spinor(b))]));
                    }
                RowEchelon re(M);
                if (re.rank() != 22) continue;
                // pivot rows give each unknown as a combination of the rhs
                std::vector<SuperPoly> unknowns(22, SuperPoly(vt));
                bool consistent = true;
                for (int r = 0; r < re.rank(); ++r) {
                    SuperPoly val(vt);
                    for (int j = 0; j < 64; ++j)
                        if (!re.transform(r, j).is_zero()) val += re.transform(r, j) * rhs[static_cast<size_t>(j)];
                    unknowns[static_cast<size_t>(re.pivot_cols()[static_cast<size_t>(r)])] = val;
                }
                for (int r = re.rank(); r < 64; ++r) {
                    SuperPoly val(vt);
                    for (int j = 0; j < 64; ++j)
                        if (!re.transform(r, j).is_zero()) val += re.transform(r, j) * rhs[static_cast<size_t>(j)];
                    if (!val.is_zero()) consistent = false;
                }
                if (!consistent) continue;
                for (int k = 0; k < 21; ++k) p[static_cast<size_t>(F.idx_so(k))] = unknowns[static_cast<size_t>(k)];
                p[static_cast<size_t>(F.idx_Z())] = unknowns[21];

                // full homomorphism check
                bool homo = true;
                for (int i = 0; i < alg.dim() && homo; ++i)
                    for (int j = 0; j < alg.dim(); ++j) {
                        SuperPoly lhs = LB(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
                        SuperPoly want(vt);
                        for (auto& [k, cc] : alg.bracket(i, j)) want += cc * p[static_cast<size_t>(k)];
                        if (lhs != want) { homo = false; break; }
                    }
                if (homo) {
                    found = Candidate{sx, su, eps};
                    phi = p;
                    break;
                }
            }

    rep.add_bool("homomorphism_witness_found", found.has_value());
    if (!found) return rep;
    std::ostringstream ident;
    ident << "sx=" << found->sx << ",su=" << found->su << ",eps=" << found->eps;
    rep.add("identification", ident.str(), ident.str());

    // linearity: phi is injective on the basis span (rank 40)
    {
        std::map<Monomial, int> dict;
        for (auto& p : phi)
            for (auto& [m, c] : p.terms()) dict.try_emplace(m, static_cast<int>(dict.size()));
        ScalarMat span(static_cast<int>(dict.size()), alg.dim());
        for (int k = 0; k < alg.dim(); ++k)
            for (auto& [m, c] : phi[static_cast<size_t>(k)].terms())
                span.at(dict.at(m), k) = c;
        rep.add("phi_rank", "40", std::to_string(span.rank()));
    }

    // phi([one+, one]) = -(2u - x^i u_i)
    SuperPoly Z = Scalar(2) * SuperPoly::var(vt, ctx->u());
    for (int i = 0; i < 4; ++i) Z -= Xv(i) * Uv(i);
    SuperPoly lhs = LB(phi[static_cast<size_t>(F.idx_one_dual())], phi[static_cast<size_t>(F.idx_one())]);
    rep.add_bool("bracket_onedual_one_maps_to_minus_grading_function", lhs == -Z);
    rep.add_bool("phi_Z_is_grading_function", phi[static_cast<size_t>(F.idx_Z())] == Z);

    // the tabulated degree-one rows are the daggers of the coordinates
    std::vector<SuperPoly> coords;
    for (int i = 0; i < 4; ++i) coords.push_back(Xv(i));
    for (int i = 0; i < 4; ++i) coords.push_back(Uv(i));
    std::vector<SuperPoly> g1rows;
    for (auto& [label, g] : gens)
        if (label.rfind("g1_", 0) == 0) g1rows.push_back(g);
    bool dagger_rows = g1rows.size() == 8;
    for (int i = 0; i < 8 && dagger_rows; ++i)
        if (LB(g2row, coords[static_cast<size_t>(i)]) != g1rows[static_cast<size_t>(i)]) dagger_rows = false;
    rep.add_bool("g1_rows_are_daggered_coordinates", dagger_rows);

    // omega^(2) matrices computed inside the realization:
    //   omega2(i,j) = 3([d_i, c_j] + (1/2)[c_i, c_j] Z)
    auto omega2_table = [&](int i, int j) {
        SuperPoly pairing = LB(coords[static_cast<size_t>(i)], coords[static_cast<size_t>(j)]);
        return Scalar(3) * (LB(g1rows[static_cast<size_t>(i)], coords[static_cast<size_t>(j)]) +
                            Scalar(1, 2) * (pairing * Z));
    };

    bool xx_ok = true, uu_ok = true, xu_ok = true;
    {
        SuperPoly fix[4][4];
        fix[0][1] = Scalar(2) * (Xv(0) * Xv(1));
        fix[0][2] = Scalar(2) * (Xv(0) * Xv(2));
        fix[0][3] = Scalar(2) * (Xv(0) * Xv(3));
        fix[1][2] = Uv(3) * Xv(0) + Xv(1) * Xv(2);
        fix[1][3] = -(Uv(2) * Xv(0)) - Xv(3) * Xv(1);
        fix[2][3] = Uv(1) * Xv(0) + Xv(2) * Xv(3);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                SuperPoly want(vt);
                if (i < j) want = fix[i][j];
                else if (j < i) want = -fix[j][i];
                if (omega2_table(i, j) != want) xx_ok = false;
            }
    }
    {
        SuperPoly fix[4][4];
        fix[0][1] = Scalar(2) * (Uv(0) * Uv(1));
        fix[0][2] = Scalar(2) * (Uv(0) * Uv(2));
        fix[0][3] = Scalar(2) * (Uv(0) * Uv(3));
        fix[1][2] = Xv(3) * Uv(0) + Uv(1) * Uv(2);
        fix[1][3] = -(Xv(2) * Uv(0)) - Uv(3) * Uv(1);
        fix[2][3] = Xv(1) * Uv(0) + Uv(2) * Uv(3);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                SuperPoly want(vt);
                if (i < j) want = fix[i][j];
                else if (j < i) want = -fix[j][i];
                if (omega2_table(4 + i, 4 + j) != want) uu_ok = false;
            }
    }
    {
        SuperPoly off[4][4];
        for (auto& row : off)
            for (auto& p : row) p = SuperPoly(vt);
        off[0][1] = -(Uv(1) * Xv(0)) - Xv(2) * Xv(3);
        off[0][2] = -(Uv(2) * Xv(0)) + Xv(1) * Xv(3);
        off[0][3] = -(Uv(3) * Xv(0)) - Xv(1) * Xv(2);
        off[1][0] = -(Uv(0) * Xv(1)) + Uv(2) * Uv(3);
        off[1][2] = Scalar(-2) * (Uv(2) * Xv(1));
        off[1][3] = Scalar(-2) * (Uv(3) * Xv(1));
        off[2][0] = -(Uv(0) * Xv(2)) - Uv(1) * Uv(3);
        off[2][1] = Scalar(-2) * (Uv(1) * Xv(2));
        off[2][3] = Scalar(-2) * (Uv(3) * Xv(2));
        off[3][0] = -(Uv(0) * Xv(3)) + Uv(1) * Uv(2);
        off[3][1] = Scalar(-2) * (Uv(1) * Xv(3));
        off[3][2] = Scalar(-2) * (Uv(2) * Xv(3));
        auto diag = [&](int i) {
            SuperPoly d(vt);
            for (int k = 0; k < 4; ++k) {
                Scalar coef = (k == i) ? Scalar(-3, 2) : ((k == 0 || i == 0) ? Scalar(-1, 2) : Scalar(1, 2));
                d += coef * (Uv(k) * Xv(k));
            }
            return d;
        };
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                SuperPoly want = off[i][j];
                if (i == j) want += diag(i);
                if (omega2_table(i, 4 + j) != want) xu_ok = false;
            }
    }
    rep.add_bool("omega2_xx_matrix", xx_ok);
    rep.add_bool("omega2_uu_matrix", uu_ok);
    rep.add_bool("omega2_xu_matrix", xu_ok);

    // cross-link: the abstract bivector brackets map to the realization
    // tables through phi with the recorded scale phi(one) = pairing constant
    Scalar cone = LB(phi[static_cast<size_t>(F.idx_spinor(0))], phi[static_cast<size_t>(F.idx_spinor(4))])
                      .constant_term();
    bool crosslink = true;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Multivector w = clifford().omega_p(2, clifford().basis_spinor(i), clifford().basis_spinor(j));
            auto cc = clifford().so_coordinates(clifford().bivector_matrix(w));
            SuperPoly abstract(vt);
            for (int k = 0; k < 21; ++k)
                if (!cc[static_cast<size_t>(k)].is_zero())
                    abstract += cc[static_cast<size_t>(k)] * phi[static_cast<size_t>(F.idx_so(k))];
            if (cone * abstract != omega2_table(i, j)) crosslink = false;
        }
    rep.add_bool("abstract_tables_match_up_to_recorded_scale", crosslink);
    rep.add("phi_one_constant", "-1", cone.str());
    return rep;
}

// --- exponential matrix fixture ---------------------------------------------------

Report verify_exponential_matrix() {
    Report rep;
    rep.command = "exp-matrix";
    auto c2p = odd_ctx(2);
    const JetContext& c2 = *c2p;
    auto N = incidence_nilpotent(c2);
    auto E = poly_mat_exp(N);

    auto Uc = [&](int i, int j) { return u2s(c2, i, j); };
    const VarTablePtr& vt = c2.vars();
    std::vector<std::vector<SuperPoly>> F(8, std::vector<SuperPoly>(8, SuperPoly(vt)));
    for (int i = 0; i < 8; ++i) F[static_cast<size_t>(i)][static_cast<size_t>(i)] = c2.constant(Scalar(1));
    F[1][0] = -Uc(2, 3);
    F[2][0] = -Uc(3, 1);
    F[3][0] = -Uc(1, 2);
    F[4][0] = Uc(0, 1) * Uc(2, 3) + Uc(0, 2) * Uc(3, 1) + Uc(0, 3) * Uc(1, 2);
    F[4][1] = -Uc(0, 1);
    F[4][2] = -Uc(0, 2);
    F[4][3] = -Uc(0, 3);
    F[4][5] = Uc(2, 3);
    F[4][6] = Uc(3, 1);
    F[4][7] = Uc(1, 2);
    F[5][0] = Uc(0, 1);
    F[5][2] = -Uc(1, 2);
    F[5][3] = Uc(3, 1);
    F[6][0] = Uc(0, 2);
    F[6][1] = Uc(1, 2);
    F[6][3] = -Uc(2, 3);
    F[7][0] = Uc(0, 3);
    F[7][1] = -Uc(3, 1);
    F[7][2] = Uc(2, 3);
    bool match = true;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            if (E[static_cast<size_t>(r)][static_cast<size_t>(c)] != F[static_cast<size_t>(r)][static_cast<size_t>(c)])
                match = false;
    rep.add_bool("exponential_matches_tabulated_matrix", match);

    // the three vertical derivations reproduce columns 2..4: V_k(col0) = -col_k
    std::vector<SuperVectorField> verts;
    {
        SuperVectorField v1;
        v1.vt = vt;
        v1.parity = Parity::Even;
        v1.add(c2.u2(2, 3).second, c2.constant(Scalar(1)));
        v1.add(c2.u2(0, 2).second, -Uc(1, 2));
        v1.add(c2.u2(0, 3).second, Uc(3, 1));
        SuperVectorField v2;
        v2.vt = vt;
        v2.parity = Parity::Even;
        v2.add(c2.u2(1, 3).second, Scalar(-1) * c2.constant(Scalar(1)));
        v2.add(c2.u2(0, 3).second, -Uc(2, 3));
        v2.add(c2.u2(0, 1).second, Uc(1, 2));
        SuperVectorField v3;
        v3.vt = vt;
        v3.parity = Parity::Even;
        v3.add(c2.u2(1, 2).second, c2.constant(Scalar(1)));
        v3.add(c2.u2(0, 1).second, -Uc(3, 1));
        v3.add(c2.u2(0, 2).second, Uc(2, 3));
        verts = {v1, v2, v3};
    }
    bool lvert_ok = true;
    for (int k = 1; k <= 3; ++k)
        for (int r = 0; r < 8; ++r) {
            SuperPoly got = verts[static_cast<size_t>(k - 1)].apply(E[static_cast<size_t>(r)][0]);
            if (got != -E[static_cast<size_t>(r)][static_cast<size_t>(k)]) lvert_ok = false;
        }
    rep.add_bool("vertical_derivations_generate_columns", lvert_ok);

    // the lifted odd direction: frame combination of column 0 equals the
    // twisted combination of lifted total derivatives
    {
        SuperVectorField lhs;
        lhs.vt = vt;
        lhs.parity = Parity::Odd;
        for (int i = 0; i < 4; ++i) {
            SuperVectorField d1;
            d1.vt = vt;
            d1.parity = Parity::Odd;
            d1.add(c2.x(i), c2.constant(Scalar(1)));
            d1.add(c2.u(), c2.var(c2.u1(i)));
            for (auto& [id, c] : d1.coeff) lhs.add(id, E[static_cast<size_t>(i)][0] * c);
        }
        for (int i = 0; i < 4; ++i) lhs.add(c2.u1(i), E[static_cast<size_t>(4 + i)][0]);
        SuperVectorField rhs = total_derivative(c2, 0, 2);
        auto add_scaled = [&](SuperVectorField& dst, const SuperPoly& s, const SuperVectorField& src) {
            for (auto& [id, c] : src.coeff) dst.add(id, s * c);
        };
        add_scaled(rhs, -Uc(2, 3), total_derivative(c2, 1, 2));
        add_scaled(rhs, -Uc(3, 1), total_derivative(c2, 2, 2));
        add_scaled(rhs, -Uc(1, 2), total_derivative(c2, 3, 2));
        bool same = true;
        for (auto& [id, c] : lhs.coeff)
            if (c != rhs.coefficient(id)) same = false;
        for (auto& [id, c] : rhs.coeff)
            if (c != lhs.coefficient(id)) same = false;
        rep.add_bool("lifted_odd_direction_identity", same);
    }
    return rep;
}

// --- solution space -----------------------------------------------------------

Report verify_solution_space() {
    Report rep;
    rep.command = "solution-space";

    // one table holding the odd coordinates and the ansatz parameters
    auto table = std::make_shared<VarTable>();
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) x[static_cast<size_t>(i)] = table->add("x" + std::to_string(i), Parity::Odd);
    int lam = table->add("lam", Parity::Even);
    std::map<std::pair<int, int>, int> lam2;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            lam2[{i, j}] = table->add("lam" + std::to_string(i) + std::to_string(j), Parity::Even);
    int lam4 = table->add("lam0123", Parity::Even);
    std::array<int, 4> th{};
    for (int i = 0; i < 4; ++i) th[static_cast<size_t>(i)] = table->add("th" + std::to_string(i), Parity::Odd);
    std::map<std::array<int, 3>, int> th3;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                th3[{i, j, k}] = table->add("th" + std::to_string(i) + std::to_string(j) + std::to_string(k),
                                            Parity::Odd);
    VarTablePtr vt = table;
    auto V = [&](int id) { return SuperPoly::var(vt, id); };

    SuperPoly u = V(lam);
    for (auto& [ij, id] : lam2) u += V(id) * V(x[static_cast<size_t>(ij.first)]) * V(x[static_cast<size_t>(ij.second)]);
    u += V(lam4) * V(x[0]) * V(x[1]) * V(x[2]) * V(x[3]);
    for (int i = 0; i < 4; ++i) u += V(th[static_cast<size_t>(i)]) * V(x[static_cast<size_t>(i)]);
    for (auto& [ijk, id] : th3)
        u += V(id) * V(x[static_cast<size_t>(ijk[0])]) * V(x[static_cast<size_t>(ijk[1])]) *
             V(x[static_cast<size_t>(ijk[2])]);

    auto d = [&](const SuperPoly& p, int i) { return partial(p, x[static_cast<size_t>(i)]); };
    auto u3 = [&](int i, int j, int k) { return d(d(d(u, k), j), i); };
    auto u2 = [&](int i, int j) { return d(d(u, j), i); };

    // equations u_{0ab} - u_{ab} u_{123} as polynomials in x and parameters
    std::vector<SuperPoly> eqs;
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b) eqs.push_back(u3(0, a, b) - u2(a, b) * u3(1, 2, 3));

    // coefficient relations over the x-monomials
    std::vector<SuperPoly> relations;
    for (auto& e : eqs) {
        std::map<uint64_t, SuperPoly> by_x;
        uint64_t xmask = 0;
        for (int i = 0; i < 4; ++i) xmask |= (1ull << x[static_cast<size_t>(i)]);
        for (auto& [m, c] : e.terms()) {
            Monomial rest = m;
            uint64_t xs = m.odd & xmask;
            rest.odd &= ~xmask;
            // sign from moving the x factors to the front
            int swaps = 0;
            uint64_t probe = m.odd;
            uint64_t xbits = xs;
            while (xbits) {
                int b = __builtin_ctzll(xbits);
                xbits &= xbits - 1;
                swaps += __builtin_popcountll(probe & ((1ull << b) - 1) & ~xmask);
            }
            SuperPoly& slot = by_x.try_emplace(xs, SuperPoly(vt)).first->second;
            slot.add_term(rest, (swaps % 2) ? -c : c);
        }
        for (auto& [xs, p] : by_x)
            if (!p.is_zero()) relations.push_back(p);
    }

    // mechanical elimination of linearly led parameters
    std::map<int, SuperPoly> solved;
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<SuperPoly> next;
        for (auto& r0 : relations) {
            SuperPoly r = substitute(r0, solved);
            if (r.is_zero()) continue;
            next.push_back(r);
        }
        relations = std::move(next);
        for (auto& r : relations) {
            for (auto& [m, c] : r.terms()) {
                int p = -1;
                if (m.even.size() == 1 && m.even[0].second == 1 && m.odd == 0) p = m.even[0].first;
                if (m.even.empty() && __builtin_popcountll(m.odd) == 1) p = __builtin_ctzll(m.odd);
                if (p < 0 || solved.count(p)) continue;
                bool param = (p != lam) && std::none_of(x.begin(), x.end(), [&](int xi) { return xi == p; });
                if (!param) continue;
                SuperPoly rest = r;
                Monomial mm = m;
                rest.add_term(mm, -c);
                if (contains_any(rest, {{p, SuperPoly(vt)}})) continue;
                solved[p] = (-c.inverse()) * rest;
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    // normalize the solved values against each other
    for (int pass = 0; pass < 4; ++pass)
        for (auto& [p, val] : solved) val = substitute(val, solved);
    rep.add("unresolved_relations", "0", std::to_string(relations.size()));
    rep.add("constraint_count", "4", std::to_string(solved.size()));

    bool fixture = true;
    auto expect = [&](int pid, const SuperPoly& val) {
        auto it = solved.find(pid);
        if (it == solved.end() || it->second != val) fixture = false;
    };
    expect(lam4, SuperPoly(vt));
    expect(th3.at({0, 1, 2}), -(V(lam2.at({1, 2})) * V(th3.at({1, 2, 3}))));
    expect(th3.at({0, 1, 3}), -(V(lam2.at({1, 3})) * V(th3.at({1, 2, 3}))));
    expect(th3.at({0, 2, 3}), -(V(lam2.at({2, 3})) * V(th3.at({1, 2, 3}))));
    rep.add_bool("constraints_are_theta0ab_eq_minus_lamab_eps_and_u0123_zero", fixture);

    // dimensions of the solution superspace
    int even_dim = 0, odd_dim = 0;
    for (int id = 0; id < vt->size(); ++id) {
        bool is_x = std::any_of(x.begin(), x.end(), [&](int xi) { return xi == id; });
        if (is_x || solved.count(id)) continue;
        (vt->parity(id) == Parity::Odd ? odd_dim : even_dim) += 1;
    }
    rep.add("solution_dims", "7|5", std::to_string(even_dim) + "|" + std::to_string(odd_dim));

    // the constrained ansatz solves the system identically
    {
        std::map<int, SuperPoly> sub = solved;
        bool solves = true;
        for (auto& e : eqs)
            if (!substitute(e, sub).is_zero()) solves = false;
        rep.add_bool("constrained_ansatz_solves_system", solves);
    }
    // the constant is a solution
    {
        std::map<int, SuperPoly> zero_all;
        for (int id = 0; id < vt->size(); ++id)
            if (id != lam && !std::any_of(x.begin(), x.end(), [&](int xi) { return xi == id; }))
                zero_all[id] = SuperPoly(vt);
        bool solves = true;
        for (auto& e : eqs)
            if (!substitute(e, zero_all).is_zero()) solves = false;
        rep.add_bool("constants_are_solutions", solves);
    }
    return rep;
}

// --- probes ------------------------------------------------------------------

Report perturbation_probe() {
    Report rep;
    rep.command = "perturbation-probe";
    PDESystem sys = second_order_system();
    const JetContext& ctx = sys.context();
    auto gens = mixed_symmetry_generators(ctx);

    // ten perturbations: four inside the span, six outside
    auto by_label = [&](const std::string& label) -> const SuperPoly& {
        for (auto& [l, g] : gens)
            if (l == label) return g;
        throw std::logic_error("perturbation_probe: missing generator " + label);
    };
    std::vector<SuperPoly> probes;
    probes.push_back(by_label("g2") + by_label("f1_1"));
    probes.push_back(by_label("g1_x0"));
    probes.push_back(Scalar(3) * by_label("fm1_1") - by_label("x1"));
    probes.push_back(by_label("one"));
    size_t in_span = probes.size();
    auto U = [&](int i) { return ctx.var(ctx.u1(i)); };
    auto X = [&](int i) { return ctx.var(ctx.x(i)); };
    SuperPoly u = ctx.var(ctx.u());
    probes.push_back(u * u);
    probes.push_back(X(1) * (u * u));
    probes.push_back(X(1) * X(1));
    probes.push_back(u * U(1));
    probes.push_back(X(0) * X(1));
    probes.push_back(U(0) * U(0) + X(2) * U(2));

    // residuals are linear in the generating function; collect them over a
    // shared monomial dictionary per determined coordinate
    std::map<std::pair<int, Monomial>, int> dict;
    std::vector<std::map<std::pair<int, Monomial>, Scalar>> residues;
    for (auto& p : probes) {
        SuperVectorField Xf = prolong(ctx, p, 2);
        std::map<std::pair<int, Monomial>, Scalar> res;
        for (auto& [w, rhs] : sys.solved()) {
            SuperPoly r = sys.reduce(Xf.apply(ctx.var(w)) - Xf.apply(rhs));
            for (auto& [m, c] : r.terms()) {
                dict.try_emplace({w, m}, static_cast<int>(dict.size()));
                res[{w, m}] = c;
            }
        }
        residues.push_back(std::move(res));
    }
    ScalarMat m(static_cast<int>(dict.size()), static_cast<int>(probes.size()));
    for (size_t k = 0; k < probes.size(); ++k)
        for (auto& [key, c] : residues[k]) m.at(dict.at(key), static_cast<int>(k)) = c;
    RowEchelon re(m);
    auto kernel = re.kernel_basis();
    rep.add("kernel_dim", "4", std::to_string(kernel.size()));
    bool kernel_in_span = true;
    for (auto& v : kernel)
        for (size_t k = in_span; k < probes.size(); ++k)
            if (!v[k].is_zero()) kernel_in_span = false;
    rep.add_bool("kernel_is_exactly_the_table_span", kernel_in_span);

    bool outside_fail = true;
    for (size_t k = in_span; k < probes.size(); ++k)
        if (is_symmetry(sys, probes[k]).ok) outside_fail = false;
    rep.add_bool("outside_probes_fail_individually", outside_fail);
    return rep;
}

Report verify_bracket_infrastructure(unsigned seed) {
    Report rep;
    rep.command = "bracket-infrastructure";
    PDESystem sys = second_order_system();
    auto ctx = sys.context_ptr();
    auto gens = mixed_symmetry_generators(*ctx);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);

    // bracket of certified symmetries is a symmetry
    bool closed = true;
    for (int t = 0; t < 100; ++t) {
        const SuperPoly& f = gens[pick(rng)].second;
        const SuperPoly& g = gens[pick(rng)].second;
        SuperPoly br = lagrange_bracket(*ctx, f, g);
        if (br.is_zero()) continue;
        if (!is_symmetry(sys, br).ok) closed = false;
    }
    rep.add_bool("bracket_of_symmetries_is_symmetry_100_pairs", closed);

    // super Jacobi for the Lagrange bracket on homogeneous triples
    bool jacobi = true;
    for (int t = 0; t < 60; ++t) {
        const SuperPoly& f = gens[pick(rng)].second;
        const SuperPoly& g = gens[pick(rng)].second;
        const SuperPoly& h = gens[pick(rng)].second;
        int pf = f.parity() == Parity::Odd ? 1 : 0;
        int pg = g.parity() == Parity::Odd ? 1 : 0;
        int ph = h.parity() == Parity::Odd ? 1 : 0;
        SuperPoly t1 = lagrange_bracket(*ctx, f, lagrange_bracket(*ctx, g, h));
        SuperPoly t2 = lagrange_bracket(*ctx, g, lagrange_bracket(*ctx, h, f));
        SuperPoly t3 = lagrange_bracket(*ctx, h, lagrange_bracket(*ctx, f, g));
        SuperPoly acc = ((pf * ph) & 1) ? -t1 : t1;
        acc += ((pg * pf) & 1) ? -t2 : t2;
        acc += ((ph * pg) & 1) ? -t3 : t3;
        if (!acc.is_zero()) jacobi = false;
    }
    rep.add_bool("lagrange_super_jacobi_60_triples", jacobi);

    // field realization: [S_f, S_g] = S_{[f,g]} on 50 random table pairs
    bool realization = true;
    for (int t = 0; t < 50; ++t) {
        const SuperPoly& f = gens[pick(rng)].second;
        const SuperPoly& g = gens[pick(rng)].second;
        SuperVectorField lhs = field_bracket(contact_field(*ctx, f), contact_field(*ctx, g));
        SuperVectorField rhs = contact_field(*ctx, lagrange_bracket(*ctx, f, g));
        for (auto& [v, c] : lhs.coeff)
            if (c != rhs.coefficient(v)) realization = false;
        for (auto& [v, c] : rhs.coeff)
            if (c != lhs.coefficient(v)) realization = false;
    }
    rep.add_bool("contact_realization_50_pairs", realization);
    return rep;
}

} // namespace pdesym
} // namespace superjet
