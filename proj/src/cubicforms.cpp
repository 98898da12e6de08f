#include "superjet/cubicforms.hpp"

#include <sstream>
#include <stdexcept>

namespace superjet {
namespace cubicforms {

namespace {

CubicTensors build_cubic(const VarTablePtr& vt, const std::array<int, 4>& ids, const Scalar& odd_coeff) {
    CubicTensors t;
    auto v = [&](int a) { return SuperPoly::var(vt, ids[static_cast<size_t>(a)]); };
    t.C = v(0) * v(1) * v(1) + odd_coeff * (v(1) * v(2) * v(3));
    for (int a = 0; a < 4; ++a)
        t.C1[static_cast<size_t>(a)] = Scalar(1, 3) * partial(t.C, ids[static_cast<size_t>(a)]);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            t.C2[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                Scalar(1, 2) * partial(t.C1[static_cast<size_t>(b)], ids[static_cast<size_t>(a)]);
    return t;
}

} // namespace

CubicTensors primal_cubic(const VarTablePtr& vt, const std::array<int, 4>& ids) {
    return build_cubic(vt, ids, Scalar(2));
}

CubicTensors dual_cubic(const VarTablePtr& vt, const std::array<int, 4>& ids) {
    return build_cubic(vt, ids, Scalar(1));
}

Report verify_cubic_identity() {
    Report rep;
    rep.command = "cubic-identity";
    auto table = std::make_shared<VarTable>();
    std::array<int, 4> t{}, ts{};
    t[0] = table->add("lambda1", Parity::Even);
    t[1] = table->add("lambda2", Parity::Even);
    t[2] = table->add("theta1", Parity::Odd);
    t[3] = table->add("theta2", Parity::Odd);
    ts[0] = table->add("mu1", Parity::Even);
    ts[1] = table->add("mu2", Parity::Even);
    ts[2] = table->add("phi1", Parity::Odd);
    ts[3] = table->add("phi2", Parity::Odd);
    VarTablePtr vt = table;

    CubicTensors C = primal_cubic(vt, t);
    CubicTensors Cs = dual_cubic(vt, ts);

    SuperPoly lhs(vt);
    for (int b = 0; b < 4; ++b)
        for (int a = 0; a < 4; ++a)
            lhs += C.C1[static_cast<size_t>(b)] * C.C1[static_cast<size_t>(a)] *
                   Cs.C2[static_cast<size_t>(a)][static_cast<size_t>(b)];
    SuperPoly pairing(vt);
    for (int c = 0; c < 4; ++c)
        pairing += SuperPoly::var(vt, t[static_cast<size_t>(c)]) *
                   SuperPoly::var(vt, ts[static_cast<size_t>(c)]);
    SuperPoly rhs = Scalar(4, 27) * (C.C * pairing);

    SuperPoly diff = lhs - rhs;
    rep.add("identity_residual", "0", diff.str());
    rep.add("residual_monomials", "0", std::to_string(diff.term_count()));

    // even restriction: kill the odd parameters, identity survives
    std::map<int, SuperPoly> kill;
    for (int id : {t[2], t[3], ts[2], ts[3]}) kill[id] = SuperPoly(vt);
    SuperPoly lhs0 = substitute(lhs, kill), rhs0 = substitute(rhs, kill);
    rep.add_bool("even_restriction_identity", lhs0 == rhs0 && !lhs0.is_zero());

    // contraction consistency: c(T^3) = t^c c_c = t^c t^b c_{bc}
    SuperPoly s1(vt), s2(vt);
    for (int c = 0; c < 4; ++c)
        s1 += SuperPoly::var(vt, t[static_cast<size_t>(c)]) * C.C1[static_cast<size_t>(c)];
    for (int c = 0; c < 4; ++c)
        for (int b = 0; b < 4; ++b)
            s2 += SuperPoly::var(vt, t[static_cast<size_t>(c)]) *
                  SuperPoly::var(vt, t[static_cast<size_t>(b)]) *
                  C.C2[static_cast<size_t>(b)][static_cast<size_t>(c)];
    rep.add_bool("cubic_equals_tc_c1", s1 == C.C);
    rep.add_bool("cubic_equals_tctb_c2", s2 == C.C);
    return rep;
}

std::array<ScalarMat, 8> osp22_action(const Scalar& c1) {
    if (c1.is_zero()) throw std::invalid_argument("osp22_action: c1 must be nonzero");
    Scalar c2 = Scalar(2) * c1;
    Scalar c3 = Scalar(-1, 3) * c1.inverse();
    Scalar c4 = Scalar(1, 3) * c1.inverse();
    auto E = [](int r, int c, const Scalar& v) {
        ScalarMat m(4, 4);
        m.at(r, c) = v;
        return m;
    };
    ScalarMat h10(4, 4);
    h10.at(2, 2) = Scalar(1);
    h10.at(3, 3) = Scalar(-1);
    ScalarMat e10 = E(2, 3, Scalar(1));
    ScalarMat f10 = E(3, 2, Scalar(1));
    ScalarMat h01(4, 4);
    h01.at(0, 0) = Scalar(-2, 3);
    h01.at(1, 1) = Scalar(1, 3);
    h01.at(2, 2) = Scalar(-2, 3);
    h01.at(3, 3) = Scalar(1, 3);
    ScalarMat e01 = E(0, 2, c2) + E(3, 1, c1);
    ScalarMat f01 = E(1, 3, c4) + E(2, 0, c3);
    ScalarMat e11 = E(0, 3, -c2) + E(2, 1, c1);
    ScalarMat f11 = E(1, 2, -c4) + E(3, 0, c3);
    return {h10, e10, f10, h01, e01, f01, e11, f11};
}

namespace {

// parity of the osp generators in the order h10,e10,f10,h01,e01,f01,e11,f11
constexpr Parity kOspParity[8] = {Parity::Even, Parity::Even, Parity::Even, Parity::Even,
                                  Parity::Odd,  Parity::Odd,  Parity::Odd,  Parity::Odd};

ScalarMat super_bracket(const ScalarMat& a, const ScalarMat& b, Parity pa, Parity pb) {
    if (pa == Parity::Odd && pb == Parity::Odd) return a.anticommutator(b);
    return a.commutator(b);
}

} // namespace

Report verify_osp22(const Scalar& c1) {
    Report rep;
    rep.command = "osp22";
    auto g = osp22_action(c1);
    const ScalarMat &h10 = g[0], &e10 = g[1], &f10 = g[2], &h01 = g[3], &e01 = g[4], &f01 = g[5],
                    &e11 = g[6], &f11 = g[7];

    rep.add_bool("h10_is_bracket_e10_f10", h10 == super_bracket(e10, f10, Parity::Even, Parity::Even));
    rep.add_bool("h01_is_bracket_e01_f01", h01 == super_bracket(e01, f01, Parity::Odd, Parity::Odd));
    rep.add_bool("e11_is_bracket_e10_e01", e11 == super_bracket(e10, e01, Parity::Even, Parity::Odd));
    rep.add_bool("f11_is_bracket_f10_f01", f11 == super_bracket(f10, f01, Parity::Even, Parity::Odd));

    // h = -h10/2 - h01 = diag(2/3, -1/3, 1/6, 1/6)
    ScalarMat h = Scalar(-1, 2) * h10 - h01;
    ScalarMat expect(4, 4);
    expect.at(0, 0) = Scalar(2, 3);
    expect.at(1, 1) = Scalar(-1, 3);
    expect.at(2, 2) = Scalar(1, 6);
    expect.at(3, 3) = Scalar(1, 6);
    rep.add_bool("so2_generator_diag", h == expect);

    // closure of the span under super brackets (exact membership)
    ScalarMat span(16, 8);
    for (int k = 0; k < 8; ++k)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) span.at(r * 4 + c, k) = g[static_cast<size_t>(k)].at(r, c);
    RowEchelon re(span);
    bool closed = true;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            ScalarMat br = super_bracket(g[static_cast<size_t>(a)], g[static_cast<size_t>(b)],
                                         kOspParity[a], kOspParity[b]);
            std::vector<Scalar> v(16);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) v[static_cast<size_t>(r * 4 + c)] = br.at(r, c);
            if (!re.solve(v)) closed = false;
        }
    rep.add_bool("closes_to_8_dimensional_superalgebra", closed);
    rep.add("span_dimension", "8", std::to_string(re.rank()));
    return rep;
}

namespace {

// derivation action of a supermatrix on polynomials in the module variables
SuperPoly matrix_derivation(const VarTablePtr& vt, const std::array<int, 4>& ids,
                            const ScalarMat& A, const SuperPoly& f) {
    SuperPoly out(vt);
    for (int j = 0; j < 4; ++j) {
        SuperPoly img(vt);
        for (int i = 0; i < 4; ++i)
            if (!A.at(i, j).is_zero())
                img += A.at(i, j) * SuperPoly::var(vt, ids[static_cast<size_t>(i)]);
        if (img.is_zero()) continue;
        out += img * partial(f, ids[static_cast<size_t>(j)]);
    }
    return out;
}

// dual representation matrix: (A*)_{ji} = -(-1)^{|A||i|} A_{ij}
ScalarMat dual_matrix(const ScalarMat& A, Parity pa, const std::array<Parity, 4>& vpar) {
    ScalarMat out(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Scalar v = -A.at(i, j);
            if (pa == Parity::Odd && vpar[static_cast<size_t>(i)] == Parity::Odd) v = -v;
            out.at(j, i) = v;
        }
    return out;
}

} // namespace

Report invariant_cubics_kernel() {
    Report rep;
    rep.command = "invariant-cubics";

    for (const Scalar& c1 : {Scalar(1), Scalar(5)}) {
        auto g = osp22_action(c1);
        std::string tag = (c1 == Scalar(1)) ? "" : "_c1_alt";

        for (bool dual : {true, false}) {
            // module variables: w1,w2 even, w3,w4 odd (dual=true means S^3 W*)
            auto table = std::make_shared<VarTable>();
            std::array<int, 4> w{};
            for (int i = 0; i < 4; ++i)
                w[static_cast<size_t>(i)] =
                    table->add("w" + std::to_string(i + 1), i < 2 ? Parity::Even : Parity::Odd);
            VarTablePtr vt = table;
            std::array<Parity, 4> vpar = {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd};

            // even cubic monomial basis
            auto v = [&](int a) { return SuperPoly::var(vt, w[static_cast<size_t>(a)]); };
            std::vector<SuperPoly> basis = {v(0) * v(0) * v(0), v(0) * v(0) * v(1), v(0) * v(1) * v(1),
                                            v(1) * v(1) * v(1), v(0) * v(2) * v(3), v(1) * v(2) * v(3)};

            // images of the basis under all 8 generators; coordinates over
            // every monomial that occurs (even generators stay in the even
            // slice, odd generators land in the odd cubic slice)
            std::vector<std::vector<SuperPoly>> images(8, std::vector<SuperPoly>(6, SuperPoly(vt)));
            std::map<Monomial, int> key_index;
            for (int gk = 0; gk < 8; ++gk) {
                ScalarMat act = dual ? dual_matrix(g[static_cast<size_t>(gk)], kOspParity[gk], vpar)
                                     : g[static_cast<size_t>(gk)];
                for (int col = 0; col < 6; ++col) {
                    images[static_cast<size_t>(gk)][static_cast<size_t>(col)] =
                        matrix_derivation(vt, w, act, basis[static_cast<size_t>(col)]);
                    for (auto& [m, c] : images[static_cast<size_t>(gk)][static_cast<size_t>(col)].terms())
                        key_index.try_emplace(m, static_cast<int>(key_index.size()));
                }
            }
            int nkeys = static_cast<int>(key_index.size());
            ScalarMat sys(8 * nkeys, 6);
            for (int gk = 0; gk < 8; ++gk)
                for (int col = 0; col < 6; ++col)
                    for (auto& [m, c] : images[static_cast<size_t>(gk)][static_cast<size_t>(col)].terms())
                        sys.at(gk * nkeys + key_index.at(m), col) = c;
            RowEchelon re(sys);
            auto ker = re.kernel_basis();
            std::string side = dual ? "S3W_dual" : "S3W";
            rep.add(side + "_kernel_dim" + tag, "1", std::to_string(ker.size()));
            if (ker.size() == 1) {
                // expected invariant: w1 w2^2 - 2 w2 w3 w4 (dual) / w1 w2^2 - w2 w3 w4
                SuperPoly expect = v(0) * v(1) * v(1) -
                                   (dual ? Scalar(2) : Scalar(1)) * (v(1) * v(2) * v(3));
                SuperPoly got(vt);
                for (int col = 0; col < 6; ++col) got += ker[0][static_cast<size_t>(col)] * basis[static_cast<size_t>(col)];
                // normalize leading coefficient
                Scalar lead = got.coefficient(expect.terms().begin()->first);
                bool match = !lead.is_zero() && (lead.inverse() * got == expect);
                rep.add_bool(side + "_kernel_generator" + tag, match);
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// supervariety and osculation

namespace {

using PolyMat = std::vector<std::vector<SuperPoly>>;

PolyMat poly_identity(const VarTablePtr& vt, int n) {
    PolyMat m(static_cast<size_t>(n), std::vector<SuperPoly>(static_cast<size_t>(n), SuperPoly(vt)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = SuperPoly::constant(vt, Scalar(1));
    return m;
}

PolyMat poly_mul(const PolyMat& a, const PolyMat& b) {
    size_t n = a.size();
    const VarTablePtr& vt = a[0][0].table();
    PolyMat out(n, std::vector<SuperPoly>(n, SuperPoly(vt)));
    for (size_t r = 0; r < n; ++r)
        for (size_t k = 0; k < n; ++k) {
            if (a[r][k].is_zero()) continue;
            for (size_t c = 0; c < n; ++c)
                if (!b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
        }
    return out;
}

bool poly_is_zero(const PolyMat& a) {
    for (auto& row : a)
        for (auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

// exp of a nilpotent matrix with polynomial entries
PolyMat poly_exp(const PolyMat& n) {
    size_t dim = n.size();
    const VarTablePtr& vt = n[0][0].table();
    PolyMat acc = poly_identity(vt, static_cast<int>(dim));
    PolyMat pw = poly_identity(vt, static_cast<int>(dim));
    mpz_class fact = 1;
    for (int k = 1; k <= static_cast<int>(dim) + 1; ++k) {
        pw = poly_mul(pw, n);
        if (poly_is_zero(pw)) break;
        fact *= k;
        Scalar inv(mpq_class(1, fact));
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                if (!pw[r][c].is_zero()) acc[r][c] += inv * pw[r][c];
    }
    return acc;
}

} // namespace

OsculationOutput supervariety_and_osculation() {
    OsculationOutput out;

    auto ptable = std::make_shared<VarTable>();
    int l1 = ptable->add("lambda1", Parity::Even);
    int l2 = ptable->add("lambda2", Parity::Even);
    int th1 = ptable->add("theta1", Parity::Odd);
    int th2 = ptable->add("theta2", Parity::Odd);
    VarTablePtr pv = ptable;
    out.params = pv;

    // nilpotent generators of the abelian subalgebra acting on the graded
    // module 1; Y1,Y2,Th1,Th2; Y1Y2 = Th1Th2, Y2^2, Y2Th1, Y2Th2, Y1Y2^2
    auto mat = [&](std::initializer_list<std::tuple<int, int, int>> entries) {
        PolyMat m(10, std::vector<SuperPoly>(10, SuperPoly(pv)));
        for (auto& [r, c, v] : entries)
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] = SuperPoly::constant(pv, Scalar(v));
        return m;
    };
    PolyMat Y1 = mat({{1, 0, 1}, {5, 2, 1}, {9, 6, 1}});
    PolyMat Y2 = mat({{2, 0, 1}, {5, 1, 1}, {6, 2, 1}, {7, 3, 1}, {8, 4, 1}, {9, 5, 1}});
    PolyMat T1 = mat({{3, 0, 1}, {5, 4, 1}, {7, 2, 1}, {9, 8, 1}});
    PolyMat T2 = mat({{4, 0, 1}, {5, 3, -1}, {8, 2, 1}, {9, 7, -1}});

    auto scale = [&](const PolyMat& m, int var) {
        PolyMat o(10, std::vector<SuperPoly>(10, SuperPoly(pv)));
        SuperPoly s = SuperPoly::var(pv, var);
        for (size_t r = 0; r < 10; ++r)
            for (size_t c = 0; c < 10; ++c)
                if (!m[r][c].is_zero()) o[r][c] = s * m[r][c];
        return o;
    };

    PolyMat M = poly_mul(poly_mul(poly_exp(scale(T2, th2)), poly_exp(scale(T1, th1))),
                         poly_mul(poly_exp(scale(Y2, l2)), poly_exp(scale(Y1, l1))));

    // right coordinates of the orbit point: first column
    std::vector<SuperPoly> right;
    for (int r = 0; r < 10; ++r) right.push_back(M[static_cast<size_t>(r)][0]);

    // CSpO basis change b' = (v0,-v1,-v2,v3,v4,-v9,-v6,-v5,v8,-v7) followed by
    // the right-to-left sign rule (flip odd slots; odd slots of b' are 3,4,8,9)
    static const int perm[10] = {0, 1, 2, 3, 4, 9, 6, 5, 8, 7};
    static const int sign[10] = {1, -1, -1, 1, 1, -1, -1, -1, 1, -1};
    static const bool odd_slot[10] = {false, false, false, true, true, false, false, false, true, true};
    for (int m = 0; m < 10; ++m) {
        SuperPoly v = right[static_cast<size_t>(perm[m])];
        int s = sign[m] * (odd_slot[m] ? -1 : 1);
        out.supervariety_row.push_back(s < 0 ? -v : v);
    }

    // jet matrix: u00 = c(T^3), u0b = (3/2) c_b, ua0 = (3/2) c_a, uab = 3 c_ab
    CubicTensors C = primal_cubic(pv, {l1, l2, th1, th2});
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out.jet_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = SuperPoly(pv);
    out.jet_matrix[0][0] = C.C;
    for (int a = 1; a <= 4; ++a) {
        out.jet_matrix[0][static_cast<size_t>(a)] = Scalar(3, 2) * C.C1[static_cast<size_t>(a - 1)];
        out.jet_matrix[static_cast<size_t>(a)][0] = Scalar(3, 2) * C.C1[static_cast<size_t>(a - 1)];
        for (int b = 1; b <= 4; ++b)
            out.jet_matrix[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                Scalar(3) * C.C2[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)];
    }

    // jet context: x0,x1,x2 even; x3,x4 odd
    out.ctx = std::make_shared<JetContext>(
        std::vector<Parity>{Parity::Even, Parity::Even, Parity::Even, Parity::Odd, Parity::Odd}, 2);
    const JetContext& ctx = *out.ctx;

    // parameter elimination (lambda1, lambda2, theta1, theta2) = (u22, u12, -u24, u23)
    std::map<int, SuperPoly> sigma;
    sigma[l1] = ctx.var(ctx.u2(2, 2).second);
    sigma[l2] = ctx.var(ctx.u2(1, 2).second);
    sigma[th1] = -ctx.var(ctx.u2(2, 4).second);
    sigma[th2] = ctx.var(ctx.u2(2, 3).second);

    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            auto [sgn, id] = ctx.u2(i, j);
            if (sgn == 0) {
                // structurally zero coordinates (u33, u44) must get zero rhs
                SuperPoly rhs = substitute_into(out.jet_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                                sigma, ctx.vars());
                if (!rhs.is_zero()) throw std::logic_error("osculation: nonzero rhs on zero coordinate");
                continue;
            }
            SuperPoly rhs = substitute_into(out.jet_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                            sigma, ctx.vars());
            if (sgn < 0) rhs = -rhs;
            if (rhs == ctx.var(id)) continue;  // defining slot of a free coordinate
            out.equations.push_back({id, rhs});
        }

    // solved form over the free coordinates {u22, u34, u23, u24}:
    // rewrite u12 -> -u34 everywhere and solve u12 = -u34 itself
    int u12 = ctx.u2(1, 2).second;
    int u34 = ctx.u2(3, 4).second;
    std::map<int, SuperPoly> rewrite;
    rewrite[u12] = -ctx.var(u34);
    for (auto& [lhs, rhs] : out.equations) {
        if (lhs == u34) continue;  // u34 = -u12 is re-expressed as u12 = -u34
        out.solved[lhs] = substitute(rhs, rewrite);
    }
    out.solved[u12] = -ctx.var(u34);
    out.free_ids = {ctx.u2(2, 2).second, u34, ctx.u2(2, 3).second, ctx.u2(2, 4).second};
    return out;
}

Report verify_osculation() {
    Report rep;
    rep.command = "osculation";
    OsculationOutput o = supervariety_and_osculation();
    const VarTablePtr& pv = o.params;
    int l1 = pv->id("lambda1"), l2 = pv->id("lambda2"), th1 = pv->id("theta1"), th2 = pv->id("theta2");
    auto V = [&](int id) { return SuperPoly::var(pv, id); };
    CubicTensors C = primal_cubic(pv, {l1, l2, th1, th2});

    // supervariety row = (1, -t^a, -c(T^3)/2, -(3/2) c_a(T^2))
    std::vector<SuperPoly> expect;
    expect.push_back(SuperPoly::constant(pv, Scalar(1)));
    for (int a : {l1, l2, th1, th2}) expect.push_back(-V(a));
    expect.push_back(Scalar(-1, 2) * C.C);
    for (int a = 0; a < 4; ++a) expect.push_back(Scalar(-3, 2) * C.C1[static_cast<size_t>(a)]);
    bool row_ok = true;
    for (int m = 0; m < 10; ++m)
        if (o.supervariety_row[static_cast<size_t>(m)] != expect[static_cast<size_t>(m)]) row_ok = false;
    rep.add_bool("supervariety_left_coordinates", row_ok);

    // the scaled exponential factors supercommute pairwise
    {
        int ids[4] = {l1, l2, th1, th2};
        // rebuild the scaled generator matrices lambda_i Y_i etc.
        auto scaled = [&](int which) {
            std::vector<std::vector<SuperPoly>> m(10, std::vector<SuperPoly>(10, SuperPoly(pv)));
            auto put = [&](int r, int c, int v) {
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    Scalar(v) * SuperPoly::var(pv, ids[which]);
            };
            switch (which) {
                case 0: put(1, 0, 1); put(5, 2, 1); put(9, 6, 1); break;
                case 1: put(2, 0, 1); put(5, 1, 1); put(6, 2, 1); put(7, 3, 1); put(8, 4, 1); put(9, 5, 1); break;
                case 2: put(3, 0, 1); put(5, 4, 1); put(7, 2, 1); put(9, 8, 1); break;
                case 3: put(4, 0, 1); put(5, 3, -1); put(8, 2, 1); put(9, 7, -1); break;
            }
            return m;
        };
        bool commute = true;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                auto ma = scaled(a), mb = scaled(b);
                for (int r = 0; r < 10 && commute; ++r)
                    for (int c = 0; c < 10; ++c) {
                        SuperPoly ab(pv), ba(pv);
                        for (int k = 0; k < 10; ++k) {
                            ab += ma[static_cast<size_t>(r)][static_cast<size_t>(k)] *
                                  mb[static_cast<size_t>(k)][static_cast<size_t>(c)];
                            ba += mb[static_cast<size_t>(r)][static_cast<size_t>(k)] *
                                  ma[static_cast<size_t>(k)][static_cast<size_t>(c)];
                        }
                        if (ab != ba) { commute = false; break; }
                    }
            }
        rep.add_bool("scaled_exponential_factors_supercommute", commute);
    }

    // explicit fixture for the 5x5 supersymmetric jet matrix
    auto P = [&](std::initializer_list<std::pair<Scalar, std::vector<int>>> terms) {
        SuperPoly p(pv);
        for (auto& [c, vars] : terms) {
            SuperPoly m = SuperPoly::constant(pv, c);
            for (int v : vars) m = m * V(v);
            p += m;
        }
        return p;
    };
    std::array<std::array<SuperPoly, 5>, 5> F;
    F[0][0] = P({{Scalar(1), {l1, l2, l2}}, {Scalar(2), {l2, th1, th2}}});
    F[0][1] = P({{Scalar(1, 2), {l2, l2}}});
    F[0][2] = P({{Scalar(1), {l1, l2}}, {Scalar(1), {th1, th2}}});
    F[0][3] = P({{Scalar(1), {l2, th2}}});
    F[0][4] = P({{Scalar(-1), {l2, th1}}});
    F[1][1] = SuperPoly(pv);
    F[1][2] = P({{Scalar(1), {l2}}});
    F[1][3] = SuperPoly(pv);
    F[1][4] = SuperPoly(pv);
    F[2][2] = P({{Scalar(1), {l1}}});
    F[2][3] = P({{Scalar(1), {th2}}});
    F[2][4] = P({{Scalar(-1), {th1}}});
    F[3][3] = SuperPoly(pv);
    F[3][4] = P({{Scalar(-1), {l2}}});
    F[4][4] = SuperPoly(pv);
    bool matrix_ok = true;
    auto par = [](int i) { return i >= 3; };
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            if (o.jet_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] != F[static_cast<size_t>(i)][static_cast<size_t>(j)])
                matrix_ok = false;
            // supersymmetry u_ij = (-1)^{|i||j|} u_ji
            SuperPoly t = o.jet_matrix[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (par(i) && par(j)) t = -t;
            if (o.jet_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] != t) matrix_ok = false;
        }
    rep.add_bool("parametric_matrix_fixture", matrix_ok);
    rep.add("equation_count", "9", std::to_string(o.equations.size()));

    // the generated system, verbatim
    const JetContext& ctx = *o.ctx;
    auto U = [&](int i, int j) { return ctx.var(ctx.u2(i, j).second); };
    std::map<int, SuperPoly> want;
    want[ctx.u2(0, 0).second] = U(2, 2) * U(1, 2) * U(1, 2) + Scalar(2) * (U(1, 2) * U(2, 3) * U(2, 4));
    want[ctx.u2(0, 1).second] = Scalar(1, 2) * (U(1, 2) * U(1, 2));
    want[ctx.u2(0, 2).second] = U(2, 2) * U(1, 2) + U(2, 3) * U(2, 4);
    want[ctx.u2(0, 3).second] = U(1, 2) * U(2, 3);
    want[ctx.u2(0, 4).second] = U(1, 2) * U(2, 4);
    want[ctx.u2(1, 1).second] = ctx.zero();
    want[ctx.u2(1, 3).second] = ctx.zero();
    want[ctx.u2(1, 4).second] = ctx.zero();
    want[ctx.u2(3, 4).second] = -U(1, 2);
    bool eq_ok = o.equations.size() == want.size();
    for (auto& [lhs, rhs] : o.equations) {
        auto it = want.find(lhs);
        if (it == want.end() || it->second != rhs) eq_ok = false;
    }
    rep.add_bool("equations_match_verbatim", eq_ok);
    rep.add("solved_form_size", "9", std::to_string(o.solved.size()));
    return rep;
}

} // namespace cubicforms
} // namespace superjet
