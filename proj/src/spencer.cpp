#include "superjet/spencer.hpp"
#include "superjet/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace superjet {
namespace spencer {

const char* to_string(Grading g) { return g == Grading::Odd ? "odd" : "mixed"; }

namespace {

int parity_bit(Parity p) { return p == Parity::Odd ? 1 : 0; }

// Cochain bases for one grading: the symbol m is the negative part of the
// regraded algebra; 2-cochains run over canonical pairs y <= z (y = z only
// for odd y, where the super-exterior square survives).
struct Complex {
    const SuperLieAlgebra* g;
    std::vector<int> m;                       // basis indices of m inside g
    std::vector<std::pair<int, int>> pairs;   // canonical (y, z), indices into m

    explicit Complex(const SuperLieAlgebra& alg) : g(&alg) {
        for (int i = 0; i < alg.dim(); ++i)
            if (alg.element(i).degree < 0) m.push_back(i);
        for (size_t a = 0; a < m.size(); ++a)
            for (size_t b = a; b < m.size(); ++b) {
                if (a == b && alg.element(m[a]).parity == Parity::Even) continue;
                pairs.push_back({static_cast<int>(a), static_cast<int>(b)});
            }
    }

    long deg(int gi) const { return g->element(gi).degree; }
    int par(int gi) const { return parity_bit(g->element(gi).parity); }

    // enumerate the (d, parity) slices
    std::vector<int> basis0(long d, int parity) const {
        std::vector<int> out;
        for (int x = 0; x < g->dim(); ++x)
            if (deg(x) == d && par(x) == parity) out.push_back(x);
        return out;
    }
    std::vector<std::pair<int, int>> basis1(long d, int parity) const {
        std::vector<std::pair<int, int>> out;  // (x, a) with a index into m
        for (int x = 0; x < g->dim(); ++x)
            for (size_t a = 0; a < m.size(); ++a)
                if (deg(x) - deg(m[a]) == d && ((par(x) + par(m[a])) & 1) == parity)
                    out.push_back({x, static_cast<int>(a)});
        return out;
    }
    std::vector<std::pair<int, int>> basis2(long d, int parity) const {
        std::vector<std::pair<int, int>> out;  // (x, pair index)
        for (int x = 0; x < g->dim(); ++x)
            for (size_t pi = 0; pi < pairs.size(); ++pi) {
                int y = m[static_cast<size_t>(pairs[pi].first)];
                int z = m[static_cast<size_t>(pairs[pi].second)];
                if (deg(x) - deg(y) - deg(z) == d &&
                    ((par(x) + par(y) + par(z)) & 1) == parity)
                    out.push_back({x, static_cast<int>(pi)});
            }
        return out;
    }
};

// a 1-cochain value: coefficients phi(y) over g, per m slot
using Cochain1 = std::map<std::pair<int, int>, Scalar>;  // (m slot a, g index) -> coeff

// (d phi)(X) = (-1)^{x |phi|} [X, phi] for a 0-cochain phi = w
Cochain1 d0_of(const Complex& cx, int w, int phi_parity) {
    Cochain1 out;
    for (size_t a = 0; a < cx.m.size(); ++a) {
        int y = cx.m[a];
        int sgn = cx.par(y) * phi_parity;
        for (auto& [k, c] : cx.g->bracket(y, w)) {
            Scalar v = (sgn & 1) ? -c : c;
            auto key = std::make_pair(static_cast<int>(a), k);
            auto [it, ins] = out.try_emplace(key, v);
            if (!ins) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

// (d phi)(X,Y) = (-1)^{x|phi|}[X, phi(Y)] - (-1)^{y(x+|phi|)}[Y, phi(X)] - phi([X,Y])
// evaluated on canonical pairs; phi given as a Cochain1.
std::map<std::pair<int, int>, Scalar> d1_of(const Complex& cx, const Cochain1& phi, int phi_parity) {
    std::map<std::pair<int, int>, Scalar> out;  // (pair index, g index) -> coeff
    auto add = [&](int pi, int k, const Scalar& v) {
        if (v.is_zero()) return;
        auto key = std::make_pair(pi, k);
        auto [it, ins] = out.try_emplace(key, v);
        if (!ins) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (size_t pi = 0; pi < cx.pairs.size(); ++pi) {
        int a = cx.pairs[pi].first, b = cx.pairs[pi].second;
        int ya = cx.m[static_cast<size_t>(a)], yb = cx.m[static_cast<size_t>(b)];
        int px = cx.par(ya), py = cx.par(yb);
        // [X, phi(Y)]
        for (auto& [slot_k, c] : phi) {
            if (slot_k.first == b) {
                int sgn = px * phi_parity;
                for (auto& [t, s] : cx.g->bracket(ya, slot_k.second)) {
                    Scalar v = c * s;
                    add(static_cast<int>(pi), t, (sgn & 1) ? -v : v);
                }
            }
            if (slot_k.first == a) {
                int sgn = py * (px + phi_parity);
                for (auto& [t, s] : cx.g->bracket(yb, slot_k.second)) {
                    Scalar v = c * s;
                    add(static_cast<int>(pi), t, (sgn & 1) ? v : -v);
                }
            }
        }
        // -phi([X,Y])
        for (auto& [k, c] : cx.g->bracket(ya, yb)) {
            // expand e_k over m slots
            for (size_t s = 0; s < cx.m.size(); ++s) {
                if (cx.m[s] != k) continue;
                for (auto& [slot_t, v] : phi)
                    if (slot_t.first == static_cast<int>(s))
                        add(static_cast<int>(pi), slot_t.second, -(c * v));
            }
        }
    }
    return out;
}

struct BlockDims {
    int c0, c1, c2, rank0, rank1;
};

BlockDims block(const Complex& cx, long d, int parity) {
    auto b0 = cx.basis0(d, parity);
    auto b1 = cx.basis1(d, parity);
    auto b2 = cx.basis2(d, parity);

    std::map<std::pair<int, int>, int> index1;
    for (size_t i = 0; i < b1.size(); ++i)
        index1[{b1[i].first, b1[i].second}] = static_cast<int>(i);
    // note: basis1 keys are (x, slot); Cochain1 keys are (slot, g index)

    // d0: C^{d,0} -> C^{d,1}
    SparseMat m0;
    m0.init(static_cast<int>(b1.size()), static_cast<int>(b0.size()));
    for (size_t c = 0; c < b0.size(); ++c) {
        Cochain1 img = d0_of(cx, b0[c], parity);
        for (auto& [slot_k, v] : img) {
            auto it = index1.find({slot_k.second, slot_k.first});
            if (it == index1.end()) throw std::logic_error("spencer: d0 image outside slice");
            m0.add(it->second, static_cast<int>(c), v);
        }
    }

    // d1: C^{d,1} -> C^{d,2}
    std::map<std::pair<int, int>, int> index2;
    for (size_t i = 0; i < b2.size(); ++i)
        index2[{b2[i].first, b2[i].second}] = static_cast<int>(i);
    SparseMat m1;
    m1.init(static_cast<int>(b2.size()), static_cast<int>(b1.size()));
    for (size_t c = 0; c < b1.size(); ++c) {
        Cochain1 phi;
        phi[{b1[c].second, b1[c].first}] = Scalar(1);
        auto img = d1_of(cx, phi, parity);
        for (auto& [pk, v] : img) {
            auto it = index2.find({pk.second, pk.first});
            if (it == index2.end()) throw std::logic_error("spencer: d1 image outside slice");
            m1.add(it->second, static_cast<int>(c), v);
        }
    }

    BlockDims out;
    out.c0 = static_cast<int>(b0.size());
    out.c1 = static_cast<int>(b1.size());
    out.c2 = static_cast<int>(b2.size());
    out.rank0 = sparse_rank(std::move(m0));
    out.rank1 = sparse_rank(std::move(m1));
    return out;
}

// exactness of the composite on every degree-d 0-cochain
bool d_squared_vanishes(const Complex& cx, long d) {
    for (int parity : {0, 1}) {
        for (int w : cx.basis0(d, parity)) {
            Cochain1 img = d0_of(cx, w, parity);
            auto img2 = d1_of(cx, img, parity);
            if (!img2.empty()) return false;
        }
    }
    return true;
}

} // namespace

namespace {

SuperLieAlgebra graded_algebra(Grading g) {
    return (g == Grading::Odd) ? f4().regrade(simple_system(SystemLabel::I), {1})
                               : f4().regrade(simple_system(SystemLabel::VI), {4});
}

} // namespace

SparseMat differential(Grading g, int n, long d, Parity parity) {
    if (n != 0 && n != 1) throw std::invalid_argument("spencer::differential: n must be 0 or 1");
    SuperLieAlgebra alg = graded_algebra(g);
    Complex cx(alg);
    int par = parity == Parity::Odd ? 1 : 0;
    SparseMat m;
    if (n == 0) {
        auto b0 = cx.basis0(d, par);
        auto b1 = cx.basis1(d, par);
        std::map<std::pair<int, int>, int> index1;
        for (size_t i = 0; i < b1.size(); ++i) index1[{b1[i].first, b1[i].second}] = static_cast<int>(i);
        m.init(static_cast<int>(b1.size()), static_cast<int>(b0.size()));
        for (size_t c = 0; c < b0.size(); ++c) {
            Cochain1 img = d0_of(cx, b0[c], par);
            for (auto& [slot_k, v] : img) m.add(index1.at({slot_k.second, slot_k.first}), static_cast<int>(c), v);
        }
    } else {
        auto b1 = cx.basis1(d, par);
        auto b2 = cx.basis2(d, par);
        std::map<std::pair<int, int>, int> index2;
        for (size_t i = 0; i < b2.size(); ++i) index2[{b2[i].first, b2[i].second}] = static_cast<int>(i);
        m.init(static_cast<int>(b2.size()), static_cast<int>(b1.size()));
        for (size_t c = 0; c < b1.size(); ++c) {
            Cochain1 phi;
            phi[{b1[c].second, b1[c].first}] = Scalar(1);
            auto img = d1_of(cx, phi, par);
            for (auto& [pk, v] : img) m.add(index2.at({pk.second, pk.first}), static_cast<int>(c), v);
        }
    }
    return m;
}

SpencerResult compute(Grading g, bool parallel) {
    SuperLieAlgebra alg = graded_algebra(g);
    Complex cx(alg);

    SpencerResult res;
    res.grading = g;
    res.rows.resize(5);

    std::vector<BlockDims> blocks(10);
    parallel_for(10, parallel, [&](long i) {
        long d = i / 2;
        int parity = static_cast<int>(i % 2);
        blocks[static_cast<size_t>(i)] = block(cx, d, parity);
    });

    for (long d = 0; d <= 4; ++d) {
        CohomologyRow row;
        row.d = d;
        const BlockDims& be = blocks[static_cast<size_t>(2 * d)];
        const BlockDims& bo = blocks[static_cast<size_t>(2 * d + 1)];
        row.C0 = {be.c0, bo.c0};
        row.C1 = {be.c1, bo.c1};
        row.C2 = {be.c2, bo.c2};
        row.B1 = {be.rank0, bo.rank0};
        row.Z1 = {be.c1 - be.rank1, bo.c1 - bo.rank1};
        row.H1 = {row.Z1.even - row.B1.even, row.Z1.odd - row.B1.odd};
        // H^{d,0} = ker d0 (no coboundaries in level zero)
        row.H0 = {be.c0 - be.rank0, bo.c0 - bo.rank0};
        res.rows[static_cast<size_t>(d)] = row;

        if (!d_squared_vanishes(cx, d)) res.d_squared_zero = false;
    }

    for (long d = 5; d <= 8; ++d)
        for (int parity : {0, 1})
            if (!cx.basis1(d, parity).empty()) res.empty_above_4 = false;

    return res;
}

Report verify(Grading g, bool parallel) {
    Report rep;
    rep.command = std::string("spencer-") + to_string(g);
    SpencerResult r = compute(g, parallel);

    rep.add_bool("differential_squares_to_zero", r.d_squared_zero);
    rep.add_bool("no_cochains_above_degree_4", r.empty_above_4);

    const char* h01 = (g == Grading::Odd) ? "7|0" : "18|16";
    rep.add("H01_dims", h01, r.rows[0].H1.str());
    for (long d = 1; d <= 4; ++d)
        rep.add("H" + std::to_string(d) + "1_dims", "0|0",
                r.rows[static_cast<size_t>(d)].H1.str());
    for (long d = 0; d <= 4; ++d)
        rep.add("H" + std::to_string(d) + "0_dims", "0|0",
                r.rows[static_cast<size_t>(d)].H0.str());

    if (g == Grading::Odd) {
        rep.add("B11_dims", "0|8", r.rows[1].B1.str());
        rep.add("Z11_dims", "0|8", r.rows[1].Z1.str());
        rep.add("B21_dims", "1|0", r.rows[2].B1.str());
        rep.add("Z21_dims", "1|0", r.rows[2].Z1.str());
    }
    return rep;
}

std::string to_json(const SpencerResult& r) {
    nlohmann::ordered_json j;
    j["grading"] = to_string(r.grading);
    j["d_squared_zero"] = r.d_squared_zero;
    j["no_cochains_above_degree_4"] = r.empty_above_4;
    j["degrees"] = nlohmann::ordered_json::array();
    for (auto& row : r.rows) {
        nlohmann::ordered_json o;
        o["d"] = row.d;
        auto put = [&](const char* k, const DimPair& p) {
            o[k] = {{"even", p.even}, {"odd", p.odd}};
        };
        put("C0", row.C0);
        put("C1", row.C1);
        put("C2", row.C2);
        put("Z1", row.Z1);
        put("B1", row.B1);
        put("H1", row.H1);
        put("H0", row.H0);
        j["degrees"].push_back(o);
    }
    return j.dump(2);
}

} // namespace spencer
} // namespace superjet
