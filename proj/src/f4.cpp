#include "superjet/f4.hpp"
#include "superjet/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superjet {

const std::vector<std::pair<int, Scalar>> SuperLieAlgebra::empty_;

std::pair<int, int> SuperLieAlgebra::super_dim() const {
    int e = 0, o = 0;
    for (auto& b : basis_) (b.parity == Parity::Even ? e : o) += 1;
    return {e, o};
}

int SuperLieAlgebra::add_element(const std::string& name, Parity p, long degree) {
    basis_.push_back({name, p, degree});
    return static_cast<int>(basis_.size()) - 1;
}

void SuperLieAlgebra::set_bracket(int i, int j, std::vector<std::pair<int, Scalar>> value) {
    std::sort(value.begin(), value.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Scalar>> clean;
    for (auto& [k, c] : value) {
        if (c.is_zero()) continue;
        if (!clean.empty() && clean.back().first == k) clean.back().second += c;
        else clean.push_back({k, c});
    }
    clean.erase(std::remove_if(clean.begin(), clean.end(),
                               [](const auto& p) { return p.second.is_zero(); }),
                clean.end());
    if (clean.empty()) table_.erase({i, j});
    else table_[{i, j}] = std::move(clean);
}

const std::vector<std::pair<int, Scalar>>& SuperLieAlgebra::bracket(int i, int j) const {
    auto it = table_.find({i, j});
    return it == table_.end() ? empty_ : it->second;
}

std::vector<Scalar> SuperLieAlgebra::bracket(const std::vector<Scalar>& x,
                                             const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(static_cast<size_t>(dim()));
    for (int i = 0; i < dim(); ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[static_cast<size_t>(j)].is_zero()) continue;
            Scalar f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            for (auto& [k, c] : bracket(i, j)) out[static_cast<size_t>(k)] += f * c;
        }
    }
    return out;
}

void SuperLieAlgebra::complete_by_antisymmetry() {
    std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> add;
    for (auto& [ij, val] : table_) {
        auto [i, j] = ij;
        if (i >= j) continue;
        bool both_odd = basis_[static_cast<size_t>(i)].parity == Parity::Odd &&
                        basis_[static_cast<size_t>(j)].parity == Parity::Odd;
        std::vector<std::pair<int, Scalar>> flip;
        for (auto& [k, c] : val) flip.push_back({k, both_odd ? c : -c});
        add[{j, i}] = std::move(flip);
    }
    for (auto& [ji, val] : add) set_bracket(ji.first, ji.second, std::move(val));
}

std::pair<int, int> SuperLieAlgebra::graded_dim(long degree) const {
    int e = 0, o = 0;
    for (auto& b : basis_)
        if (b.degree == degree) (b.parity == Parity::Even ? e : o) += 1;
    return {e, o};
}

std::vector<int> SuperLieAlgebra::degree_indices(long degree) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (basis_[static_cast<size_t>(i)].degree == degree) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Scalar> F4Algebra::so_coords_of_omega2(const SpinVec& s, const SpinVec& t) const {
    Multivector w = cliff_->omega_p(2, s, t);
    return cliff_->so_coordinates(cliff_->bivector_matrix(w));
}

F4Algebra::F4Algebra() : cliff_(&clifford()) {
    // basis: one (deg -2), 8 spinors (deg -1), 21 so(V) wedges + Z (deg 0),
    // 8 duals (deg +1), one_dual (deg +2)
    alg_.add_element("one", Parity::Even, -2);
    static const char* spin_names[8] = {"phi0", "phi1", "phi2", "phi3", "psi0", "psi1", "psi2", "psi3"};
    for (int a = 0; a < 8; ++a) alg_.add_element(spin_names[a], Parity::Odd, -1);
    static const char* frame_names[7] = {"e1", "e2", "e3", "R", "f3", "f2", "f1"};
    for (int k = 0; k < 21; ++k) {
        auto [p, q] = cliff_->so_label(k);
        alg_.add_element(std::string("w_") + frame_names[p] + "_" + frame_names[q], Parity::Even, 0);
    }
    alg_.add_element("Z", Parity::Even, 0);
    for (int a = 0; a < 8; ++a) alg_.add_element(std::string(spin_names[a]) + "+", Parity::Odd, 1);
    alg_.add_element("one+", Parity::Even, 2);

    auto single = [](int k, const Scalar& c) {
        return std::vector<std::pair<int, Scalar>>{{k, c}};
    };

    // ordered pairs i <= j (the rest follows from super-antisymmetry)
    // [one, .]
    alg_.set_bracket(idx_one(), idx_Z(), single(idx_one(), Scalar(2)));
    for (int a = 0; a < 8; ++a)
        alg_.set_bracket(idx_one(), idx_spinor_dual(a), single(idx_spinor(a), Scalar(-1)));
    alg_.set_bracket(idx_one(), idx_one_dual(), single(idx_Z(), Scalar(1)));

    // [s_a, .]
    for (int a = 0; a < 8; ++a) {
        SpinVec sa = cliff_->basis_spinor(a);
        for (int b = a; b < 8; ++b) {
            Scalar g = cliff_->pair(sa, cliff_->basis_spinor(b));
            alg_.set_bracket(idx_spinor(a), idx_spinor(b), single(idx_one(), g));
        }
        for (int k = 0; k < 21; ++k) {
            const ScalarMat& sk = cliff_->so_spin(k);
            std::vector<std::pair<int, Scalar>> val;
            for (int r = 0; r < 8; ++r)
                if (!sk.at(r, a).is_zero()) val.push_back({idx_spinor(r), -sk.at(r, a)});
            alg_.set_bracket(idx_spinor(a), idx_so(k), std::move(val));
        }
        alg_.set_bracket(idx_spinor(a), idx_Z(), single(idx_spinor(a), Scalar(1)));
        for (int b = 0; b < 8; ++b) {
            // [s_a, s_b+] = [s_b+, s_a] = (1/3) omega2(s_b, s_a) - (1/2) <s_b,s_a> Z
            SpinVec sb = cliff_->basis_spinor(b);
            auto om = so_coords_of_omega2(sb, sa);
            std::vector<std::pair<int, Scalar>> val;
            for (int k = 0; k < 21; ++k)
                if (!om[static_cast<size_t>(k)].is_zero())
                    val.push_back({idx_so(k), Scalar(1, 3) * om[static_cast<size_t>(k)]});
            Scalar g = cliff_->pair(sb, sa);
            if (!g.is_zero()) val.push_back({idx_Z(), Scalar(-1, 2) * g});
            alg_.set_bracket(idx_spinor(a), idx_spinor_dual(b), std::move(val));
        }
        alg_.set_bracket(idx_spinor(a), idx_one_dual(), single(idx_spinor_dual(a), Scalar(-1)));
    }

    // [so, .]
    for (int k = 0; k < 21; ++k) {
        for (int l = k + 1; l < 21; ++l) {
            ScalarMat comm = cliff_->so_matrix(k).commutator(cliff_->so_matrix(l));
            auto x = cliff_->so_coordinates(comm);
            std::vector<std::pair<int, Scalar>> val;
            for (int m = 0; m < 21; ++m)
                if (!x[static_cast<size_t>(m)].is_zero()) val.push_back({idx_so(m), x[static_cast<size_t>(m)]});
            alg_.set_bracket(idx_so(k), idx_so(l), std::move(val));
        }
        const ScalarMat& sk = cliff_->so_spin(k);
        for (int a = 0; a < 8; ++a) {
            std::vector<std::pair<int, Scalar>> val;
            for (int r = 0; r < 8; ++r)
                if (!sk.at(r, a).is_zero()) val.push_back({idx_spinor_dual(r), sk.at(r, a)});
            alg_.set_bracket(idx_so(k), idx_spinor_dual(a), std::move(val));
        }
    }

    // [Z, .]
    for (int a = 0; a < 8; ++a)
        alg_.set_bracket(idx_Z(), idx_spinor_dual(a), single(idx_spinor_dual(a), Scalar(1)));
    alg_.set_bracket(idx_Z(), idx_one_dual(), single(idx_one_dual(), Scalar(2)));

    // [s_a+, s_b+]
    for (int a = 0; a < 8; ++a)
        for (int b = a; b < 8; ++b) {
            Scalar g = cliff_->pair(cliff_->basis_spinor(a), cliff_->basis_spinor(b));
            alg_.set_bracket(idx_spinor_dual(a), idx_spinor_dual(b), single(idx_one_dual(), g));
        }

    alg_.complete_by_antisymmetry();

    // Cartan: H_j = -(e_j ^ f_j) wedges plus Z
    std::vector<int> cart;
    for (int k = 0; k < 21; ++k) {
        auto [p, q] = cliff_->so_label(k);
        if (p + q == 6) cart.push_back(idx_so(k));
    }
    cart.push_back(idx_Z());
    alg_.mark_cartan(std::move(cart));
}

Report F4Algebra::verify_brackets() const {
    Report rep;
    rep.command = "f4-brackets";
    auto [e, o] = alg_.super_dim();
    rep.add("super_dim", "24|16", std::to_string(e) + "|" + std::to_string(o));

    // [one+, one] = -Z
    auto& v = alg_.bracket(idx_one_dual(), idx_one());
    bool ok = v.size() == 1 && v[0].first == idx_Z() && v[0].second == Scalar(-1);
    rep.add_bool("bracket_onedual_one_is_minus_Z", ok);

    // [Z, s] = -s on degree -1
    bool zok = true;
    for (int a = 0; a < 8; ++a) {
        auto& w = alg_.bracket(idx_Z(), idx_spinor(a));
        if (!(w.size() == 1 && w[0].first == idx_spinor(a) && w[0].second == Scalar(-1))) zok = false;
    }
    rep.add_bool("Z_eigenvalue_minus1_on_gm1", zok);

    // [s+, t] for (s,t) = (phi0, psi0): (1/3) omega2 - (1/2) Z
    auto& st = alg_.bracket(idx_spinor_dual(0), idx_spinor(4));
    Scalar zc;
    bool has_so = false;
    for (auto& [k, c] : st) {
        if (k == idx_Z()) zc = c;
        if (k >= idx_so(0) && k < idx_so(0) + 21 && !c.is_zero()) has_so = true;
    }
    rep.add("sdual_t_Z_coefficient", "-1/2", zc.str());
    rep.add_bool("sdual_t_has_so_part", has_so);
    return rep;
}

Report F4Algebra::verify_super_jacobi(bool parallel) const {
    Report rep;
    rep.command = "super-jacobi";
    const int n = alg_.dim();
    std::vector<long> bad(static_cast<size_t>(n), 0);
    std::vector<std::string> first_bad(static_cast<size_t>(n));
    parallel_for(n, parallel, [&](long xi) {
        int x = static_cast<int>(xi);
        int px = alg_.element(x).parity == Parity::Odd ? 1 : 0;
        std::vector<Scalar> acc(static_cast<size_t>(n));
        for (int y = 0; y < n; ++y) {
            int py = alg_.element(y).parity == Parity::Odd ? 1 : 0;
            for (int z = 0; z < n; ++z) {
                int pz = alg_.element(z).parity == Parity::Odd ? 1 : 0;
                std::fill(acc.begin(), acc.end(), Scalar());
                // (-1)^{xz} [x,[y,z]] + (-1)^{yx} [y,[z,x]] + (-1)^{zy} [z,[x,y]]
                auto term = [&](int a, int b, int c, int sign_exp) {
                    for (auto& [m, cm] : alg_.bracket(b, c))
                        for (auto& [k, ck] : alg_.bracket(a, m)) {
                            Scalar v = cm * ck;
                            acc[static_cast<size_t>(k)] += (sign_exp & 1) ? -v : v;
                        }
                };
                term(x, y, z, px * pz);
                term(y, z, x, py * px);
                term(z, x, y, pz * py);
                for (auto& s : acc)
                    if (!s.is_zero()) {
                        bad[static_cast<size_t>(xi)] += 1;
                        if (first_bad[static_cast<size_t>(xi)].empty())
                            first_bad[static_cast<size_t>(xi)] = "(" + alg_.element(x).name + "," +
                                                                 alg_.element(y).name + "," +
                                                                 alg_.element(z).name + ")";
                        break;
                    }
            }
        }
    });
    long total_bad = 0;
    std::string witness = "none";
    for (int x = 0; x < n; ++x) {
        total_bad += bad[static_cast<size_t>(x)];
        if (witness == "none" && !first_bad[static_cast<size_t>(x)].empty())
            witness = first_bad[static_cast<size_t>(x)];
    }
    rep.add("jacobi_triples_checked", "64000", std::to_string(static_cast<long>(n) * n * n));
    rep.add("jacobi_failures", "0", std::to_string(total_bad));
    if (total_bad > 0) rep.add("first_failing_triple", "none", witness);
    return rep;
}

F4Algebra::RootDecomposition F4Algebra::root_decomposition() const {
    const int n = alg_.dim();
    // Cartan action vectors: ad(H_j) with H_j = -(e_j ^ f_j), and ad(Z)
    std::vector<std::vector<Scalar>> h(4, std::vector<Scalar>(static_cast<size_t>(n)));
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 21; ++k) {
            auto [p, q] = cliff_->so_label(k);
            if (p == j && q == 6 - j) h[static_cast<size_t>(j)][static_cast<size_t>(idx_so(k))] = Scalar(-1);
        }
    }
    h[3][static_cast<size_t>(idx_Z())] = Scalar(1);

    RootDecomposition out;
    out.cartan = alg_.cartan();
    for (int x = 0; x < n; ++x) {
        if (std::find(out.cartan.begin(), out.cartan.end(), x) != out.cartan.end()) continue;
        std::vector<Scalar> ex(static_cast<size_t>(n));
        ex[static_cast<size_t>(x)] = Scalar(1);
        Weight w;
        for (int j = 0; j < 4; ++j) {
            auto br = alg_.bracket(h[static_cast<size_t>(j)], ex);
            // must be an exact multiple of e_x
            Scalar ev = br[static_cast<size_t>(x)];
            br[static_cast<size_t>(x)] = Scalar();
            for (auto& s : br)
                if (!s.is_zero())
                    throw std::domain_error("root_decomposition: Cartan action not diagonal");
            if (!ev.is_rational())
                throw std::domain_error("root_decomposition: non-rational eigenvalue");
            if (j < 3) w.c[static_cast<size_t>(j)] = ev.re_rat();
            else w.c[3] = ev.re_rat() / 2;  // delta(Z) = 2
        }
        out.root_spaces.push_back({w, x});
    }
    return out;
}

Report F4Algebra::verify_root_decomposition() const {
    Report rep;
    rep.command = "root-decomposition";
    auto dec = root_decomposition();
    rep.add("root_space_count", "36", std::to_string(dec.root_spaces.size()));
    rep.add("cartan_dim", "4", std::to_string(dec.cartan.size()));

    const RootSystem& rs = RootSystem::instance();
    std::multiset<Weight> got_even, got_odd, want_even(rs.even.begin(), rs.even.end()),
        want_odd(rs.odd.begin(), rs.odd.end());
    for (auto& [w, x] : dec.root_spaces) {
        if (alg_.element(x).parity == Parity::Odd) got_odd.insert(w);
        else got_even.insert(w);
    }
    rep.add_bool("even_roots_match", got_even == want_even);
    rep.add_bool("odd_roots_match", got_odd == want_odd);

    // degree -2 carries the root -delta
    bool found = false;
    for (auto& [w, x] : dec.root_spaces)
        if (x == idx_one()) {
            Weight md;
            md.c[3] = -1;
            found = (w == md);
        }
    rep.add_bool("g_minus2_root_is_minus_delta", found);
    return rep;
}

SuperLieAlgebra F4Algebra::regrade(const SimpleSystem& pi, const std::set<int>& Ip) const {
    auto degs = root_degrees(pi, Ip);
    std::map<Weight, long> degree_of;
    for (auto& [w, d] : degs) degree_of[w] = d;

    auto dec = root_decomposition();
    SuperLieAlgebra out = alg_;
    // rebuild with new degrees
    SuperLieAlgebra fresh;
    std::vector<long> newdeg(static_cast<size_t>(alg_.dim()), 0);
    for (auto& [w, x] : dec.root_spaces) {
        auto it = degree_of.find(w);
        if (it == degree_of.end()) throw std::domain_error("regrade: weight is not a root");
        newdeg[static_cast<size_t>(x)] = it->second;
    }
    for (int i = 0; i < alg_.dim(); ++i) {
        auto& b = alg_.element(i);
        fresh.add_element(b.name, b.parity, newdeg[static_cast<size_t>(i)]);
    }
    for (int i = 0; i < alg_.dim(); ++i)
        for (int j = 0; j < alg_.dim(); ++j) {
            auto& v = alg_.bracket(i, j);
            if (!v.empty()) fresh.set_bracket(i, j, v);
        }
    fresh.mark_cartan(alg_.cartan());
    return fresh;
}

Report F4Algebra::verify_regrade(SystemLabel l, const std::set<int>& Ip,
                                 const GradingDims& expected) const {
    Report rep;
    std::ostringstream nm;
    nm << "regrade-" << to_string(l) << "-{";
    for (int i : Ip) nm << i;
    nm << "}";
    rep.command = nm.str();

    SuperLieAlgebra g = regrade(simple_system(l), Ip);
    std::ostringstream got;
    for (long k = -expected.depth; k <= expected.depth; ++k) {
        auto [e, o] = g.graded_dim(k);
        if (k > -expected.depth) got << ",";
        got << e << "|" << o;
    }
    rep.add("graded_dims", expected.str(), got.str());

    // brackets respect degrees
    bool graded = true;
    for (int i = 0; i < g.dim() && graded; ++i)
        for (int j = 0; j < g.dim(); ++j) {
            long want = g.element(i).degree + g.element(j).degree;
            for (auto& [k, c] : g.bracket(i, j))
                if (g.element(k).degree != want) { graded = false; break; }
        }
    rep.add_bool("brackets_respect_degrees", graded);
    return rep;
}

std::vector<std::vector<Scalar>> F4Algebra::centralizer(const SuperLieAlgebra& alg,
                                                        const std::vector<int>& span) const {
    const int n = alg.dim();
    std::vector<std::vector<Scalar>> out;
    for (Parity par : {Parity::Even, Parity::Odd}) {
        std::vector<int> cols;
        for (int i = 0; i < n; ++i)
            if (alg.element(i).parity == par) cols.push_back(i);
        ScalarMat m(static_cast<int>(span.size()) * n, static_cast<int>(cols.size()));
        for (size_t s = 0; s < span.size(); ++s)
            for (size_t ci = 0; ci < cols.size(); ++ci)
                for (auto& [k, c] : alg.bracket(cols[ci], span[s]))
                    m.at(static_cast<int>(s) * n + k, static_cast<int>(ci)) = c;
        RowEchelon re(m);
        for (auto& kv : re.kernel_basis()) {
            std::vector<Scalar> full(static_cast<size_t>(n));
            for (size_t ci = 0; ci < cols.size(); ++ci) full[static_cast<size_t>(cols[ci])] = kv[ci];
            out.push_back(std::move(full));
        }
    }
    return out;
}

Report F4Algebra::verify_centralizers() const {
    Report rep;
    rep.command = "centralizers";
    SuperLieAlgebra mixed = regrade(simple_system(SystemLabel::VI), {4});

    auto parity_dims = [&](const std::vector<std::vector<Scalar>>& vecs) {
        int e = 0, o = 0;
        for (auto& v : vecs) {
            bool odd = false, even = false;
            for (int i = 0; i < mixed.dim(); ++i) {
                if (v[static_cast<size_t>(i)].is_zero()) continue;
                (mixed.element(i).parity == Parity::Odd ? odd : even) = true;
            }
            if (odd && !even) ++o;
            else if (even && !odd) ++e;
        }
        return std::to_string(e) + "|" + std::to_string(o);
    };

    std::vector<int> m_idx;
    for (int i = 0; i < mixed.dim(); ++i)
        if (mixed.element(i).degree < 0) m_idx.push_back(i);
    auto zm = centralizer(mixed, m_idx);
    rep.add("centralizer_of_m_dims", "1|0", parity_dims(zm));
    // it must be the center of m itself, i.e. contained in degree -2
    bool in_g2 = true;
    for (auto& v : zm)
        for (int i = 0; i < mixed.dim(); ++i)
            if (!v[static_cast<size_t>(i)].is_zero() && mixed.element(i).degree != -2) in_g2 = false;
    rep.add_bool("centralizer_of_m_is_center_of_m", in_g2);

    std::vector<int> m1even;
    for (int i = 0; i < mixed.dim(); ++i)
        if (mixed.element(i).degree == -1 && mixed.element(i).parity == Parity::Even)
            m1even.push_back(i);
    auto zc = centralizer(mixed, m1even);
    rep.add("centralizer_of_m1_even_dims", "4|4", parity_dims(zc));

    // whole algebra: trivial centralizer (simplicity proxy)
    std::vector<int> all;
    for (int i = 0; i < mixed.dim(); ++i) all.push_back(i);
    auto za = centralizer(mixed, all);
    rep.add("centralizer_of_g_dim", "0", std::to_string(za.size()));
    return rep;
}

Report F4Algebra::verify_transitivity_and_generation() const {
    Report rep;
    rep.command = "transitivity";
    struct Case {
        const char* name;
        SystemLabel l;
        std::set<int> Ip;
    };
    for (auto& cs : {Case{"odd", SystemLabel::I, {1}}, Case{"mixed", SystemLabel::VI, {4}}}) {
        SuperLieAlgebra g = regrade(simple_system(cs.l), cs.Ip);
        const int n = g.dim();
        auto gm1 = g.degree_indices(-1);
        auto gm2 = g.degree_indices(-2);

        // [g_{-1}, g_{-1}] spans g_{-2}
        ScalarMat span(static_cast<int>(gm1.size() * gm1.size()), static_cast<int>(gm2.size()));
        int row = 0;
        for (int a : gm1)
            for (int b : gm1) {
                for (auto& [k, c] : g.bracket(a, b))
                    for (size_t t = 0; t < gm2.size(); ++t)
                        if (gm2[t] == k) span.at(row, static_cast<int>(t)) = c;
                ++row;
            }
        rep.add(std::string(cs.name) + "_bracket_generation_rank", std::to_string(gm2.size()),
                std::to_string(span.rank()));

        // transitivity: X in p with [X, g_{-1}] = 0 implies X = 0
        std::vector<int> p_idx;
        for (int i = 0; i < n; ++i)
            if (g.element(i).degree >= 0) p_idx.push_back(i);
        ScalarMat m(static_cast<int>(gm1.size()) * n, static_cast<int>(p_idx.size()));
        for (size_t s = 0; s < gm1.size(); ++s)
            for (size_t ci = 0; ci < p_idx.size(); ++ci)
                for (auto& [k, c] : g.bracket(p_idx[ci], gm1[s]))
                    m.at(static_cast<int>(s) * n + k, static_cast<int>(ci)) = c;
        rep.add(std::string(cs.name) + "_transitivity_kernel", "0",
                std::to_string(p_idx.size() - static_cast<size_t>(m.rank())));
    }
    return rep;
}

std::optional<Scalar> F4Algebra::freudenthal_constant() const {
    QuarticTensor q = cliff_->cayley_quartic();
    const int n = alg_.dim();
    std::optional<Scalar> ratio;

    static const int perms[24][4] = {
        {0,1,2,3},{0,1,3,2},{0,2,1,3},{0,2,3,1},{0,3,1,2},{0,3,2,1},
        {1,0,2,3},{1,0,3,2},{1,2,0,3},{1,2,3,0},{1,3,0,2},{1,3,2,0},
        {2,0,1,3},{2,0,3,1},{2,1,0,3},{2,1,3,0},{2,3,0,1},{2,3,1,0},
        {3,0,1,2},{3,0,2,1},{3,1,0,2},{3,1,2,0},{3,2,0,1},{3,2,1,0}};
    static const int signs[24] = {1,-1,-1,1,1,-1, -1,1,1,-1,-1,1, 1,-1,-1,1,1,-1, -1,1,1,-1,-1,1};

    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                for (int d = c + 1; d < 8; ++d) {
                    int args[4] = {a, b, c, d};
                    std::vector<Scalar> acc(static_cast<size_t>(n));
                    for (int p = 0; p < 24; ++p) {
                        std::vector<Scalar> cur(static_cast<size_t>(n));
                        cur[static_cast<size_t>(idx_one_dual())] = Scalar(1);
                        for (int step = 0; step < 4; ++step) {
                            std::vector<Scalar> sv(static_cast<size_t>(n));
                            sv[static_cast<size_t>(idx_spinor(args[perms[p][step]]))] = Scalar(1);
                            cur = alg_.bracket(cur, sv);
                        }
                        for (int i = 0; i < n; ++i)
                            acc[static_cast<size_t>(i)] +=
                                (signs[p] < 0) ? -cur[static_cast<size_t>(i)] : cur[static_cast<size_t>(i)];
                    }
                    // result must be a multiple of `one`
                    Scalar lhs = Scalar(1, 24) * acc[static_cast<size_t>(idx_one())];
                    acc[static_cast<size_t>(idx_one())] = Scalar();
                    for (auto& s : acc)
                        if (!s.is_zero()) return std::nullopt;
                    uint8_t mask = static_cast<uint8_t>((1u << a) | (1u << b) | (1u << c) | (1u << d));
                    Scalar qv = q.component(mask);
                    if (qv.is_zero()) {
                        if (!lhs.is_zero()) return std::nullopt;
                    } else {
                        Scalar r = lhs / qv;
                        if (!ratio) ratio = r;
                        else if (*ratio != r) return std::nullopt;
                    }
                }
    return ratio;
}

Report F4Algebra::freudenthal_check() const {
    Report rep;
    rep.command = "freudenthal";
    auto c = freudenthal_constant();
    rep.add_bool("four_bracket_proportional_to_quartic", c.has_value());
    if (c) {
        rep.add("proportionality_constant_recorded", c->str(), c->str());
        bool sixth = (*c == Scalar(1, 6)) || (*c == Scalar(-1, 6));
        rep.add_bool("constant_is_plus_minus_one_sixth", sixth);
    }
    return rep;
}

std::string F4Algebra::structure_constants_json() const {
    nlohmann::ordered_json j;
    j["dimension"] = {{"even", 24}, {"odd", 16}};
    j["basis"] = nlohmann::ordered_json::array();
    for (auto& b : alg_.basis()) {
        j["basis"].push_back({{"name", b.name},
                              {"parity", b.parity == Parity::Odd ? "odd" : "even"},
                              {"degree", b.degree}});
    }
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    j["brackets"] = nlohmann::ordered_json::array();
    for (int i = 0; i < alg_.dim(); ++i)
        for (int k = 0; k < alg_.dim(); ++k) {
            auto& v = alg_.bracket(i, k);
            if (v.empty()) continue;
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (auto& [t, c] : v)
                terms.push_back({{"index", t},
                                 {"coeff", {rat(c.re_rat()), rat(c.im_rat()), rat(c.re_s2()), rat(c.im_s2())}}});
            j["brackets"].push_back({{"i", i}, {"j", k}, {"value", terms}});
        }
    return j.dump(2);
}

const F4Algebra& f4() {
    static const F4Algebra alg;
    return alg;
}

} // namespace superjet
