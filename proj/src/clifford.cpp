#include "superjet/clifford.hpp"
#include "superjet/parallel.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace superjet {

namespace {

// Spin basis (phi_0..phi_3, psi_0..psi_3) as signed exterior monomials over
// the isotropic frame covectors e^1,e^2,e^3 (bits 0,1,2):
// (1, e^1, e^2, e^3, -e^123, e^23, e^31, e^12).
struct EForm {
    uint8_t mask;
    int sign;
};
constexpr EForm kSpinBasis[8] = {
    {0b000, +1}, {0b001, +1}, {0b010, +1}, {0b100, +1},
    {0b111, -1}, {0b110, +1}, {0b101, -1}, {0b011, +1},
};

int spin_index_of_mask(uint8_t mask) {
    for (int a = 0; a < 8; ++a)
        if (kSpinBasis[a].mask == mask) return a;
    throw std::logic_error("spin basis lookup");
}

int bits_below(uint8_t mask, int bit) { return __builtin_popcount(mask & ((1u << bit) - 1)); }

} // namespace

CliffordModel::CliffordModel() {
    const Scalar s2 = Scalar::sqrt2();
    const Scalar i = Scalar::i();

    // Clifford action of the split frame on the spin module:
    //   e_j . phi = -sqrt2 iota_{e_j} phi,  f_j . phi = +sqrt2 e^j ^ phi,
    //   R . phi = +/- i phi on even/odd exterior degree.
    for (int k = 0; k < 7; ++k) split_act_[static_cast<size_t>(k)] = ScalarMat(8, 8);
    for (int col = 0; col < 8; ++col) {
        const EForm b = kSpinBasis[col];
        for (int j = 0; j < 3; ++j) {
            uint8_t bit = static_cast<uint8_t>(1u << j);
            if (b.mask & bit) {  // contraction hits
                uint8_t m = static_cast<uint8_t>(b.mask & ~bit);
                int sgn = (bits_below(b.mask, j) % 2) ? -1 : 1;
                int row = spin_index_of_mask(m);
                Scalar v = -s2;
                if (sgn * b.sign * kSpinBasis[row].sign < 0) v = -v;
                split_act_[static_cast<size_t>(j)].at(row, col) += v;
            } else {  // wedge hits
                uint8_t m = static_cast<uint8_t>(b.mask | bit);
                int sgn = (bits_below(b.mask, j) % 2) ? -1 : 1;
                int row = spin_index_of_mask(m);
                Scalar v = s2;
                if (sgn * b.sign * kSpinBasis[row].sign < 0) v = -v;
                // split index of f_j is 6 - j  (order e1,e2,e3,R,f3,f2,f1)
                split_act_[static_cast<size_t>(6 - j)].at(row, col) += v;
            }
        }
        Scalar r = (__builtin_popcount(b.mask) % 2 == 0) ? i : -i;
        split_act_[3].at(col, col) = r;
    }

    // Orthonormal frame over Q(i,sqrt2):
    //   a_j = (e_j + f_j)/sqrt2,  b_j = (e_j - f_j)/(i sqrt2),  and R.
    // Ordered (a1, a2, a3, R, b3, b2, b1).
    const Scalar half_s2(mpq_class(0), mpq_class(0), mpq_class(1, 2), mpq_class(0));    // 1/sqrt2
    const Scalar m_half_is2(mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(-1, 2)); // 1/(i sqrt2)
    for (int mu = 0; mu < 7; ++mu) ortho_[static_cast<size_t>(mu)].assign(7, Scalar());
    for (int j = 0; j < 3; ++j) {
        ortho_[static_cast<size_t>(j)][static_cast<size_t>(j)] = half_s2;
        ortho_[static_cast<size_t>(j)][static_cast<size_t>(6 - j)] = half_s2;
        ortho_[static_cast<size_t>(6 - j)][static_cast<size_t>(j)] = m_half_is2;
        ortho_[static_cast<size_t>(6 - j)][static_cast<size_t>(6 - j)] = -m_half_is2;
    }
    ortho_[3][3] = Scalar(1);

    for (int mu = 0; mu < 7; ++mu) gamma_[static_cast<size_t>(mu)] = action_matrix(ortho_[static_cast<size_t>(mu)]);

    // Pin the module: the volume element must act as -Id; flip the last
    // frame vector if the product comes out as +Id.
    ScalarMat vol = gamma_[0];
    for (int mu = 1; mu < 7; ++mu) vol = vol * gamma_[static_cast<size_t>(mu)];
    if (vol == ScalarMat::identity(8)) {
        orientation_flipped_ = true;
        for (auto& c : ortho_[6]) c = -c;
        gamma_[6] = -gamma_[6];
    } else if (vol != -ScalarMat::identity(8)) {
        throw std::logic_error("volume element does not act by +/-Id");
    }

    // so(V) basis: split wedges b_p ^ b_q (p < q), 7x7 in the split frame
    // and the half-Clifford spin representation.
    for (int p = 0; p < 7; ++p)
        for (int q = p + 1; q < 7; ++q) so_pairs_.push_back({p, q});
    for (auto& [p, q] : so_pairs_) {
        ScalarMat m(7, 7);
        // (v ^ w) u = g(v,u) w - g(w,u) v with g anti-diagonal
        m.at(q, 6 - p) += Scalar(1);
        m.at(p, 6 - q) -= Scalar(1);
        so_mat_.push_back(m);
        const ScalarMat& gp = split_act_[static_cast<size_t>(p)];
        const ScalarMat& gq = split_act_[static_cast<size_t>(q)];
        so_spin_.push_back(Scalar(1, 4) * (gp * gq - gq * gp));
    }
}

SpinVec CliffordModel::act(const std::vector<Scalar>& v, const SpinVec& s) const {
    return action_matrix(v).apply(s);
}

ScalarMat CliffordModel::action_matrix(const std::vector<Scalar>& v) const {
    ScalarMat m(8, 8);
    for (int k = 0; k < 7; ++k)
        if (!v[static_cast<size_t>(k)].is_zero())
            m = m + v[static_cast<size_t>(k)] * split_act_[static_cast<size_t>(k)];
    return m;
}

Scalar CliffordModel::pair(const SpinVec& s, const SpinVec& t) const {
    Scalar out;
    for (int a = 0; a < 4; ++a) {
        out += s[static_cast<size_t>(a)] * t[static_cast<size_t>(a + 4)];
        out += s[static_cast<size_t>(a + 4)] * t[static_cast<size_t>(a)];
    }
    return out;
}

SpinVec CliffordModel::basis_spinor(int a) const {
    SpinVec s(8);
    s[static_cast<size_t>(a)] = Scalar(1);
    return s;
}

std::vector<Scalar> CliffordModel::so_coordinates(const ScalarMat& m) const {
    std::vector<Scalar> x;
    x.reserve(21);
    for (auto& [p, q] : so_pairs_) x.push_back(m.at(q, 6 - p));
    ScalarMat rec(7, 7);
    for (size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) rec = rec + x[k] * so_mat_[k];
    if (rec != m) throw std::domain_error("so_coordinates: matrix not in so(V)");
    return x;
}

ScalarMat CliffordModel::spin_rep(const ScalarMat& m) const {
    auto x = so_coordinates(m);
    ScalarMat out(8, 8);
    for (size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) out = out + x[k] * so_spin_[k];
    return out;
}

ScalarMat CliffordModel::gamma_of(uint8_t mask) const {
    ScalarMat out = ScalarMat::identity(8);
    for (int mu = 0; mu < 7; ++mu)
        if (mask & (1u << mu)) out = out * gamma_[static_cast<size_t>(mu)];
    return out;
}

ScalarMat CliffordModel::sigma(const Multivector& w) const {
    ScalarMat out(8, 8);
    for (auto& [mask, c] : w.comp) {
        if (__builtin_popcount(mask) != 2) continue;
        out = out + (Scalar(1, 2) * c) * gamma_of(mask);
    }
    return out;
}

ScalarMat CliffordModel::bivector_matrix(const Multivector& w) const {
    ScalarMat out(7, 7);
    for (auto& [mask, c] : w.comp) {
        if (__builtin_popcount(mask) != 2) continue;
        int mu = __builtin_ctz(mask);
        int nu = __builtin_ctz(mask & (mask - 1));
        const auto& v1 = ortho_[static_cast<size_t>(mu)];
        const auto& v2 = ortho_[static_cast<size_t>(nu)];
        // c * (v1 ^ v2) as a split-frame matrix
        for (int col = 0; col < 7; ++col) {
            const Scalar& g1 = v1[static_cast<size_t>(6 - col)];
            const Scalar& g2 = v2[static_cast<size_t>(6 - col)];
            for (int row = 0; row < 7; ++row) {
                if (!g1.is_zero() && !v2[static_cast<size_t>(row)].is_zero())
                    out.at(row, col) += c * g1 * v2[static_cast<size_t>(row)];
                if (!g2.is_zero() && !v1[static_cast<size_t>(row)].is_zero())
                    out.at(row, col) -= c * g2 * v1[static_cast<size_t>(row)];
            }
        }
    }
    return out;
}

ScalarMat CliffordModel::clifford_matrix(const Multivector& w) const {
    ScalarMat out(8, 8);
    for (auto& [mask, c] : w.comp) out = out + c * gamma_of(mask);
    return out;
}

Multivector CliffordModel::omega_p(int p, const SpinVec& s, const SpinVec& t) const {
    if (p < 0 || p > 3) throw std::invalid_argument("omega_p: p out of range");
    Multivector out;
    for (uint8_t mask = 0; mask < (1u << 7); ++mask) {
        if (__builtin_popcount(mask) != p) continue;
        out.add(mask, pair(s, gamma_of(mask).apply(t)));
    }
    return out;
}

Report CliffordModel::verify_gamma_relations() const {
    Report rep;
    rep.command = "gamma-relations";
    bool anti = true;
    for (int mu = 0; mu < 7; ++mu)
        for (int nu = 0; nu < 7; ++nu) {
            ScalarMat lhs = gamma_[static_cast<size_t>(mu)].anticommutator(gamma_[static_cast<size_t>(nu)]);
            ScalarMat rhs = (mu == nu) ? Scalar(-2) * ScalarMat::identity(8) : ScalarMat(8, 8);
            if (lhs != rhs) anti = false;
        }
    rep.add_bool("gamma_anticommutation_49_pairs", anti);
    ScalarMat vol = gamma_[0];
    for (int mu = 1; mu < 7; ++mu) vol = vol * gamma_[static_cast<size_t>(mu)];
    rep.add_bool("volume_acts_as_minus_id", vol == -ScalarMat::identity(8));
    const char* orient = orientation_flipped_ ? "last-frame-vector-negated" : "standard";
    rep.add("frame_orientation_choice", orient, orient);

    // sigma(e_mu ^ e_nu) = (1/2) Gamma_{mu nu} in the orthonormal frame
    bool sig = true;
    for (int mu = 0; mu < 7 && sig; ++mu)
        for (int nu = mu + 1; nu < 7; ++nu) {
            Multivector w;
            w.add(static_cast<uint8_t>((1u << mu) | (1u << nu)), Scalar(1));
            if (sigma(w) != spin_rep(bivector_matrix(w))) { sig = false; break; }
        }
    rep.add_bool("sigma_equals_half_gamma", sig);
    return rep;
}

Report CliffordModel::verify_fierz(bool parallel) const {
    Report rep;
    rep.command = "fierz";
    std::vector<int> bad(64, 0);
    parallel_for(64, parallel, [&](long k) {
        int a = static_cast<int>(k) / 8, b = static_cast<int>(k) % 8;
        SpinVec s = basis_spinor(a), t = basis_spinor(b);
        // rank-one endomorphism s tbar : x -> <t,x> s
        ScalarMat lhs(8, 8);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                SpinVec x = basis_spinor(c);
                lhs.at(r, c) = s[static_cast<size_t>(r)] * pair(t, x);
            }
        ScalarMat rhs(8, 8);
        for (int p = 0; p <= 3; ++p)
            rhs = rhs + clifford_matrix(omega_p(p, s, t));
        rhs = Scalar(1, 8) * rhs;
        if (lhs != rhs) bad[static_cast<size_t>(k)] = 1;
    });
    int nbad = 0;
    std::string witness = "none";
    for (int k = 0; k < 64; ++k)
        if (bad[static_cast<size_t>(k)]) {
            ++nbad;
            if (witness == "none")
                witness = "(basis " + std::to_string(k / 8) + "," + std::to_string(k % 8) + ")";
        }
    rep.add("fierz_identity_pairs_failed", "0", std::to_string(nbad));
    if (nbad > 0) rep.add("first_failing_pair", "none", witness);

    // Gamma_{mu nu} Gamma_[p] Gamma^{mu nu} = (7 - (7-2p)^2) Gamma_[p]
    bool contraction = true;
    for (uint8_t mask = 0; mask < (1u << 7); ++mask) {
        int p = __builtin_popcount(mask);
        if (p > 3) continue;
        ScalarMat a = gamma_of(mask);
        ScalarMat acc(8, 8);
        for (int mu = 0; mu < 7; ++mu)
            for (int nu = 0; nu < 7; ++nu) {
                if (mu == nu) continue;
                ScalarMat g = gamma_[static_cast<size_t>(mu)] * gamma_[static_cast<size_t>(nu)];
                acc = acc + g * a * g;
            }
        long factor = 7 - (7 - 2 * static_cast<long>(p)) * (7 - 2 * static_cast<long>(p));
        if (acc != Scalar(factor) * a) contraction = false;
    }
    rep.add_bool("gamma2_contraction_factors", contraction);
    return rep;
}

Report CliffordModel::verify_cubic_spinor_identity() const {
    Report rep;
    rep.command = "cubic-spinor-identity";
    auto holds = [&](const SpinVec& s, const SpinVec& t) {
        Scalar tt = pair(t, t), ts = pair(t, s);
        SpinVec lhs(8);
        for (int r = 0; r < 8; ++r)
            lhs[static_cast<size_t>(r)] = tt * s[static_cast<size_t>(r)] - ts * t[static_cast<size_t>(r)];
        SpinVec rhs = clifford_matrix(omega_p(2, s, t)).apply(t);
        for (int r = 0; r < 8; ++r)
            if (lhs[static_cast<size_t>(r)] != Scalar(1, 3) * rhs[static_cast<size_t>(r)]) return false;
        return true;
    };
    bool basis_ok = true;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            if (!holds(basis_spinor(a), basis_spinor(b))) basis_ok = false;
    rep.add_bool("identity_on_basis_pairs", basis_ok);

    // degree-3 polarization in t: t = t1 + t2 over all basis pairs
    bool polar_ok = true;
    for (int a = 0; a < 8; ++a)
        for (int b1 = 0; b1 < 8; ++b1)
            for (int b2 = b1 + 1; b2 < 8; ++b2) {
                SpinVec t = basis_spinor(b1);
                t[static_cast<size_t>(b2)] = Scalar(1);
                if (!holds(basis_spinor(a), t)) polar_ok = false;
            }
    rep.add_bool("identity_under_polarization", polar_ok);
    return rep;
}

Report CliffordModel::verify_pairing_invariance() const {
    Report rep;
    rep.command = "pairing-invariance";
    bool compat = true;
    for (int k = 0; k < 7 && compat; ++k) {
        const ScalarMat& g = split_act_[static_cast<size_t>(k)];
        for (int a = 0; a < 8 && compat; ++a)
            for (int b = 0; b < 8; ++b) {
                SpinVec s = basis_spinor(a), t = basis_spinor(b);
                if (pair(g.apply(s), t) != -pair(s, g.apply(t))) { compat = false; break; }
            }
    }
    rep.add_bool("clifford_skew_compatibility", compat);

    bool inv = true;
    for (int k = 0; k < so_dim() && inv; ++k) {
        const ScalarMat& a = so_spin_[static_cast<size_t>(k)];
        for (int r = 0; r < 8 && inv; ++r)
            for (int c = 0; c < 8; ++c) {
                SpinVec s = basis_spinor(r), t = basis_spinor(c);
                if (!(pair(a.apply(s), t) + pair(s, a.apply(t))).is_zero()) { inv = false; break; }
            }
    }
    rep.add_bool("so_invariance_of_pairing", inv);
    return rep;
}

namespace {

// Slot bookkeeping for the expected shape of the spin representation in the
// split frame: symbol ids 0..5 are a_{100},a_{110},a_{111},a_{112},a_{122},
// a_{010}; 6..8 are a_{011},a_{012},a_{001}; 9..17 mirror them as b's.
enum Sym {
    A100, A110, A111, A112, A122, A010, A011, A012, A001,
    B100, B110, B111, B112, B122, B010, B011, B012, B001, H, ZERO
};

struct SymEntry { Sym s; int sign; };

// 7x7 generic so(V) matrix pattern in the split frame.
SymEntry so_pattern(int r, int c) {
    static const SymEntry P[7][7] = {
        {{H,1},{A100,1},{A110,1},{A111,1},{A112,1},{A122,1},{ZERO,0}},
        {{B100,1},{H,1},{A010,1},{A011,1},{A012,1},{ZERO,0},{A122,-1}},
        {{B110,1},{B010,1},{H,1},{A001,1},{ZERO,0},{A012,-1},{A112,-1}},
        {{B111,1},{B011,1},{B001,1},{ZERO,0},{A001,-1},{A011,-1},{A111,-1}},
        {{B112,1},{B012,1},{ZERO,0},{B001,-1},{H,-1},{A010,-1},{A110,-1}},
        {{B122,1},{ZERO,0},{B012,-1},{B011,-1},{B010,-1},{H,-1},{A100,-1}},
        {{ZERO,0},{B122,-1},{B112,-1},{B111,-1},{B110,-1},{B100,-1},{H,-1}},
    };
    return P[r][c];
}

// 8x8 expected support pattern of the induced spin matrix.
SymEntry spin_pattern(int r, int c) {
    static const SymEntry P[8][8] = {
        {{H,1},{A111,-1},{A011,-1},{A001,-1},{ZERO,0},{A012,-1},{A112,-1},{A122,-1}},
        {{B111,-1},{H,1},{B100,1},{B110,1},{A012,1},{ZERO,0},{A001,1},{A011,-1}},
        {{B011,-1},{A100,1},{H,1},{B010,1},{A112,1},{A001,-1},{ZERO,0},{A111,1}},
        {{B001,-1},{A110,1},{A010,1},{H,1},{A122,1},{A011,1},{A111,-1},{ZERO,0}},
        {{ZERO,0},{B012,-1},{B112,-1},{B122,-1},{H,1},{B111,1},{B011,1},{B001,1}},
        {{B012,1},{ZERO,0},{B001,-1},{B011,1},{A111,1},{H,1},{A100,-1},{A110,-1}},
        {{B112,1},{B001,1},{ZERO,0},{B111,-1},{A011,1},{B100,-1},{H,1},{A010,-1}},
        {{B122,1},{B011,-1},{B111,1},{ZERO,0},{A001,1},{B110,-1},{B010,-1},{H,1}},
    };
    return P[r][c];
}

} // namespace

Report CliffordModel::verify_spin_matrix_pattern() const {
    Report rep;
    rep.command = "spin-matrix-pattern";

    // support of each root-vector symbol must land inside its tilde slots
    bool support_ok = true;
    for (int sym = A100; sym <= B001; ++sym) {
        ScalarMat x(7, 7);
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 7; ++c) {
                SymEntry e = so_pattern(r, c);
                if (e.s == sym) x.at(r, c) = Scalar(e.sign);
            }
        ScalarMat sp = spin_rep(x);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                if (sp.at(r, c).is_zero()) continue;
                SymEntry e = spin_pattern(r, c);
                if (e.s != sym) support_ok = false;
            }
    }
    rep.add_bool("root_vector_support_matches", support_ok);

    // Cartan: diag with the half-sum weights (+-h1 +-h2 +-h3)/2
    mpq_class h[3] = {mpq_class(1), mpq_class(5), mpq_class(17)};
    ScalarMat cart(7, 7);
    for (int j = 0; j < 3; ++j) {
        cart.at(j, j) = Scalar(h[j]);
        cart.at(6 - j, 6 - j) = Scalar(-h[j]);
    }
    ScalarMat sp = spin_rep(cart);
    auto half = [&](int s1, int s2, int s3) {
        return Scalar(mpq_class(s1 * h[0] + s2 * h[1] + s3 * h[2]) / 2);
    };
    Scalar expect[8] = {half(1, 1, 1),  half(-1, 1, 1),  half(1, -1, 1),  half(1, 1, -1),
                        half(-1, -1, -1), half(1, -1, -1), half(-1, 1, -1), half(-1, -1, 1)};
    bool diag_ok = true;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            if (r == c) {
                if (sp.at(r, c) != expect[r]) diag_ok = false;
            } else if (!sp.at(r, c).is_zero()) {
                diag_ok = false;
            }
        }
    rep.add_bool("cartan_diagonal_half_sums", diag_ok);
    return rep;
}

int CliffordModel::omega_vanishing_rank() const {
    // unknowns: omega in Hom(S, so(V)) = 8 x 21; rows: polarized condition
    // sigma(omega_{e_a}) e_b + sigma(omega_{e_b}) e_a = 0 over a <= b.
    SparseMat sys;
    sys.init(36 * 8, 168);
    int row0 = 0;
    for (int a = 0; a < 8; ++a)
        for (int b = a; b < 8; ++b) {
            for (int k = 0; k < 21; ++k) {
                const ScalarMat& sk = so_spin_[static_cast<size_t>(k)];
                for (int g = 0; g < 8; ++g) {
                    // coefficient of x_{a,k}: [sigma(W_k) e_b]_g
                    sys.add(row0 + g, a * 21 + k, sk.at(g, b));
                    sys.add(row0 + g, b * 21 + k, sk.at(g, a));
                }
            }
            row0 += 8;
        }
    return sparse_rank(std::move(sys));
}

QuarticTensor CliffordModel::cayley_quartic() const {
    // phi^a -> index a, psi^a -> index 4+a
    auto mask4 = [](int a, int b, int c, int d) {
        return static_cast<uint8_t>((1u << a) | (1u << b) | (1u << c) | (1u << d));
    };
    QuarticTensor q;
    q.add(mask4(0, 1, 4, 5), Scalar(1));
    q.add(mask4(0, 2, 4, 6), Scalar(1));
    q.add(mask4(0, 3, 4, 7), Scalar(1));
    q.add(mask4(1, 2, 5, 6), Scalar(-1));
    q.add(mask4(1, 3, 5, 7), Scalar(-1));
    q.add(mask4(2, 3, 6, 7), Scalar(-1));
    q.add(mask4(0, 5, 6, 7), Scalar(-2));
    q.add(mask4(1, 2, 3, 4), Scalar(2));
    return q;
}

namespace {

std::vector<int> mask_indices(uint8_t mask) {
    std::vector<int> v;
    for (int b = 0; b < 8; ++b)
        if (mask & (1u << b)) v.push_back(b);
    return v;
}

// sign of the shuffle (I, complement(I)) relative to (0..7)
int shuffle_sign(uint8_t mask) {
    std::vector<int> perm = mask_indices(mask);
    for (int b = 0; b < 8; ++b)
        if (!(mask & (1u << b))) perm.push_back(b);
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv % 2) ? -1 : 1;
}

// dual pairing on covectors: eta*(w^a, w^b) = [a = b +- 4]
int eta_dual(int a, int b) { return (a == b + 4 || b == a + 4) ? 1 : 0; }

Scalar gram_det4(const std::vector<int>& I, const std::vector<int>& J) {
    // det over the 4x4 pairing submatrix
    ScalarMat m(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m.at(r, c) = Scalar(eta_dual(I[static_cast<size_t>(r)], J[static_cast<size_t>(c)]));
    // cofactor expansion (4x4, exact)
    std::vector<int> cols = {0, 1, 2, 3};
    std::function<Scalar(int, std::vector<int>)> det = [&](int row, std::vector<int> cs) -> Scalar {
        if (cs.empty()) return Scalar(1);
        Scalar acc;
        for (size_t k = 0; k < cs.size(); ++k) {
            const Scalar& v = m.at(row, cs[k]);
            if (v.is_zero()) continue;
            std::vector<int> rest;
            for (size_t j = 0; j < cs.size(); ++j)
                if (j != k) rest.push_back(cs[j]);
            Scalar sub = det(row + 1, rest);
            acc += ((k % 2) ? -v : v) * sub;
        }
        return acc;
    };
    return det(0, cols);
}

} // namespace

Scalar CliffordModel::eta_pairing(const QuarticTensor& a, const QuarticTensor& b) const {
    Scalar out;
    for (auto& [ma, ca] : a.comp)
        for (auto& [mb, cb] : b.comp) {
            Scalar g = gram_det4(mask_indices(ma), mask_indices(mb));
            if (!g.is_zero()) out += ca * cb * g;
        }
    return out;
}

QuarticTensor CliffordModel::star(const QuarticTensor& q) const {
    QuarticTensor out;
    for (uint8_t mask = 0; mask < 255; ++mask) {
        if (__builtin_popcount(mask) != 4) continue;
        // (star q)_{I^c} = s(I) <w^I, q>
        Scalar v;
        auto I = mask_indices(mask);
        for (auto& [mq, cq] : q.comp) {
            Scalar g = gram_det4(I, mask_indices(mq));
            if (!g.is_zero()) v += g * cq;
        }
        if (shuffle_sign(mask) < 0) v = -v;
        out.add(static_cast<uint8_t>(~mask), v);
    }
    return out;
}

namespace {

// evaluate an alternating tensor on an arbitrary index tuple
Scalar eval_quartic(const QuarticTensor& q, int i0, int i1, int i2, int i3) {
    int idx[4] = {i0, i1, i2, i3};
    int sign = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            if (idx[a] == idx[b]) return Scalar();
            if (idx[a] > idx[b]) { std::swap(idx[a], idx[b]); sign = -sign; }
        }
    uint8_t mask = static_cast<uint8_t>((1u << idx[0]) | (1u << idx[1]) | (1u << idx[2]) | (1u << idx[3]));
    Scalar v = q.component(mask);
    return (sign < 0) ? -v : v;
}

} // namespace

QuarticTensor CliffordModel::so_action_on_quartic(int k, const QuarticTensor& q) const {
    const ScalarMat& a = so_spin_[static_cast<size_t>(k)];
    QuarticTensor out;
    for (uint8_t mask = 0; mask < 255; ++mask) {
        if (__builtin_popcount(mask) != 4) continue;
        auto I = mask_indices(mask);
        Scalar v;
        for (int pos = 0; pos < 4; ++pos)
            for (int j = 0; j < 8; ++j) {
                const Scalar& c = a.at(j, I[static_cast<size_t>(pos)]);
                if (c.is_zero()) continue;
                int idx[4] = {I[0], I[1], I[2], I[3]};
                idx[pos] = j;
                Scalar qv = eval_quartic(q, idx[0], idx[1], idx[2], idx[3]);
                if (!qv.is_zero()) v -= c * qv;
            }
        out.add(mask, v);
    }
    return out;
}

Report CliffordModel::verify_cayley_quartic() const {
    Report rep;
    rep.command = "cayley-quartic";
    QuarticTensor q = cayley_quartic();
    rep.add("monomial_count", "8", std::to_string(q.comp.size()));
    rep.add("eta_QQ", "14", eta_pairing(q, q).str());
    QuarticTensor sq = star(q);
    QuarticTensor minus_q;
    for (auto& [m, c] : q.comp) minus_q.add(m, -c);
    rep.add_bool("anti_self_dual", sq == minus_q);
    bool inv = true;
    for (int k = 0; k < so_dim(); ++k)
        if (!so_action_on_quartic(k, q).is_zero()) inv = false;
    rep.add_bool("so7_invariance_21_generators", inv);
    // restriction to the highest weight plane span(phi0, phi2, phi3, psi1)
    Scalar r = eval_quartic(q, 0, 2, 3, 5);
    rep.add("restriction_phi0_phi2_phi3_psi1", "0", r.str());
    return rep;
}

Report CliffordModel::lagrangian_kernel_check() const {
    Report rep;
    rep.command = "lagrangian-kernel";
    QuarticTensor q = cayley_quartic();
    // l = [phi_0]; l-perp excludes psi_0 (index 4)
    std::vector<int> perp = {0, 1, 2, 3, 5, 6, 7};

    // iota_{phi0} Q restricted to l-perp must be -2 psi^1 ^ psi^2 ^ psi^3
    bool restrict_ok = true;
    for (size_t a = 0; a < perp.size(); ++a)
        for (size_t b = a + 1; b < perp.size(); ++b)
            for (size_t c = b + 1; c < perp.size(); ++c) {
                Scalar v = eval_quartic(q, 0, perp[a], perp[b], perp[c]);
                Scalar expect = (perp[a] == 5 && perp[b] == 6 && perp[c] == 7) ? Scalar(-2) : Scalar();
                if (v != expect) restrict_ok = false;
            }
    rep.add_bool("restriction_is_minus2_psi123", restrict_ok);

    // kernel of y -> iota_y iota_{phi0} Q | l-perp
    ScalarMat m(21, 7);
    int row = 0;
    for (size_t b = 0; b < perp.size(); ++b)
        for (size_t c = b + 1; c < perp.size(); ++c) {
            for (size_t y = 0; y < perp.size(); ++y)
                m.at(row, static_cast<int>(y)) = eval_quartic(q, 0, perp[y], perp[b], perp[c]);
            ++row;
        }
    RowEchelon re(m);
    auto kernel = re.kernel_basis();
    rep.add("insertion_kernel_dim", "4", std::to_string(kernel.size()));
    // kernel must be exactly span(phi_0..phi_3) = coordinates {0,1,2,3} of perp
    bool span_ok = kernel.size() == 4;
    for (auto& v : kernel)
        for (size_t y = 4; y < 7; ++y)
            if (!v[y].is_zero()) span_ok = false;
    rep.add_bool("kernel_is_phi_span", span_ok);
    // psi_1 (perp coordinate 4) inserts non-trivially
    bool psi1_nontrivial = false;
    for (size_t b = 0; b < perp.size(); ++b)
        for (size_t c = b + 1; c < perp.size(); ++c)
            if (!eval_quartic(q, 0, 5, perp[b], perp[c]).is_zero()) psi1_nontrivial = true;
    rep.add_bool("psi1_inserts_nontrivially", psi1_nontrivial);
    return rep;
}

const CliffordModel& clifford() {
    static const CliffordModel model;
    return model;
}

} // namespace superjet
