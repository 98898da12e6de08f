#ifndef SUPERJET_JETS_HPP
#define SUPERJET_JETS_HPP

#include "superjet/report.hpp"
#include "superjet/superpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace superjet {

/// Coordinate algebra of a jet superspace of order <= 3 on one even
/// dependent variable: coordinates x^i, u, u_i, u_{ij}, u_{ijk} with the
/// supersymmetric index identifications canonicalized to ascending
/// representatives (u_{ii} = 0 for odd i is the zero coordinate).
class JetContext {
public:
    JetContext(const std::vector<Parity>& independents, int order);

    int order() const { return order_; }
    int num_x() const { return static_cast<int>(xpar_.size()); }
    Parity x_parity(int i) const { return xpar_[static_cast<size_t>(i)]; }
    const VarTablePtr& vars() const { return vt_; }

    int x(int i) const { return x_[static_cast<size_t>(i)]; }
    int u() const { return u_; }
    int u1(int i) const { return u1_[static_cast<size_t>(i)]; }

    /// Canonical second/third-order coordinate lookup: returns (sign, id);
    /// sign = 0 encodes the structurally zero coordinate.
    std::pair<int, int> u2(int i, int j) const;
    std::pair<int, int> u3(int i, int j, int k) const;

    /// All canonical second-order (resp. third-order) coordinate ids.
    const std::vector<int>& u2_ids() const { return u2_ids_; }
    const std::vector<int>& u3_ids() const { return u3_ids_; }
    const std::vector<std::pair<int, int>>& u2_pairs() const { return u2_pairs_; }
    const std::vector<std::array<int, 3>>& u3_triples() const { return u3_triples_; }

    SuperPoly var(int id) const { return SuperPoly::var(vt_, id); }
    SuperPoly zero() const { return SuperPoly(vt_); }
    SuperPoly constant(const Scalar& c) const { return SuperPoly::constant(vt_, c); }

private:
    std::vector<Parity> xpar_;
    int order_;
    std::shared_ptr<VarTable> table_;
    VarTablePtr vt_;
    std::vector<int> x_, u1_;
    int u_;
    std::map<std::pair<int, int>, int> u2_id_;
    std::map<std::array<int, 3>, int> u3_id_;
    std::vector<int> u2_ids_, u3_ids_;
    std::vector<std::pair<int, int>> u2_pairs_;
    std::vector<std::array<int, 3>> u3_triples_;
};

/// Superderivation of the jet coordinate algebra: one polynomial
/// coefficient per coordinate, with a declared parity.
struct SuperVectorField {
    VarTablePtr vt;
    Parity parity = Parity::Even;
    std::map<int, SuperPoly> coeff;

    SuperPoly apply(const SuperPoly& f) const;
    SuperPoly coefficient(int id) const;
    void add(int id, const SuperPoly& p);
    SuperVectorField& operator+=(const SuperVectorField& o);
    friend SuperVectorField operator*(const SuperPoly& f, const SuperVectorField& v);
};

/// Super Lie bracket of vector fields, [X,Y] = XY - (-1)^{|X||Y|} YX.
SuperVectorField field_bracket(const SuperVectorField& a, const SuperVectorField& b);

/// Total derivative in direction i, truncated at the context order:
/// d_{x^i} + u_i d_u + sum u_{ij} d_{u_j} (+ sum u_{ijk} d_{u_{jk}}).
SuperVectorField total_derivative(const JetContext& ctx, int i, int order);

/// Contact supervector field of a first-order generating superfunction.
SuperVectorField contact_field(const JetContext& ctx, const SuperPoly& f);

/// Lagrange bracket on generating superfunctions, [S_f, S_g] = S_{[f,g]}.
SuperPoly lagrange_bracket(const JetContext& ctx, const SuperPoly& f, const SuperPoly& g);

/// Prolongation of the contact field of f to order 2 or 3.
SuperVectorField prolong(const JetContext& ctx, const SuperPoly& f, int order);

/// Insertion of a field into the contact form du - (dx^i) u_i.
SuperPoly contact_form_insertion(const JetContext& ctx, const SuperVectorField& X);

/// Decompose X over the adapted frame (total derivatives, vertical d_{u..}):
/// returns the du- and du_j-direction residues; both vanish iff X lies in
/// the Cartan distribution at the context order.
struct CartanResidues {
    SuperPoly du;                 // residue along d_u
    std::vector<SuperPoly> du1;   // residues along d_{u_j}
    std::vector<SuperPoly> du2;   // residues along d_{u_{jk}} (order 3 only)
    bool in_distribution() const;
};
CartanResidues cartan_residues(const JetContext& ctx, const SuperVectorField& X);

} // namespace superjet

#endif
