#ifndef SUPERJET_CLIFFORD_HPP
#define SUPERJET_CLIFFORD_HPP

#include "superjet/linalg.hpp"
#include "superjet/report.hpp"
#include "superjet/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace superjet {

using SpinVec = std::vector<Scalar>;  // 8 components in the fixed spin basis

/// Element of the exterior algebra over the 7-dimensional orthogonal space,
/// in the orthonormal frame; keys are bitmasks over {0..6}.
struct Multivector {
    std::map<uint8_t, Scalar> comp;

    void add(uint8_t mask, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, ins] = comp.try_emplace(mask, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) comp.erase(it);
        }
    }
    bool is_zero() const { return comp.empty(); }
    friend bool operator==(const Multivector& a, const Multivector& b) { return a.comp == b.comp; }
    Multivector grade(int p) const {
        Multivector g;
        for (auto& [m, c] : comp)
            if (__builtin_popcount(m) == p) g.comp[m] = c;
        return g;
    }
};

/// Alternating 4-tensor on the spin space; keys are ascending 4-subsets of
/// {0..7} as bitmasks.
struct QuarticTensor {
    std::map<uint8_t, Scalar> comp;

    Scalar component(uint8_t mask) const {
        auto it = comp.find(mask);
        return it == comp.end() ? Scalar() : it->second;
    }
    void add(uint8_t mask, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, ins] = comp.try_emplace(mask, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) comp.erase(it);
        }
    }
    bool is_zero() const { return comp.empty(); }
    friend bool operator==(const QuarticTensor& a, const QuarticTensor& b) { return a.comp == b.comp; }
};

/// The 7-dimensional Clifford algebra acting on its 8-dimensional spin
/// module, with the split-frame model (isotropic E and F planes around a
/// unit vector R) and a Q(i,sqrt2)-rational orthonormal frame derived from
/// it. Construction pins the module so the volume element acts as -Id.
class CliffordModel {
public:
    CliffordModel();

    // -- frames ------------------------------------------------------------
    /// Clifford action of the k-th split frame vector (e1,e2,e3,R,f3,f2,f1).
    const ScalarMat& split_action(int k) const { return split_act_[static_cast<size_t>(k)]; }
    /// Split coordinates of the mu-th orthonormal frame vector.
    const std::vector<Scalar>& ortho_vector(int mu) const { return ortho_[static_cast<size_t>(mu)]; }
    /// Gamma matrix of the mu-th orthonormal frame vector.
    const ScalarMat& gamma(int mu) const { return gamma_[static_cast<size_t>(mu)]; }
    /// Whether the frame orientation had to be flipped to get vol = -Id.
    bool orientation_flipped() const { return orientation_flipped_; }

    /// Clifford action of a vector given in split coordinates.
    SpinVec act(const std::vector<Scalar>& v, const SpinVec& s) const;
    ScalarMat action_matrix(const std::vector<Scalar>& v) const;

    // -- pairing -----------------------------------------------------------
    /// The invariant pairing <s,t> (phi^a psi^a convention).
    Scalar pair(const SpinVec& s, const SpinVec& t) const;
    SpinVec basis_spinor(int a) const;

    // -- so(7) -------------------------------------------------------------
    /// Basis of so(V) as split-frame wedges b_p ^ b_q, p < q; 21 elements.
    int so_dim() const { return 21; }
    std::pair<int, int> so_label(int k) const { return so_pairs_[static_cast<size_t>(k)]; }
    /// 7x7 matrix (split frame) of the k-th so(V) basis element.
    const ScalarMat& so_matrix(int k) const { return so_mat_[static_cast<size_t>(k)]; }
    /// Spin representation of the k-th so(V) basis element.
    const ScalarMat& so_spin(int k) const { return so_spin_[static_cast<size_t>(k)]; }
    /// Expand an so(V) matrix (split frame) over the wedge basis.
    std::vector<Scalar> so_coordinates(const ScalarMat& m) const;
    /// Spin representation of an arbitrary so(V) matrix.
    ScalarMat spin_rep(const ScalarMat& m) const;

    /// Gamma matrix of an ascending orthonormal multi-index (bitmask).
    ScalarMat gamma_of(uint8_t mask) const;
    /// sigma of a multivector's grade-2 part, as an 8x8 matrix.
    ScalarMat sigma(const Multivector& w) const;
    /// Multivector -> so(V) matrix in the split frame (grade 2 only).
    ScalarMat bivector_matrix(const Multivector& w) const;
    /// Clifford action of a multivector (sum of Gamma's).
    ScalarMat clifford_matrix(const Multivector& w) const;

    // -- spinor bilinears ----------------------------------------------------
    Multivector omega_p(int p, const SpinVec& s, const SpinVec& t) const;

    // -- verifications -------------------------------------------------------
    Report verify_gamma_relations() const;
    Report verify_fierz(bool parallel = true) const;
    Report verify_cubic_spinor_identity() const;
    Report verify_pairing_invariance() const;
    Report verify_spin_matrix_pattern() const;
    int omega_vanishing_rank() const;

    // -- Cayley quartic ------------------------------------------------------
    QuarticTensor cayley_quartic() const;
    Report verify_cayley_quartic() const;
    Report lagrangian_kernel_check() const;

    /// Hodge star on alternating 4-tensors (orientation vol_S).
    QuarticTensor star(const QuarticTensor& q) const;
    Scalar eta_pairing(const QuarticTensor& a, const QuarticTensor& b) const;
    /// Induced so(V) action on a 4-tensor.
    QuarticTensor so_action_on_quartic(int k, const QuarticTensor& q) const;

private:
    std::array<ScalarMat, 7> split_act_;
    std::array<std::vector<Scalar>, 7> ortho_;
    std::array<ScalarMat, 7> gamma_;
    std::vector<std::pair<int, int>> so_pairs_;
    std::vector<ScalarMat> so_mat_;
    std::vector<ScalarMat> so_spin_;
    bool orientation_flipped_ = false;
};

const CliffordModel& clifford();

} // namespace superjet

#endif
