#ifndef SUPERJET_F4_HPP
#define SUPERJET_F4_HPP

#include "superjet/clifford.hpp"
#include "superjet/linalg.hpp"
#include "superjet/report.hpp"
#include "superjet/rootkit.hpp"
#include "superjet/superpoly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace superjet {

/// Finite-dimensional Lie superalgebra given by a basis with parities and
/// integer degrees plus an exact structure-constant table.
class SuperLieAlgebra {
public:
    struct BasisElement {
        std::string name;
        Parity parity;
        long degree;
    };

    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElement& element(int i) const { return basis_[static_cast<size_t>(i)]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    std::pair<int, int> super_dim() const;

    int add_element(const std::string& name, Parity p, long degree);
    void set_bracket(int i, int j, std::vector<std::pair<int, Scalar>> value);

    /// Structure constants of [e_i, e_j], sparse.
    const std::vector<std::pair<int, Scalar>>& bracket(int i, int j) const;
    /// Bilinear extension to coefficient vectors.
    std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    /// Fill [e_j, e_i] for j > i from super-antisymmetry.
    void complete_by_antisymmetry();

    std::pair<int, int> graded_dim(long degree) const;
    std::vector<int> degree_indices(long degree) const;

    /// Indices marked as the Cartan subalgebra (ad-diagonal elements).
    void mark_cartan(std::vector<int> idx) { cartan_ = std::move(idx); }
    const std::vector<int>& cartan() const { return cartan_; }

private:
    std::vector<BasisElement> basis_;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> table_;
    std::vector<int> cartan_;
    static const std::vector<std::pair<int, Scalar>> empty_;
};

/// The exceptional Lie superalgebra of dimension (24|16) built from the
/// 7-dimensional spin representation, in its depth-2 grading with purely odd
/// g_{-1} (the "odd contact" grading used as ground truth).
class F4Algebra {
public:
    F4Algebra();

    const SuperLieAlgebra& algebra() const { return alg_; }
    const CliffordModel& model() const { return *cliff_; }

    // basis layout
    int idx_one() const { return 0; }                 // degree -2
    int idx_spinor(int a) const { return 1 + a; }     // degree -1, a in 0..7
    int idx_so(int k) const { return 9 + k; }         // degree 0, k in 0..20
    int idx_Z() const { return 30; }                  // degree 0 center
    int idx_spinor_dual(int a) const { return 31 + a; }  // degree +1
    int idx_one_dual() const { return 39; }           // degree +2

    Report verify_super_jacobi(bool parallel = true) const;
    Report verify_brackets() const;

    /// Weight-space decomposition w.r.t. the Cartan (H_1,H_2,H_3,Z) with
    /// delta(Z)=2; returns one (weight, basis index) pair per root vector.
    struct RootDecomposition {
        std::vector<std::pair<Weight, int>> root_spaces;
        std::vector<int> cartan;
    };
    RootDecomposition root_decomposition() const;
    Report verify_root_decomposition() const;

    /// Regrade by the grading element dual to I_p for the given simple system.
    SuperLieAlgebra regrade(const SimpleSystem& pi, const std::set<int>& Ip) const;
    Report verify_regrade(SystemLabel l, const std::set<int>& Ip, const GradingDims& expected) const;

    /// Exact centralizer of the span of the given basis indices.
    std::vector<std::vector<Scalar>> centralizer(const SuperLieAlgebra& alg,
                                                 const std::vector<int>& span) const;
    Report verify_centralizers() const;
    Report verify_transitivity_and_generation() const;

    /// Alternating 4-bracket against the Cayley quartic; returns the global
    /// proportionality constant if it exists.
    std::optional<Scalar> freudenthal_constant() const;
    Report freudenthal_check() const;

    std::string structure_constants_json() const;

private:
    const CliffordModel* cliff_;
    SuperLieAlgebra alg_;
    std::vector<Scalar> so_coords_of_omega2(const SpinVec& s, const SpinVec& t) const;
};

const F4Algebra& f4();

} // namespace superjet

#endif
