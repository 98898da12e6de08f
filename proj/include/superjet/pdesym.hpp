#ifndef SUPERJET_PDESYM_HPP
#define SUPERJET_PDESYM_HPP

#include "superjet/cubicforms.hpp"
#include "superjet/f4.hpp"
#include "superjet/jets.hpp"
#include "superjet/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace superjet {
namespace pdesym {

/// Super-PDE in solved form: determined jet coordinates expressed in free
/// ones. Right-hand sides contain no determined coordinates.
class PDESystem {
public:
    PDESystem(std::shared_ptr<JetContext> ctx, std::map<int, SuperPoly> solved,
              std::vector<int> free_ids);

    const JetContext& context() const { return *ctx_; }
    const std::shared_ptr<JetContext>& context_ptr() const { return ctx_; }
    const std::map<int, SuperPoly>& solved() const { return solved_; }
    const std::vector<int>& free_ids() const { return free_ids_; }

    /// Rewrite determined coordinates to the solved form, to fixpoint.
    SuperPoly reduce(SuperPoly p) const;

    std::string to_json() const;
    static PDESystem from_json(const std::string& text);

private:
    std::shared_ptr<JetContext> ctx_;
    std::map<int, SuperPoly> solved_;
    std::vector<int> free_ids_;
};

struct SymmetryCheck {
    bool ok = false;
    std::vector<std::pair<int, SuperPoly>> residuals;  // nonzero ones
};

/// Tangency of the prolonged contact field along the solved locus.
SymmetryCheck is_symmetry(const PDESystem& sys, const SuperPoly& f);

/// A certified symmetry algebra: generators, integer grading by ad(Z), and
/// exact structure constants of the Lagrange bracket.
struct SymmetryBasis {
    std::shared_ptr<JetContext> ctx;
    std::vector<std::string> labels;
    std::vector<SuperPoly> gens;
    std::vector<long> degrees;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> structure;

    std::pair<int, int> super_dim() const;
    std::pair<int, int> graded_dim(long d) const;
};

/// Closure + grading verification; the bracket table reports non-closure.
SymmetryBasis assemble_symmetry_algebra(const std::shared_ptr<JetContext>& ctx,
                                        const std::vector<std::pair<std::string, SuperPoly>>& gens,
                                        Report* rep, bool parallel = true);

/// The tabulated generating superfunctions.
std::vector<std::pair<std::string, SuperPoly>> mixed_symmetry_generators(const JetContext& ctx);
std::vector<std::pair<std::string, SuperPoly>> odd_symmetry_generators(const JetContext& ctx);

/// The flagship systems.
PDESystem second_order_system();

struct IncidencePipeline {
    std::shared_ptr<JetContext> ctx2;   // order-2 bundle coordinates
    std::shared_ptr<JetContext> ctx3;   // order-3 ambient
    std::vector<SuperVectorField> D;    // rank (3|1) distribution on ctx2
    std::shared_ptr<PDESystem> system;  // the third-order system
};
IncidencePipeline build_incidence_pipeline();

/// Weak derived flag growth at the origin, split (even|odd) per step.
std::vector<std::pair<int, int>> derived_flag(const JetContext& ctx,
                                              const std::vector<SuperVectorField>& gens);

/// Framed conformal symmetry of the quartic tensor on the odd contact space.
struct QuarticSymmetry {
    bool contact = false;
    bool preserves = false;
    SuperPoly factor;  // the conformal factor when preserves
};
QuarticSymmetry quartic_symmetry_check(const JetContext& ctx1, const SuperPoly& f);

// verification bundles ------------------------------------------------------
Report verify_second_order(bool parallel = true);
Report verify_third_order(bool parallel = true);
Report verify_flag_growth();
Report verify_exponential_matrix();
Report verify_quartic_symmetries(bool parallel = true);
Report isomorphism_witness();
Report verify_solution_space();
Report perturbation_probe();
Report verify_bracket_infrastructure(unsigned seed = 20240801);

} // namespace pdesym
} // namespace superjet

#endif
