#ifndef SUPERJET_ROOTKIT_HPP
#define SUPERJET_ROOTKIT_HPP

#include "superjet/report.hpp"
#include "superjet/scalar.hpp"

#include <array>
#include <gmpxx.h>
#include <set>
#include <string>
#include <vector>

namespace superjet {

/// Weight in the basis (eps1, eps2, eps3, delta); the invariant form is
/// diag(1,1,1,-3).
struct Weight {
    std::array<mpq_class, 4> c{};  // c[0..2] = eps coords, c[3] = delta coord

    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    Weight operator-() const;
    friend Weight operator*(const mpq_class& s, const Weight& w);
    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator<(const Weight& a, const Weight& b);

    bool is_zero() const;
    std::string str() const;
};

mpq_class inner(const Weight& a, const Weight& b);

/// The 40-element root set of the exceptional superalgebra: 20 even, 16 odd.
struct RootSystem {
    std::vector<Weight> even;  // +-delta, +-eps_i, +-eps_i +- eps_j
    std::vector<Weight> odd;   // (+-delta +-eps1 +-eps2 +-eps3)/2

    static const RootSystem& instance();
    bool is_even_root(const Weight& w) const;
    bool is_odd_root(const Weight& w) const;
    bool is_root(const Weight& w) const { return is_even_root(w) || is_odd_root(w); }
};

enum class SystemLabel { I, II, III, IV, V, VI };
const char* to_string(SystemLabel l);

/// Ordered simple root system (4 roots spanning the weight space).
struct SimpleSystem {
    std::array<Weight, 4> alpha;

    friend bool operator==(const SimpleSystem& a, const SimpleSystem& b) {
        return a.alpha == b.alpha;
    }
    /// Parity pattern (true = odd root) per simple root.
    std::array<bool, 4> parity_pattern() const;
    std::array<bool, 4> isotropic_pattern() const;
};

/// The six named inequivalent simple systems.
SimpleSystem simple_system(SystemLabel l);

/// Odd reflection at the k-th simple root (0-based); requires it to be odd
/// and isotropic.
SimpleSystem odd_reflect(const SimpleSystem& pi, int k);

/// Positive roots as non-negative integer coefficient tuples w.r.t. pi,
/// split (even list, odd list); each list ordered lexicographically.
struct PositiveRoots {
    std::vector<std::array<long, 4>> even;
    std::vector<std::array<long, 4>> odd;
};
PositiveRoots positive_roots(const SimpleSystem& pi);

/// Cartan matrix with entries alpha_i(h_{alpha_j}): coroots normalized to
/// diagonal 2 for non-isotropic roots and scaled by 2 for isotropic odd ones.
std::array<std::array<mpq_class, 4>, 4> cartan_matrix(const SimpleSystem& pi);

/// Dynkin-diagram descriptor: label-level data reproducing the table rows.
struct DynkinDescriptor {
    std::array<bool, 4> odd;
    std::array<bool, 4> isotropic;
    std::array<long, 4> highest_root_labels;  // coefficients of the highest root
};
DynkinDescriptor dynkin_descriptor(const SimpleSystem& pi);

/// Grading induced by the grading element dual to the subset I_p.
struct GradingDims {
    int depth = 0;                                  // mu
    std::vector<std::pair<int, int>> dims;          // (even|odd) for degrees -mu..mu
    std::string str() const;
    std::string nonneg_str() const;                 // "g0,g-1,...,g-mu" style
};
GradingDims grading_dims(const SimpleSystem& pi, const std::set<int>& Ip);

/// Degree of each root of Delta under the grading element of (pi, Ip);
/// paired as (weight, degree) for the regrading of the structure constants.
std::vector<std::pair<Weight, long>> root_degrees(const SimpleSystem& pi, const std::set<int>& Ip);
long cartan_rank();

/// Orbit of alpha under alpha -> 1/alpha and alpha -> -(1+alpha).
std::set<mpq_class> alpha_orbit(const mpq_class& alpha);

/// Closure of odd reflections from System I, counted modulo the Weyl group;
/// checks it reproduces exactly the six table rows.
Report verify_simple_system_closure();
Report verify_positive_root_tables();
Report verify_cartan_matrices();
Report verify_parabolic_gradings();

} // namespace superjet

#endif
