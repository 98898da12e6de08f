#ifndef SUPERJET_SPENCER_HPP
#define SUPERJET_SPENCER_HPP

#include "superjet/f4.hpp"
#include "superjet/report.hpp"

#include <string>
#include <vector>

namespace superjet {
namespace spencer {

enum class Grading { Odd, Mixed };
const char* to_string(Grading g);

struct DimPair {
    int even = 0, odd = 0;
    std::string str() const { return std::to_string(even) + "|" + std::to_string(odd); }
    friend bool operator==(const DimPair& a, const DimPair& b) {
        return a.even == b.even && a.odd == b.odd;
    }
};

/// Exact dimensions of the degree-d slice of the first Spencer complex.
struct CohomologyRow {
    long d = 0;
    DimPair C0, C1, C2;
    DimPair Z1, B1, H1;
    DimPair H0;
};

struct SpencerResult {
    Grading grading;
    std::vector<CohomologyRow> rows;  // d = 0..4
    bool d_squared_zero = true;
    bool empty_above_4 = true;
};

/// Compute cocycle/coboundary/cohomology dimensions for degrees 0..4 by
/// exact rank computations on the Chevalley-Eilenberg differentials.
SpencerResult compute(Grading g, bool parallel = true);

/// The differential C^{d,n} -> C^{d,n+1} (n = 0 or 1) on the given parity
/// slice, as a sparse matrix in the canonical cochain bases.
SparseMat differential(Grading g, int n, long d, Parity parity);

Report verify(Grading g, bool parallel = true);
std::string to_json(const SpencerResult& r);

} // namespace spencer
} // namespace superjet

#endif
