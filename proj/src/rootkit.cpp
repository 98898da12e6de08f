#include "superjet/rootkit.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace superjet {

Weight operator+(const Weight& a, const Weight& b) {
    Weight w;
    for (int k = 0; k < 4; ++k) w.c[static_cast<size_t>(k)] = a.c[static_cast<size_t>(k)] + b.c[static_cast<size_t>(k)];
    return w;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight w;
    for (int k = 0; k < 4; ++k) w.c[static_cast<size_t>(k)] = a.c[static_cast<size_t>(k)] - b.c[static_cast<size_t>(k)];
    return w;
}

Weight Weight::operator-() const {
    Weight w;
    for (int k = 0; k < 4; ++k) w.c[static_cast<size_t>(k)] = -c[static_cast<size_t>(k)];
    return w;
}

Weight operator*(const mpq_class& s, const Weight& w) {
    Weight o;
    for (int k = 0; k < 4; ++k) o.c[static_cast<size_t>(k)] = s * w.c[static_cast<size_t>(k)];
    return o;
}

bool operator<(const Weight& a, const Weight& b) {
    for (int k = 0; k < 4; ++k) {
        int c = cmp(a.c[static_cast<size_t>(k)], b.c[static_cast<size_t>(k)]);
        if (c) return c < 0;
    }
    return false;
}

bool Weight::is_zero() const {
    for (auto& q : c)
        if (sgn(q) != 0) return false;
    return true;
}

std::string Weight::str() const {
    static const char* names[4] = {"e1", "e2", "e3", "d"};
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        const mpq_class& q = c[static_cast<size_t>(k)];
        if (sgn(q) == 0) continue;
        if (!first && sgn(q) > 0) os << "+";
        if (q == 1) os << names[k];
        else if (q == -1) os << "-" << names[k];
        else os << q.get_str() << names[k];
        first = false;
    }
    return first ? "0" : os.str();
}

mpq_class inner(const Weight& a, const Weight& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] - 3 * (a.c[3] * b.c[3]);
}

namespace {

Weight eps(int i) {
    Weight w;
    w.c[static_cast<size_t>(i)] = 1;
    return w;
}
Weight delta() {
    Weight w;
    w.c[3] = 1;
    return w;
}
Weight half(int sd, int s1, int s2, int s3) {
    Weight w;
    w.c[0] = mpq_class(s1, 2);
    w.c[1] = mpq_class(s2, 2);
    w.c[2] = mpq_class(s3, 2);
    w.c[3] = mpq_class(sd, 2);
    return w;
}

} // namespace

const RootSystem& RootSystem::instance() {
    static const RootSystem rs = [] {
        RootSystem r;
        r.even.push_back(delta());
        r.even.push_back(-delta());
        for (int i = 0; i < 3; ++i) {
            r.even.push_back(eps(i));
            r.even.push_back(-eps(i));
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        Weight w;
                        w.c[static_cast<size_t>(i)] = si;
                        w.c[static_cast<size_t>(j)] = sj;
                        r.even.push_back(w);
                    }
        for (int sd : {1, -1})
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (int s3 : {1, -1}) r.odd.push_back(half(sd, s1, s2, s3));
        return r;
    }();
    return rs;
}

bool RootSystem::is_even_root(const Weight& w) const {
    return std::find(even.begin(), even.end(), w) != even.end();
}
bool RootSystem::is_odd_root(const Weight& w) const {
    return std::find(odd.begin(), odd.end(), w) != odd.end();
}

const char* to_string(SystemLabel l) {
    switch (l) {
        case SystemLabel::I: return "I";
        case SystemLabel::II: return "II";
        case SystemLabel::III: return "III";
        case SystemLabel::IV: return "IV";
        case SystemLabel::V: return "V";
        case SystemLabel::VI: return "VI";
    }
    return "?";
}

SimpleSystem simple_system(SystemLabel l) {
    switch (l) {
        case SystemLabel::I:
            return {{half(1, -1, -1, -1), eps(2), eps(1) - eps(2), eps(0) - eps(1)}};
        case SystemLabel::II:
            return {{half(-1, 1, 1, 1), half(1, -1, -1, 1), eps(1) - eps(2), eps(0) - eps(1)}};
        case SystemLabel::III:
            return {{eps(0) - eps(1), half(1, -1, 1, -1), half(-1, 1, 1, -1), eps(2)}};
        case SystemLabel::IV:
            return {{half(1, 1, -1, -1), half(1, -1, 1, 1), half(-1, 1, -1, 1), eps(1) - eps(2)}};
        case SystemLabel::V:
            return {{delta(), half(-1, 1, -1, -1), eps(2), eps(1) - eps(2)}};
        case SystemLabel::VI:
            return {{delta(), half(-1, -1, 1, 1), eps(0) - eps(1), eps(1) - eps(2)}};
    }
    throw std::logic_error("simple_system");
}

std::array<bool, 4> SimpleSystem::parity_pattern() const {
    std::array<bool, 4> p{};
    for (int k = 0; k < 4; ++k)
        p[static_cast<size_t>(k)] = RootSystem::instance().is_odd_root(alpha[static_cast<size_t>(k)]);
    return p;
}

std::array<bool, 4> SimpleSystem::isotropic_pattern() const {
    std::array<bool, 4> p{};
    for (int k = 0; k < 4; ++k)
        p[static_cast<size_t>(k)] = sgn(inner(alpha[static_cast<size_t>(k)], alpha[static_cast<size_t>(k)])) == 0;
    return p;
}

SimpleSystem odd_reflect(const SimpleSystem& pi, int k) {
    const Weight& a = pi.alpha[static_cast<size_t>(k)];
    if (!RootSystem::instance().is_odd_root(a) || sgn(inner(a, a)) != 0)
        throw std::invalid_argument("odd_reflect: root is not odd isotropic");
    SimpleSystem out;
    for (int j = 0; j < 4; ++j) {
        const Weight& b = pi.alpha[static_cast<size_t>(j)];
        if (j == k) out.alpha[static_cast<size_t>(j)] = -a;
        else if (sgn(inner(b, a)) != 0) out.alpha[static_cast<size_t>(j)] = b + a;
        else out.alpha[static_cast<size_t>(j)] = b;
    }
    return out;
}

namespace {

/// Expand w over the simple roots; returns rational coefficients.
std::array<mpq_class, 4> expand(const SimpleSystem& pi, const Weight& w) {
    // solve the 4x4 system sum_j x_j alpha_j = w by Gaussian elimination
    mpq_class m[4][5];
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) m[r][c] = pi.alpha[static_cast<size_t>(c)].c[static_cast<size_t>(r)];
        m[r][4] = w.c[static_cast<size_t>(r)];
    }
    for (int col = 0; col < 4; ++col) {
        int pr = -1;
        for (int r = col; r < 4; ++r)
            if (sgn(m[r][col]) != 0) { pr = r; break; }
        if (pr < 0) throw std::domain_error("expand: simple system does not span");
        if (pr != col)
            for (int c = 0; c <= 4; ++c) std::swap(m[pr][c], m[col][c]);
        mpq_class inv = 1 / m[col][col];
        for (int c = col; c <= 4; ++c) m[col][c] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            mpq_class f = m[r][col];
            for (int c = col; c <= 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

std::array<long, 4> integer_coeffs(const std::array<mpq_class, 4>& x) {
    std::array<long, 4> out{};
    for (int k = 0; k < 4; ++k) {
        if (x[static_cast<size_t>(k)].get_den() != 1)
            throw std::domain_error("root expansion is not integral");
        out[static_cast<size_t>(k)] = x[static_cast<size_t>(k)].get_num().get_si();
    }
    return out;
}

} // namespace

PositiveRoots positive_roots(const SimpleSystem& pi) {
    const RootSystem& rs = RootSystem::instance();
    PositiveRoots out;
    auto grab = [&](const std::vector<Weight>& roots, std::vector<std::array<long, 4>>& dst) {
        for (auto& b : roots) {
            auto x = integer_coeffs(expand(pi, b));
            bool nonneg = true, pos = false;
            for (long v : x) {
                if (v < 0) nonneg = false;
                if (v > 0) pos = true;
            }
            if (nonneg && pos) dst.push_back(x);
        }
        std::sort(dst.begin(), dst.end());
    };
    grab(rs.even, out.even);
    grab(rs.odd, out.odd);
    return out;
}

std::array<std::array<mpq_class, 4>, 4> cartan_matrix(const SimpleSystem& pi) {
    std::array<std::array<mpq_class, 4>, 4> m;
    for (int j = 0; j < 4; ++j) {
        const Weight& aj = pi.alpha[static_cast<size_t>(j)];
        mpq_class n = inner(aj, aj);
        // coroot scale: 2/<a,a> for non-isotropic, 2 for isotropic odd
        mpq_class scale = (sgn(n) == 0) ? mpq_class(2) : mpq_class(2) / n;
        for (int i = 0; i < 4; ++i)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = scale * inner(pi.alpha[static_cast<size_t>(i)], aj);
    }
    return m;
}

DynkinDescriptor dynkin_descriptor(const SimpleSystem& pi) {
    DynkinDescriptor d;
    d.odd = pi.parity_pattern();
    d.isotropic = pi.isotropic_pattern();
    PositiveRoots pos = positive_roots(pi);
    std::array<long, 4> best{};
    long best_sum = -1;
    for (auto& list : {pos.even, pos.odd})
        for (auto& x : list) {
            long s = x[0] + x[1] + x[2] + x[3];
            if (s > best_sum) { best_sum = s; best = x; }
        }
    d.highest_root_labels = best;
    return d;
}

std::string GradingDims::str() const {
    std::ostringstream os;
    for (size_t k = 0; k < dims.size(); ++k) {
        if (k) os << ",";
        os << dims[k].first << "|" << dims[k].second;
    }
    return os.str();
}

std::string GradingDims::nonneg_str() const {
    std::ostringstream os;
    for (int k = depth; k <= 2 * depth; ++k) {
        if (k > depth) os << ",";
        os << dims[static_cast<size_t>(k)].first << "|" << dims[static_cast<size_t>(k)].second;
    }
    return os.str();
}

std::vector<std::pair<Weight, long>> root_degrees(const SimpleSystem& pi, const std::set<int>& Ip) {
    const RootSystem& rs = RootSystem::instance();
    std::vector<std::pair<Weight, long>> out;
    auto run = [&](const std::vector<Weight>& roots) {
        for (auto& b : roots) {
            auto x = integer_coeffs(expand(pi, b));
            long deg = 0;
            for (int i : Ip) deg += x[static_cast<size_t>(i - 1)];
            out.push_back({b, deg});
        }
    };
    run(rs.even);
    run(rs.odd);
    return out;
}

long cartan_rank() { return 4; }

GradingDims grading_dims(const SimpleSystem& pi, const std::set<int>& Ip) {
    const RootSystem& rs = RootSystem::instance();
    std::map<long, std::pair<int, int>> by_deg;
    long mu = 0;
    for (auto& [w, deg] : root_degrees(pi, Ip)) {
        bool odd = rs.is_odd_root(w);
        auto& slot = by_deg[deg];
        (odd ? slot.second : slot.first) += 1;
        mu = std::max(mu, std::abs(deg));
    }
    GradingDims g;
    g.depth = static_cast<int>(mu);
    for (long k = -mu; k <= mu; ++k) {
        auto slot = by_deg.count(k) ? by_deg[k] : std::pair<int, int>{0, 0};
        if (k == 0) slot.first += static_cast<int>(cartan_rank());
        g.dims.push_back(slot);
    }
    // symmetry of the dimension string in +-k
    for (size_t k = 0; k < g.dims.size(); ++k)
        if (g.dims[k] != g.dims[g.dims.size() - 1 - k])
            throw std::logic_error("grading_dims: asymmetric grading");
    return g;
}

std::set<mpq_class> alpha_orbit(const mpq_class& alpha) {
    if (alpha == 0 || alpha == -1)
        throw std::invalid_argument("alpha_orbit: alpha must avoid 0 and -1");
    std::set<mpq_class> orbit{alpha};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<mpq_class> cur(orbit.begin(), orbit.end());
        for (auto& x : cur) {
            mpq_class inv_x = 1 / x;
            mpq_class neg = -(1 + x);
            for (auto& y : {inv_x, neg})
                if (orbit.insert(y).second) grew = true;
        }
        if (orbit.size() > 6) throw std::logic_error("alpha_orbit: orbit exceeded 6 elements");
    }
    return orbit;
}

// ---------------------------------------------------------------------------
// Weyl-group canonicalization: W = (signed permutations of eps) x (delta sign)

namespace {

using CanonicalForm = std::array<Weight, 4>;

CanonicalForm canonicalize(const SimpleSystem& pi) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    bool first = true;
    CanonicalForm best{};
    for (auto& p : perms)
        for (int signs = 0; signs < 8; ++signs)
            for (int sd : {1, -1}) {
                CanonicalForm img;
                for (int k = 0; k < 4; ++k) {
                    const Weight& w = pi.alpha[static_cast<size_t>(k)];
                    Weight v;
                    for (int i = 0; i < 3; ++i) {
                        int s = (signs >> i) & 1 ? -1 : 1;
                        v.c[static_cast<size_t>(p[i])] = s * w.c[static_cast<size_t>(i)];
                    }
                    v.c[3] = sd * w.c[3];
                    img[static_cast<size_t>(k)] = v;
                }
                std::sort(img.begin(), img.end());
                if (first || img < best) { best = img; first = false; }
            }
    return best;
}

const std::vector<SystemLabel>& all_labels() {
    static const std::vector<SystemLabel> ls = {SystemLabel::I,  SystemLabel::II, SystemLabel::III,
                                                SystemLabel::IV, SystemLabel::V,  SystemLabel::VI};
    return ls;
}

} // namespace

Report verify_simple_system_closure() {
    Report rep;
    rep.command = "simple-system-closure";

    std::map<CanonicalForm, std::string> table;
    for (auto l : all_labels()) table[canonicalize(simple_system(l))] = to_string(l);
    rep.add("distinct_table_rows", "6", std::to_string(table.size()));

    // breadth-first closure under odd reflections, modulo the Weyl group
    std::map<CanonicalForm, SimpleSystem> seen;
    std::vector<SimpleSystem> queue{simple_system(SystemLabel::I)};
    seen[canonicalize(queue[0])] = queue[0];
    while (!queue.empty()) {
        SimpleSystem cur = queue.back();
        queue.pop_back();
        auto parity = cur.parity_pattern();
        auto iso = cur.isotropic_pattern();
        for (int k = 0; k < 4; ++k) {
            if (!parity[static_cast<size_t>(k)] || !iso[static_cast<size_t>(k)]) continue;
            SimpleSystem next = odd_reflect(cur, k);
            auto cf = canonicalize(next);
            if (!seen.count(cf)) {
                seen[cf] = next;
                queue.push_back(next);
            }
        }
    }
    rep.add("closure_class_count", "6", std::to_string(seen.size()));
    bool all_in_table = true;
    for (auto& [cf, sys] : seen)
        if (!table.count(cf)) all_in_table = false;
    rep.add_bool("closure_matches_table_rows", all_in_table);

    bool counts_ok = true;
    for (auto& [cf, sys] : seen) {
        PositiveRoots pos = positive_roots(sys);
        if (pos.even.size() != 10 || pos.odd.size() != 8) counts_ok = false;
    }
    rep.add_bool("closure_systems_have_10_8_positive_roots", counts_ok);

    // double reflection at the same position returns the original system
    SimpleSystem pi = simple_system(SystemLabel::I);
    SimpleSystem back = odd_reflect(odd_reflect(pi, 0), 0);
    rep.add_bool("odd_reflection_is_involutive", back == pi);

    // the tabulated single reflections: I <-> II at alpha_1
    rep.add_bool("reflect_I_at_alpha1_gives_II",
                 canonicalize(odd_reflect(simple_system(SystemLabel::I), 0)) ==
                     canonicalize(simple_system(SystemLabel::II)));
    return rep;
}

namespace {

using CoeffList = std::vector<std::array<long, 4>>;

struct PositiveTableRow {
    CoeffList even, odd;
};

// positive-root tables for the six simple systems
const std::map<std::string, PositiveTableRow>& positive_table() {
    static const std::map<std::string, PositiveTableRow> t = {
        {"I",
         {{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1},
           {0, 2, 1, 0}, {0, 1, 1, 1}, {0, 2, 1, 1}, {0, 2, 2, 1}, {2, 3, 2, 1}},
          {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 2, 1, 0}, {1, 1, 1, 1},
           {1, 2, 1, 1}, {1, 2, 2, 1}, {1, 3, 2, 1}}}},
        {"II",
         {{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 0},
           {2, 2, 1, 0}, {1, 1, 1, 1}, {2, 2, 1, 1}, {2, 2, 2, 1}, {1, 3, 2, 1}},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}, {1, 2, 1, 0},
           {1, 2, 1, 1}, {1, 2, 2, 1}, {2, 3, 2, 1}}}},
        {"III",
         {{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 1, 0}, {0, 1, 1, 1},
           {1, 2, 0, 1}, {0, 1, 1, 2}, {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 2, 2, 2}},
          {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1},
           {1, 1, 0, 1}, {1, 2, 1, 1}, {1, 2, 1, 2}}}},
        {"IV",
         {{{0, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 1, 1},
           {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 1, 2, 1}, {1, 2, 3, 1}, {1, 2, 3, 2}},
          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}, {1, 1, 1, 0},
           {0, 1, 2, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}}}},
        {"V",
         {{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 0, 2, 1},
           {1, 2, 1, 0}, {1, 2, 1, 1}, {1, 2, 2, 1}, {1, 2, 3, 1}, {1, 2, 3, 2}},
          {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}, {0, 1, 1, 1},
           {0, 1, 2, 1}, {1, 1, 1, 1}, {1, 1, 2, 1}}}},
        {"VI",
         {{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {1, 2, 1, 0},
           {1, 2, 1, 1}, {1, 2, 2, 1}, {2, 4, 2, 1}, {2, 4, 3, 1}, {2, 4, 3, 2}},
          {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}, {0, 1, 1, 1},
           {1, 1, 1, 1}, {1, 3, 2, 1}, {2, 3, 2, 1}}}},
    };
    return t;
}

std::string coeff_str(const CoeffList& l) {
    std::ostringstream os;
    for (auto& x : l) os << x[0] << x[1] << x[2] << x[3] << ";";
    return os.str();
}

CoeffList sorted(CoeffList l) {
    std::sort(l.begin(), l.end());
    return l;
}

} // namespace

Report verify_positive_root_tables() {
    Report rep;
    rep.command = "positive-roots";
    for (auto l : all_labels()) {
        PositiveRoots pos = positive_roots(simple_system(l));
        const auto& row = positive_table().at(to_string(l));
        std::string name = std::string("system_") + to_string(l);
        rep.add(name + "_counts", "10|8",
                std::to_string(pos.even.size()) + "|" + std::to_string(pos.odd.size()));
        rep.add(name + "_even", coeff_str(sorted(row.even)), coeff_str(pos.even));
        rep.add(name + "_odd", coeff_str(sorted(row.odd)), coeff_str(pos.odd));
    }
    return rep;
}

Report verify_cartan_matrices() {
    Report rep;
    rep.command = "cartan-matrices";
    auto str_of = [](const std::array<std::array<mpq_class, 4>, 4>& m) {
        std::ostringstream os;
        for (auto& row : m) {
            for (auto& v : row) os << v.get_str() << ",";
            os << ";";
        }
        return os.str();
    };
    // reference matrix for system VI
    std::array<std::array<mpq_class, 4>, 4> vi = {{{2, 3, 0, 0}, {-1, 0, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}};
    rep.add("cartan_VI", str_of(vi), str_of(cartan_matrix(simple_system(SystemLabel::VI))));

    auto ci = cartan_matrix(simple_system(SystemLabel::I));
    std::ostringstream diag;
    for (int k = 0; k < 4; ++k) diag << ci[static_cast<size_t>(k)][static_cast<size_t>(k)].get_str() << ",";
    rep.add("cartan_I_diagonal", "0,2,2,2,", diag.str());

    bool integral = true;
    for (auto l : all_labels())
        for (auto& row : cartan_matrix(simple_system(l)))
            for (auto& v : row)
                if (v.get_den() != 1) integral = false;
    rep.add_bool("all_entries_integral", integral);
    return rep;
}

Report verify_parabolic_gradings() {
    Report rep;
    rep.command = "parabolic-gradings";
    struct RowSpec {
        SystemLabel l;
        int k;
        int depth;
        const char* dims;  // from g0 through g_{-mu}
    };
    static const std::vector<RowSpec> rows = {
        {SystemLabel::I, 1, 2, "22|0,0|8,1|0"},
        {SystemLabel::I, 2, 3, "10|2,3|3,3|3,1|1"},
        {SystemLabel::II, 2, 3, "10|2,3|3,3|3,1|1"},
        {SystemLabel::I, 3, 2, "8|4,6|4,2|2"},
        {SystemLabel::II, 3, 2, "8|4,6|4,2|2"},
        {SystemLabel::III, 2, 2, "8|4,6|4,2|2"},
        {SystemLabel::I, 4, 1, "12|8,6|4"},
        {SystemLabel::II, 4, 1, "12|8,6|4"},
        {SystemLabel::III, 1, 1, "12|8,6|4"},
        {SystemLabel::IV, 1, 1, "12|8,6|4"},
        {SystemLabel::V, 1, 1, "12|8,6|4"},
        {SystemLabel::II, 1, 2, "10|6,4|4,3|1"},
        {SystemLabel::III, 4, 2, "10|6,4|4,3|1"},
        {SystemLabel::IV, 2, 2, "10|6,4|4,3|1"},
        {SystemLabel::VI, 1, 2, "10|6,4|4,3|1"},
        {SystemLabel::III, 3, 2, "10|8,6|4,1|0"},
        {SystemLabel::IV, 4, 2, "10|8,6|4,1|0"},
        {SystemLabel::V, 4, 2, "10|8,6|4,1|0"},
        {SystemLabel::VI, 4, 2, "10|8,6|4,1|0"},
        {SystemLabel::IV, 3, 3, "8|4,4|4,2|2,2|0"},
        {SystemLabel::V, 3, 3, "8|4,4|4,2|2,2|0"},
        {SystemLabel::VI, 3, 3, "8|4,4|4,2|2,2|0"},
        {SystemLabel::V, 2, 2, "14|0,0|8,5|0"},
        {SystemLabel::VI, 2, 4, "12|0,0|6,3|0,0|2,3|0"},
    };
    for (auto& r : rows) {
        GradingDims g = grading_dims(simple_system(r.l), {r.k});
        std::string name = std::string("p_") + to_string(r.l) + "_" + std::to_string(r.k);
        rep.add(name + "_depth", std::to_string(r.depth), std::to_string(g.depth));
        rep.add(name + "_dims", r.dims, g.nonneg_str());
    }
    // the |5|-grading of the parabolic cut out by the first two nodes of I
    GradingDims g12 = grading_dims(simple_system(SystemLabel::I), {1, 2});
    rep.add("p_I_12_depth", "5", std::to_string(g12.depth));
    rep.add("p_I_12_dims", "10|0,3|1,3|3,0|3,0|1,1|0", g12.nonneg_str());
    return rep;
}

} // namespace superjet
