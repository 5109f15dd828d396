#include "symcoh/exact_rank2.hpp"

#include <stdexcept>

namespace symcoh {

namespace {

// Simple-root coordinates in C_n (1-based i, j as in the e-basis).
std::vector<int> root_ei_minus_ej(int n, int i, int j) {
    std::vector<int> c(n, 0);
    for (int k = i; k < j; ++k) c[k - 1] = 1;
    return c;
}

std::vector<int> root_ei_plus_ej(int n, int i, int j) {
    std::vector<int> c(n, 0);
    for (int k = i; k < j; ++k) c[k - 1] = 1;
    for (int k = j; k < n; ++k) c[k - 1] += 2;
    c[n - 1] += 1;
    return c;
}

std::vector<int> root_2ei(int n, int i) {
    std::vector<int> c(n, 0);
    for (int k = i; k < n; ++k) c[k - 1] = 2;
    c[n - 1] += 1;
    return c;
}

void require_cnh4(const SymmetricPair& pair, int* n_out) {
    const RootSystem& rs = pair.rs();
    if (rs.family() != 'C' || pair.rank_restricted() != 2 ||
        pair.restricted_reps() != std::vector<int>{1, 3})
        throw std::invalid_argument("sp_cohomology: pair is not the Sp_2n/Sp_4 x Sp_2n-4 pair");
    *n_out = rs.rank();
}

}  // namespace

std::vector<SpTableRow> sp_table1(int n, const Rat& x, const Rat& y) {
    if (n < 4) throw std::invalid_argument("sp_table1: n >= 4 required");
    std::vector<SpTableRow> rows;

    // e_i - e_j
    for (int i : {1, 2})
        for (int j = 3; j <= n; ++j) {
            Rat v = (j <= 4) ? Rat(x + (j - i)) : Rat(x + y + (j - i));
            rows.push_back({root_ei_minus_ej(n, i, j), v});
        }
    for (int i : {3, 4})
        for (int j = 5; j <= n; ++j) rows.push_back({root_ei_minus_ej(n, i, j), y + (j - i)});

    // e_i + e_j, i < j
    rows.push_back({root_ei_plus_ej(n, 1, 2), 2 * x + 2 * y + 2 * n - 1});
    for (int i : {1, 2})
        for (int j : {3, 4}) rows.push_back({root_ei_plus_ej(n, i, j), x + 2 * y + 2 * n + 2 - i - j});
    rows.push_back({root_ei_plus_ej(n, 3, 4), 2 * y + 2 * n - 5});
    for (int i : {1, 2})
        for (int j = 5; j <= n; ++j) rows.push_back({root_ei_plus_ej(n, i, j), x + y + 2 * n + 2 - i - j});
    for (int i : {3, 4})
        for (int j = 5; j <= n; ++j) rows.push_back({root_ei_plus_ej(n, i, j), y + 2 * n + 2 - i - j});

    // 2 e_i
    for (int i : {1, 2}) rows.push_back({root_2ei(n, i), x + y + n + 1 - i});
    for (int i : {3, 4}) rows.push_back({root_2ei(n, i), y + n + 1 - i});

    return rows;
}

bool sp_regular(int n, long long x, long long y) {
    if (n < 4) throw std::invalid_argument("sp_regular: n >= 4 required");
    if (-3 <= x && x <= -1) return false;
    if (-(2 * n - 6) <= y && y <= -1) return false;
    if (-(2 * n - 4) <= x + y && x + y <= -3) return false;
    if (-(2 * n - 2) <= x + 2 * y && x + 2 * y <= -(2 * n - 4)) return false;
    return true;
}

namespace {

struct XYConstraint {
    long long ax, ay, b;  // ax*x + ay*y <= b
};

struct SpRegion {
    long long degree;
    bool k1_positive, k2_positive;
    std::vector<XYConstraint> xy;
};

// The seven-degree table: linear windows in (x, y) crossed with the signed
// atilde cone attached to each degree.
std::vector<SpRegion> sp_regions(long long n) {
    std::vector<SpRegion> rows;
    rows.push_back({0, false, false, {{-1, 0, 0}, {0, -1, 0}}});                // x >= 0, y >= 0
    rows.push_back({5, true, false, {{1, 0, -4}, {-1, -1, 2}}});                // x <= -4, x+y >= -2
    rows.push_back({4 * n - 12, false, true, {{0, 1, -2 * n + 5}, {-1, -2, 2 * n - 5}}});
    rows.push_back({4 * n - 8, true, false, {{-1, -2, 2 * n - 5}, {1, 1, -2 * n + 3}}});
    rows.push_back({4 * n - 8, false, true, {{-1, -1, 2}, {1, 2, -2 * n + 1}}});
    rows.push_back({4 * n - 4, true, false, {{0, -1, 0}, {1, 2, -2 * n + 1}}});
    rows.push_back({8 * n - 21, false, true, {{-1, 0, 0}, {1, 1, -2 * n + 3}}});
    rows.push_back({8 * n - 16, true, true, {{1, 0, -4}, {0, 1, -2 * n + 5}}});
    return rows;
}

}  // namespace

CohomologyTable sp_cohomology(const SymmetricPair& pair, long long x, long long y) {
    int n = 0;
    require_cnh4(pair, &n);
    const RootSystem& rs = pair.rs();
    const auto& M = pair.atilde_in_special();  // columns: atilde over (omega_2, omega_4)

    CohomologyTable table;
    for (const SpRegion& region : sp_regions(n)) {
        std::vector<LinearConstraint> cons;
        for (int i = 0; i < 2; ++i) {
            LinearConstraint sign;
            sign.a.assign(2, 0);
            const bool positive = (i == 0) ? region.k1_positive : region.k2_positive;
            sign.a[i] = positive ? -1 : 1;
            sign.b = positive ? -1 : 0;
            cons.push_back(std::move(sign));
        }
        for (const XYConstraint& c : region.xy) {
            // the (x, y) of nu = lambda + k1 atilde_2 + k2 atilde_4
            LinearConstraint lc;
            lc.a = {Int(c.ax) * M[0][0] + Int(c.ay) * M[1][0],
                    Int(c.ax) * M[0][1] + Int(c.ay) * M[1][1]};
            lc.b = Int(c.b) - Int(c.ax) * x - Int(c.ay) * y;
            cons.push_back(std::move(lc));
        }
        for (const auto& k : enumerate_integer_points(cons, 2)) {
            Weight nu = Rat(x) * rs.fundamental_weight(1) + Rat(y) * rs.fundamental_weight(3);
            nu += Rat(k[0]) * pair.restricted_simple()[0];
            nu += Rat(k[1]) * pair.restricted_simple()[1];
            auto dd = rs.dot_dominant(nu);
            if (!dd) continue;
            table.add(static_cast<int>(region.degree), dd->nu_plus, 1);
        }
    }
    return table;
}

const RootSystem& conics_root_system() {
    static const RootSystem rs = RootSystem::build('A', 2);
    return rs;
}

namespace {

// Does w^{-1}(mu + rho) - (lambda + rho) lie in R_1 = 2Z_{>0} a1 - 2Z_{>=0} a2
// (resp. R_2 = -2Z_{>=0} a1 + 2Z_{>0} a2)?
bool in_shifted_cone(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                     const std::vector<int>& w_word, bool r1) {
    std::vector<int> inv(w_word.rbegin(), w_word.rend());
    Weight delta = rs.apply_word(inv, mu + rs.rho()) - (lambda + rs.rho());
    RatVec c = rs.simple_coords(delta);
    if (!is_integer(c[0]) || !is_integer(c[1])) return false;
    Int c1 = to_integer(c[0]), c2 = to_integer(c[1]);
    if (c1 % 2 != 0 || c2 % 2 != 0) return false;
    if (r1) return c1 >= 2 && c2 <= 0;
    return c1 <= 0 && c2 >= 2;
}

}  // namespace

CohomologyTable conics_cohomology(long long l1, long long l2) {
    const RootSystem& rs = conics_root_system();
    const Weight lambda =
        Rat(2 * l1) * rs.fundamental_weight(0) + Rat(2 * l2) * rs.fundamental_weight(1);
    const Weight a1 = rs.simple_root(0), a2 = rs.simple_root(1);
    CohomologyTable table;

    // H^0: dominant mu in lambda - 2Z_{>=0} a1 - 2Z_{>=0} a2.
    {
        std::vector<LinearConstraint> cons;
        cons.push_back({{-1, 0}, 0});             // k1 >= 0
        cons.push_back({{0, -1}, 0});             // k2 >= 0
        cons.push_back({{4, -2}, Int(2 * l1)});   // mu coord 1 >= 0
        cons.push_back({{-2, 4}, Int(2 * l2)});   // mu coord 2 >= 0
        for (const auto& k : enumerate_integer_points(cons, 2)) {
            Weight mu = lambda - Rat(2) * Rat(k[0]) * a1 - Rat(2) * Rat(k[1]) * a2;
            table.add(0, mu, 1);
        }
    }

    // H^5: dominant mu in w0(lambda) minus even multiples >= 4 of each simple
    // root, i.e. w0(lambda) - 2 k1 a1 - 2 k2 a2 with k_i >= 2.
    {
        const Weight top = rs.longest_act(lambda);
        std::vector<LinearConstraint> cons;
        cons.push_back({{-1, 0}, -2});
        cons.push_back({{0, -1}, -2});
        cons.push_back({{4, -2}, to_integer(top[0])});
        cons.push_back({{-2, 4}, to_integer(top[1])});
        for (const auto& k : enumerate_integer_points(cons, 2)) {
            Weight mu = top - Rat(2) * Rat(k[0]) * a1 - Rat(2) * Rat(k[1]) * a2;
            table.add(5, mu, 1);
        }
    }

    // H^2 and H^3: simple-reflection translates of the shifted cones R_1, R_2
    // minus the overlap with the composite translate.  Membership throughout
    // uses the mu + rho convention.
    struct CellRule {
        int degree;
        bool r1;
        std::vector<int> w_word;         // cell element (application order)
        std::vector<int> excluded_word;  // translate to subtract
    };
    // Words apply left to right, so the operator s2 s1 is the word {0, 1}.
    const std::vector<CellRule> rules = {
        {2, true, {0}, {0, 1}},     // s1, minus the (s2 s1)-translate
        {2, false, {1}, {1, 0}},    // s2, minus the (s1 s2)-translate
        {3, true, {0, 1}, {0}},     // s2 s1, minus the s1-translate
        {3, false, {1, 0}, {1}},    // s1 s2, minus the s2-translate
    };
    for (const CellRule& rule : rules) {
        const Weight base = rs.apply_word(rule.w_word, lambda + rs.rho());
        const Weight wa1 = rs.apply_word(rule.w_word, a1);
        const Weight wa2 = rs.apply_word(rule.w_word, a2);
        const Weight dir1 = rule.r1 ? Rat(2) * wa1 : Rat(-2) * wa1;
        const Weight dir2 = rule.r1 ? Rat(-2) * wa2 : Rat(2) * wa2;
        const long long lo1 = rule.r1 ? 1 : 0;
        const long long lo2 = rule.r1 ? 0 : 1;
        std::vector<LinearConstraint> cons;
        cons.push_back({{-1, 0}, Int(-lo1)});
        cons.push_back({{0, -1}, Int(-lo2)});
        for (int coord = 0; coord < 2; ++coord) {
            // mu + rho = base + k0 dir1 + k1 dir2 strictly dominant
            LinearConstraint lc;
            lc.a = {-numerator(dir1[coord]), -numerator(dir2[coord])};
            lc.b = numerator(base[coord]) - 1;
            cons.push_back(std::move(lc));
        }
        for (const auto& k : enumerate_integer_points(cons, 2)) {
            Weight mu = base + Rat(k[0]) * dir1 + Rat(k[1]) * dir2 - rs.rho();
            if (in_shifted_cone(rs, lambda, mu, rule.excluded_word, rule.r1)) continue;
            table.add(rule.degree, mu, 1);
        }
    }

    return table;
}

std::set<int> conics_nonvanishing(long long l1, long long l2) {
    std::set<int> degrees;
    if (l1 + 2 * l2 >= 0 && 2 * l1 + l2 >= 0) degrees.insert(0);
    if ((l1 + 3 <= 0 && l1 + l2 + 1 >= 0) || (l2 + 3 <= 0 && l1 + l2 + 1 >= 0)) degrees.insert(2);
    if ((l1 - 1 >= 0 && l1 + l2 + 3 <= 0) || (l2 - 1 >= 0 && l1 + l2 + 3 <= 0)) degrees.insert(3);
    if (l1 + 2 * l2 + 6 <= 0 && 2 * l1 + l2 + 6 <= 0) degrees.insert(5);
    return degrees;
}

}  // namespace symcoh
