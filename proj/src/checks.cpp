#include "symcoh/checks.hpp"

#include <random>
#include <sstream>

#include "symcoh/charring.hpp"
#include "symcoh/cohomology.hpp"
#include "symcoh/exact_rank2.hpp"
#include "symcoh/oracles.hpp"

namespace symcoh {

namespace {

std::string point_str(long long a, long long b) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

CheckResult pass_result(const std::string& name, const std::string& detail) {
    return {name, true, detail};
}

CheckResult fail_result(const std::string& name, const std::string& detail) {
    return {name, false, detail};
}

Weight conics_lambda(const SymmetricPair& pair, long long a, long long b) {
    return pair.weight_from_special({Int(a), Int(b)});
}

// Criteria 1-3 share the [-10, 10]^2 conics sweep.
void conics_sweep(std::vector<CheckResult>& out) {
    auto pair = catalog("conics");
    const RootSystem& rs = pair.rs();
    std::string euler_fail, vanish_fail, region_fail;
    int bundles = 0;

    for (long long a = -10; a <= 10; ++a) {
        for (long long b = -10; b <= 10; ++b) {
            ++bundles;
            const Weight lambda = conics_lambda(pair, a, b);
            const CohomologyTable exact = conics_cohomology(a, b);
            const CohomologyTable bound = bound_cohomology(pair, lambda);

            if (euler_fail.empty() &&
                !(exact.alternating_sum() == euler_character(pair, lambda)))
                euler_fail = "alternating sum mismatch at " + point_str(a, b);

            if (vanish_fail.empty()) {
                if (exact.degree(1) || exact.degree(4))
                    vanish_fail = "H^1 or H^4 nonzero at " + point_str(a, b);
                else if (!CohomologyTable::leq(exact, bound))
                    vanish_fail = "exact table exceeds the bound at " + point_str(a, b);
            }

            if (region_fail.empty()) {
                if (exact.support() != conics_nonvanishing(a, b))
                    region_fail = "nonvanishing degree set mismatch at " + point_str(a, b);
                else if (exact.degree(2) && exact.degree(3))
                    region_fail = "H^2 and H^3 both nonzero at " + point_str(a, b);
            }
        }
    }

    // strictness witness: lambda = -14 w1 + 8 w2, mu = w2, degree 2
    if (vanish_fail.empty()) {
        const Weight mu = rs.fundamental_weight(1);
        const CohomologyTable exact = conics_cohomology(-7, 4);
        const CohomologyTable bound = bound_cohomology(pair, conics_lambda(pair, -7, 4));
        const VirtualModule* e2 = exact.degree(2);
        const VirtualModule* b2 = bound.degree(2);
        const long long exact_mult = e2 ? e2->multiplicity(mu) : 0;
        const long long bound_mult = b2 ? b2->multiplicity(mu) : 0;
        if (!(exact_mult == 0 && bound_mult >= 1))
            vanish_fail = "strictness witness failed: exact=" + std::to_string(exact_mult) +
                          " bound=" + std::to_string(bound_mult);
    }

    const std::string grid = std::to_string(bundles) + " bundles";
    out.push_back(euler_fail.empty() ? pass_result("conics-euler-consistency", grid)
                                     : fail_result("conics-euler-consistency", euler_fail));
    out.push_back(vanish_fail.empty()
                      ? pass_result("conics-vanishing-and-strictness", grid + " + witness")
                      : fail_result("conics-vanishing-and-strictness", vanish_fail));
    out.push_back(region_fail.empty() ? pass_result("conics-corollary-regions", grid)
                                      : fail_result("conics-corollary-regions", region_fail));
}

CheckResult sp_equality() {
    const std::string name = "sp-equality";
    {
        auto pair = catalog("CnH4", 4);
        const std::set<int> allowed = {0, 4, 5, 8, 11, 12, 16};
        for (long long x = -12; x <= 4; ++x)
            for (long long y = -10; y <= 4; ++y) {
                Weight lambda = pair.weight_from_special({Int(x), Int(y)});
                CohomologyTable exact = sp_cohomology(pair, x, y);
                if (!(exact == bound_cohomology(pair, lambda)))
                    return fail_result(name, "n=4 mismatch at " + point_str(x, y));
                for (int d : exact.support())
                    if (!allowed.count(d))
                        return fail_result(name, "n=4 stray degree " + std::to_string(d) + " at " +
                                                     point_str(x, y));
            }
    }
    {
        auto pair = catalog("CnH4", 5);
        const std::set<int> allowed = {0, 5, 8, 12, 16, 19, 24};
        for (long long x : {-12, -9, -6, -3, 0, 3})
            for (long long y : {-10, -7, -4, -1, 2}) {
                Weight lambda = pair.weight_from_special({Int(x), Int(y)});
                CohomologyTable exact = sp_cohomology(pair, x, y);
                if (!(exact == bound_cohomology(pair, lambda)))
                    return fail_result(name, "n=5 mismatch at " + point_str(x, y));
                for (int d : exact.support())
                    if (!allowed.count(d))
                        return fail_result(name, "n=5 stray degree " + std::to_string(d) + " at " +
                                                     point_str(x, y));
            }
    }
    return pass_result(name, "n=4 full window (255 bundles) + n=5 sparse grid (30 bundles)");
}

CheckResult table1_check() {
    const std::string name = "table1";
    std::mt19937 rng(240810);
    std::uniform_int_distribution<long long> dist(-20, 20);
    for (int n : {4, 5, 6, 7}) {
        auto pair = catalog("CnH4", n);
        const RootSystem& rs = pair.rs();
        std::set<std::vector<int>> moved;
        for (int idx : pair.phi1_positive()) moved.insert(rs.positive_roots()[idx]);
        for (int trial = 0; trial < 50; ++trial) {
            const long long x = dist(rng), y = dist(rng);
            auto rows = sp_table1(n, x, y);
            if (rows.size() != moved.size())
                return fail_result(name, "row count mismatch at n=" + std::to_string(n));
            Weight shifted = Rat(x) * rs.fundamental_weight(1) +
                             Rat(y) * rs.fundamental_weight(3) + rs.rho();
            for (const auto& row : rows) {
                if (!moved.count(row.root))
                    return fail_result(name, "row lists a root outside Phi_1^+ at n=" +
                                                 std::to_string(n));
                if (rs.pair_coroot(shifted, row.root) != row.value)
                    return fail_result(name, "pairing mismatch at n=" + std::to_string(n) + " " +
                                                 point_str(x, y));
            }
            bool generic = true;
            for (int k = 0; k < rs.num_positive_roots(); ++k)
                if (rs.pair_coroot_pos(shifted, k) == 0) generic = false;
            if (sp_regular(n, x, y) != generic)
                return fail_result(name, "regularity mismatch at n=" + std::to_string(n) + " " +
                                             point_str(x, y));
        }
    }
    return pass_result(name, "n in {4,5,6,7}, 50 samples each, all rows and regularity agree");
}

CheckResult h1_vanishing() {
    const std::string name = "h1-vanishing";
    struct GridPair {
        SymmetricPair pair;
        std::vector<std::vector<Int>> grid;
    };
    std::vector<GridPair> targets;

    auto rank1_grid = [] {
        std::vector<std::vector<Int>> g;
        for (long long c = -100; c <= 100; ++c) g.push_back({Int(c)});
        return g;
    };
    auto rank2_grid = [](long long lo1, long long hi1, long long lo2, long long hi2) {
        std::vector<std::vector<Int>> g;
        for (long long a = lo1; a <= hi1; ++a)
            for (long long b = lo2; b <= hi2; ++b) g.push_back({Int(a), Int(b)});
        return g;
    };

    for (const char* nm : {"A1-split", "A1xA1", "AII", "FII", "P2"})
        targets.push_back({catalog(nm), rank1_grid()});
    targets.push_back({catalog("AIV", 3), rank1_grid()});
    targets.push_back({catalog("BII", 2), rank1_grid()});
    targets.push_back({catalog("CII", 3), rank1_grid()});
    targets.push_back({catalog("DII", 4), rank1_grid()});
    targets.push_back({catalog("conics"), rank2_grid(-7, 7, -7, 7)});
    targets.push_back({catalog("split-A", 2), rank2_grid(-7, 7, -7, 7)});
    targets.push_back({catalog("CnH4", 4), rank2_grid(-8, 6, -7, 6)});
    targets.push_back({catalog("CnH4", 5), rank2_grid(-8, 6, -7, 6)});
    {
        auto pair = catalog("split-A", 3);
        std::vector<std::vector<Int>> g;
        for (long long a = -3; a <= 3; ++a)
            for (long long b = -3; b <= 3; ++b)
                for (long long c = -3; c <= 3; ++c) g.push_back({Int(a), Int(b), Int(c)});
        targets.push_back({pair, std::move(g)});
    }

    long long total = 0;
    for (const auto& target : targets) {
        if (target.grid.size() < 200)
            return fail_result(name, target.pair.name() + ": grid below 200 points");
        for (const auto& coords : target.grid) {
            Weight lambda = target.pair.weight_from_special(coords);
            if (bound_cohomology(target.pair, lambda).degree(1) != nullptr) {
                std::ostringstream os;
                os << target.pair.name() << ": degree-1 bucket nonempty at lambda units";
                for (const auto& c : coords) os << " " << c;
                return fail_result(name, os.str());
            }
            ++total;
        }
    }
    return pass_result(name, std::to_string(targets.size()) + " pairs, " + std::to_string(total) +
                                 " special weights, empty degree-1 bucket throughout");
}

CheckResult p2_plethysm() {
    const std::string name = "p2-plethysm";
    auto pair = catalog("P2");
    for (int m = 0; m <= 8; ++m) {
        Weight lambda = pair.weight_from_special({Int(m)});  // 2m omega
        VirtualModule chi = euler_character(pair, lambda);
        auto expected = oracles::sym_m_of_sym2(m);
        if (chi.entries().size() != expected.size())
            return fail_result(name, "summand count mismatch at m=" + std::to_string(m));
        for (const auto& [hw, mult] : expected) {
            Weight mu = Weight::zero(1);
            mu[0] = hw;
            if (chi.multiplicity(mu) != mult)
                return fail_result(name, "multiplicity mismatch at m=" + std::to_string(m) +
                                             ", highest weight " + std::to_string(hw));
        }
    }
    return pass_result(name, "m in [0,8] matches the monomial-expansion oracle");
}

CheckResult charring_agreement() {
    const std::string name = "charring-agreement";
    std::mt19937 rng(77);

    // Verma telescoping, 100 random anchors.
    for (int trial = 0; trial < 100; ++trial) {
        const RootSystem rs = (trial % 2 == 0) ? RootSystem::build('A', 2)
                                               : RootSystem::build('B', 2);
        std::uniform_int_distribution<int> dist(-6, 6);
        Weight lam = Weight::zero(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) lam[i] = dist(rng);
        const int margin = extraction_margin(rs);
        const int cutoff = margin + 4 + trial % 7;
        FormalCharacter chr = verma_character(rs, lam, cutoff);
        for (const auto& alpha : rs.positive_roots()) chr.mul_one_minus(alpha);
        std::vector<int> zero(rs.rank(), 0);
        if (chr.coeff_at_offset(zero) != 1)
            return fail_result(name, "verma telescoping leading term");
        for (int h = 1; h <= cutoff - margin; ++h) {
            std::vector<int> c(rs.rank(), 0);
            c[h % rs.rank()] = h;
            if (chr.coeff_at_offset(c) != 0)
                return fail_result(name, "verma telescoping residue at height " + std::to_string(h));
        }
    }

    // Extraction vs the closed-form cell multiplicity, on both rank-2 pairs.
    int compared = 0, nonzero = 0;
    auto conics = catalog("conics");
    {
        const RootSystem& rs = conics.rs();
        const Coweight zeta = default_coweight(rs);
        const int margin = extraction_margin(rs);
        auto words = rs.enumerate_weyl();
        std::uniform_int_distribution<int> pick(0, static_cast<int>(words.size()) - 1);
        std::uniform_int_distribution<long long> ldist(-3, 3);
        std::uniform_int_distribution<int> mdist(0, 4);
        while (compared < 30) {
            const auto& word = words[pick(rng)];
            Weight lambda = conics.weight_from_special({Int(ldist(rng)), Int(ldist(rng))});
            auto data = closed_orbit_cell_data(conics, word, lambda, zeta);
            if (!data) continue;
            Weight mu = Rat(2 * mdist(rng)) * rs.fundamental_weight(0) +
                        Rat(2 * mdist(rng)) * rs.fundamental_weight(1);
            RatVec off = rs.simple_coords(data->lambda_prime - mu);
            int height = 0;
            bool in_cone = true;
            for (const Rat& q : off) {
                if (!is_integer(q) || to_integer(q) < 0) in_cone = false;
                else height += static_cast<int>(to_integer(q));
            }
            auto chr = support_character(rs, *data, margin + (in_cone ? height : 0));
            const long long extracted = multiplicity_extraction(rs, chr, mu);
            const int direct =
                cell_multiplicity(conics, lambda, rs.weyl_element(word), mu, zeta);
            if (extracted != direct)
                return fail_result(name, "conics cell mismatch for |w|=" +
                                             std::to_string(word.size()));
            nonzero += direct;
            ++compared;
        }
    }
    {
        auto pair = catalog("CnH4", 4);
        const RootSystem& rs = pair.rs();
        const Coweight zeta = default_coweight(rs);
        const int margin = extraction_margin(rs);
        std::vector<std::vector<int>> reps;
        for (const auto& word : rs.enumerate_weyl()) {
            bool minimal = true;
            for (int k = 0; k < rs.num_positive_roots() && minimal; ++k) {
                if (!pair.root_is_fixed(k)) continue;
                auto image = rs.apply_word_root(word, rs.positive_roots()[k]);
                if (std::all_of(image.begin(), image.end(), [](int v) { return v <= 0; }))
                    minimal = false;
            }
            if (minimal) reps.push_back(word);
        }
        std::uniform_int_distribution<int> pick(0, static_cast<int>(reps.size()) - 1);
        std::uniform_int_distribution<long long> ldist(-3, 3);
        std::uniform_int_distribution<int> kdist(0, 2);
        while (compared < 50) {
            const auto& word = reps[pick(rng)];
            Weight lambda = pair.weight_from_special({Int(ldist(rng)), Int(ldist(rng))});
            std::optional<CellLocalData> data;
            try {
                data = closed_orbit_cell_data(pair, word, lambda, zeta);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (!data) continue;
            const IndexSet J = negative_atilde_set(pair, word, zeta);
            Weight nu = lambda;
            for (int i = 0; i < 2; ++i) {
                long long k = kdist(rng) + (((J >> i) & 1) ? 1 : 0);
                if (!((J >> i) & 1)) k = -k;
                nu += Rat(k) * pair.restricted_simple()[i];
            }
            Weight mu = rs.apply_word(word, nu + rs.rho()) - rs.rho();
            if (!rs.is_dominant(mu)) continue;
            RatVec off = rs.simple_coords(data->lambda_prime - mu);
            int height = 0;
            bool in_cone = true;
            for (const Rat& q : off) {
                if (!is_integer(q) || to_integer(q) < 0) in_cone = false;
                else height += static_cast<int>(to_integer(q));
            }
            if (in_cone && height > 16) continue;
            auto chr = support_character(rs, *data, margin + (in_cone ? height : 0));
            const long long extracted = multiplicity_extraction(rs, chr, mu);
            const int direct = cell_multiplicity(pair, lambda, rs.weyl_element(word), mu, zeta);
            if (extracted != direct)
                return fail_result(name, "Sp cell mismatch for |w|=" + std::to_string(word.size()));
            nonzero += direct;
            ++compared;
        }
    }
    if (nonzero == 0) return fail_result(name, "sample exercised no nonzero multiplicities");
    return pass_result(name, "verma telescoping x100; 50 cell comparisons (" +
                                 std::to_string(nonzero) + " nonzero)");
}

CheckResult structural_invariants() {
    const std::string name = "structural-invariants";
    std::vector<SymmetricPair> pairs;
    for (const char* nm : {"A1-split", "A1xA1", "AII", "FII", "conics"}) pairs.push_back(catalog(nm));
    pairs.push_back(catalog("AIV", 3));
    pairs.push_back(catalog("BII", 2));
    pairs.push_back(catalog("CII", 3));
    pairs.push_back(catalog("DII", 4));
    pairs.push_back(catalog("split-A", 3));
    pairs.push_back(catalog("CnH4", 4));
    pairs.push_back(catalog("CnH4", 5));

    std::mt19937 rng(90125);
    for (const auto& pair : pairs) {
        const RootSystem& rs = pair.rs();
        const int n = rs.rank();

        // involution and isometry
        for (int i = 0; i < n; ++i) {
            Weight w = rs.fundamental_weight(i);
            if (!(pair.theta_apply(pair.theta_apply(w)) == w))
                return fail_result(name, pair.name() + ": theta not involutive");
            for (int j = 0; j < n; ++j) {
                Weight v = rs.fundamental_weight(j);
                if (rs.inner(pair.theta_apply(w), pair.theta_apply(v)) != rs.inner(w, v))
                    return fail_result(name, pair.name() + ": theta not isometric");
            }
        }
        // moved positive roots land in the negatives
        for (int k = 0; k < rs.num_positive_roots(); ++k) {
            auto image = pair.theta_root(rs.positive_roots()[k]);
            auto idx = rs.signed_root_index(image);
            if (!idx) return fail_result(name, pair.name() + ": theta does not permute roots");
            if (!pair.root_is_fixed(k) && idx->second >= 0)
                return fail_result(name, pair.name() + ": moved positive root stays positive");
        }
        // restricted simple roots independent
        {
            RatMat m(pair.rank_restricted(), RatVec(n));
            for (int i = 0; i < pair.rank_restricted(); ++i) m[i] = pair.restricted_simple()[i].f;
            if (matrix_rank(m) != pair.rank_restricted())
                return fail_result(name, pair.name() + ": restricted roots dependent");
        }
        // special basis case split
        for (int i = 0; i < pair.rank_restricted(); ++i) {
            const int a = pair.restricted_reps()[i];
            const int tb = pair.spec().thetabar[a];
            Weight expected;
            if (tb != a)
                expected = rs.fundamental_weight(a) + rs.fundamental_weight(tb);
            else if (pair.theta_apply(rs.simple_root(a)) == -rs.simple_root(a))
                expected = Rat(2) * rs.fundamental_weight(a);
            else
                expected = rs.fundamental_weight(a);
            if (!(pair.special_basis()[i] == expected))
                return fail_result(name, pair.name() + ": special basis case mismatch");
            if (!pair.is_special(pair.special_basis()[i]) ||
                !pair.is_special(pair.restricted_simple()[i]))
                return fail_result(name, pair.name() + ": basis members not special");
        }
        // omega-cone partition off the boundary
        std::uniform_int_distribution<long long> cdist(-6, 6);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Int> coords(pair.rank_restricted());
            bool boundary = false;
            for (int i = 0; i < pair.rank_restricted(); ++i) {
                coords[i] = cdist(rng);
                if (Rat(coords[i]) == -pair.rho_coefficients()[i]) boundary = true;
            }
            Weight nu = pair.weight_from_special(coords);
            int hits = 0;
            const IndexSet all = (IndexSet(1) << pair.rank_restricted()) - 1;
            for (IndexSet J = 0; J <= all; ++J) hits += pair.omega_cone_member(J, nu) ? 1 : 0;
            if (hits != (boundary ? 0 : 1))
                return fail_result(name, pair.name() + ": omega cones do not partition");
        }
    }

    // sign criterion for the dominantizing Weyl element, 500 samples
    {
        std::uniform_int_distribution<long long> dist(-8, 8);
        int tested = 0;
        while (tested < 500) {
            const auto& pair = pairs[tested % pairs.size()];
            const RootSystem& rs = pair.rs();
            std::vector<Int> coords(pair.rank_restricted());
            for (auto& c : coords) c = dist(rng);
            Weight lambda = pair.weight_from_special(coords);
            auto dd = rs.dot_dominant(lambda);
            if (!dd) continue;
            const Coweight zeta = default_coweight(rs);
            for (int i = 0; i < pair.rank_restricted(); ++i) {
                Weight moved = rs.apply_word(dd->word, pair.restricted_simple()[i]);
                Rat lhs = coweight_pairing(rs, moved, zeta);
                if (lhs == 0 || ((lhs < 0) != (wspecial_sign(pair, lambda, i) < 0)))
                    return fail_result(name, pair.name() + ": sign criterion mismatch");
            }
            ++tested;
        }
    }

    // dot-orbit cardinality
    for (auto [fam, rank] : {std::pair{'A', 2}, {'A', 3}, {'B', 2}, {'C', 3}}) {
        auto rs = RootSystem::build(fam, rank);
        if (Int(rs.dot_orbit(Weight::zero(rank)).size()) != rs.weyl_order())
            return fail_result(name, std::string("dot orbit size mismatch in ") + fam);
    }

    return pass_result(name, std::to_string(pairs.size()) +
                                 " pairs; involution, isometry, root signs, basis cases, cone "
                                 "partition, 500 sign samples, orbit cardinalities");
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
    static const std::vector<std::string> names = {
        "conics-euler", "sp-equality", "table1", "h1-vanishing", "p2-plethysm",
        "charring-agreement"};
    return names;
}

std::vector<CheckResult> run_check_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    if (suite == "conics-euler") {
        conics_sweep(out);
    } else if (suite == "sp-equality") {
        out.push_back(sp_equality());
    } else if (suite == "table1") {
        out.push_back(table1_check());
    } else if (suite == "h1-vanishing") {
        out.push_back(h1_vanishing());
    } else if (suite == "p2-plethysm") {
        out.push_back(p2_plethysm());
    } else if (suite == "charring-agreement") {
        out.push_back(charring_agreement());
    } else {
        throw std::invalid_argument("unknown check suite '" + suite + "'");
    }
    return out;
}

std::vector<CheckResult> run_acceptance() {
    std::vector<CheckResult> out;
    conics_sweep(out);  // criteria 1-3
    out.push_back(sp_equality());
    out.push_back(table1_check());
    out.push_back(h1_vanishing());
    out.push_back(p2_plethysm());
    out.push_back(charring_agreement());
    out.push_back(structural_invariants());
    return out;
}

}  // namespace symcoh
