#include <random>

#include "doctest.h"
#include "symcoh/charring.hpp"

using namespace symcoh;

namespace {

Weight wt(const RootSystem& rs, std::initializer_list<int> coords) {
    Weight w = Weight::zero(rs.rank());
    int i = 0;
    for (int c : coords) w[i++] = c;
    return w;
}

// Minimal-length representatives of W / W(Phi_0) for a pair, as words.
std::vector<std::vector<int>> coset_reps(const SymmetricPair& pair) {
    const RootSystem& rs = pair.rs();
    std::vector<std::vector<int>> reps;
    for (const auto& word : rs.enumerate_weyl()) {
        bool minimal = true;
        for (int k = 0; k < rs.num_positive_roots(); ++k) {
            if (!pair.root_is_fixed(k)) continue;
            auto image = rs.apply_word_root(word, rs.positive_roots()[k]);
            if (std::all_of(image.begin(), image.end(), [](int x) { return x <= 0; })) {
                minimal = false;
                break;
            }
        }
        if (minimal) reps.push_back(word);
    }
    return reps;
}

}  // namespace

TEST_CASE("verma character coefficients") {
    auto a1 = RootSystem::build('A', 1);
    Weight lam1 = wt(a1, {5});
    auto v1 = verma_character(a1, lam1, 12);
    for (int k = 0; k <= 12; ++k) CHECK(v1.coeff_at_offset({k}) == 1);

    auto a2 = RootSystem::build('A', 2);
    Weight lam2 = wt(a2, {1, 2});
    auto v2 = verma_character(a2, lam2, 10);
    CHECK(v2.coeff_at(lam2) == 1);
    CHECK(v2.coeff_at_offset({1, 1}) == 2);  // alpha_1 + alpha_2 as a root or as a pair
    CHECK(v2.coeff_at_offset({1, 0}) == 1);
    CHECK(v2.coeff_at_offset({2, 1}) == 2);  // {a1 + (a1+a2), a1 + a1 + a2}
    CHECK(v2.coeff_at_offset({2, 2}) == 3);
    // outside the support cone
    CHECK(v2.coeff_at(lam2 + a2.simple_root(0)) == 0);
}

TEST_CASE("verma telescoping within the window") {
    std::mt19937 rng(17);
    for (auto [fam, rank] : {std::pair{'A', 2}, {'B', 2}, {'C', 3}}) {
        auto rs = RootSystem::build(fam, rank);
        std::uniform_int_distribution<int> dist(-6, 6);
        const int margin = extraction_margin(rs);
        for (int trial = 0; trial < 34; ++trial) {
            Weight lam = Weight::zero(rank);
            for (int i = 0; i < rank; ++i) lam[i] = dist(rng);
            const int cutoff = margin + 6 + (trial % 5);
            FormalCharacter chr = verma_character(rs, lam, cutoff);
            for (const auto& alpha : rs.positive_roots()) chr.mul_one_minus(alpha);
            // exact up to height cutoff - margin: e^lam alone
            std::vector<int> offset(rank, 0);
            CHECK(chr.coeff_at_offset(offset) == 1);
            for (int h = 1; h <= cutoff - margin; ++h) {
                // spot-check a few offsets at height h
                std::vector<int> c(rank, 0);
                c[h % rank] = h;
                CHECK(chr.coeff_at_offset(c) == 0);
            }
        }
    }
}

TEST_CASE("support character degenerate cases") {
    auto a2 = RootSystem::build('A', 2);
    Weight lp = wt(a2, {3, 1});

    CellLocalData bare{lp, {}, {}, {}};
    auto chr = support_character(a2, bare, 8);
    CHECK(chr.coeff_at(lp) == 1);
    CHECK(chr.coeff_at_offset({2, 1}) == 0);

    CellLocalData verma_like{lp, {}, {}, {}};
    for (int k = 0; k < a2.num_positive_roots(); ++k)
        verma_like.pos_denoms.push_back(a2.weight_of_positive_root(k));
    auto chr2 = support_character(a2, verma_like, 8);
    auto ref = verma_character(a2, lp, 8);
    std::vector<int> c(2, 0);
    for (int x = 0; x <= 8; ++x)
        for (int y = 0; x + y <= 8; ++y) {
            c[0] = x;
            c[1] = y;
            CHECK(chr2.coeff_at_offset(c) == ref.coeff_at_offset(c));
        }

    CellLocalData bad{lp, {a2.fundamental_weight(0)}, {}, {}};
    CHECK_THROWS_AS(support_character(a2, bad, 8), std::invalid_argument);
}

TEST_CASE("extraction from a verma character") {
    auto a2 = RootSystem::build('A', 2);
    const int margin = extraction_margin(a2);
    Weight lam = wt(a2, {2, 3});
    auto chr = verma_character(a2, lam, margin + 12);
    CHECK(multiplicity_extraction(a2, chr, lam) == 1);
    CHECK(multiplicity_extraction(a2, chr, Weight::zero(2)) == 0);
    CHECK(multiplicity_extraction(a2, chr, wt(a2, {0, 1})) == 0);
    CHECK(multiplicity_extraction(a2, chr, wt(a2, {5, 5})) == 0);  // above the anchor: exact zero
    CHECK_THROWS_AS(multiplicity_extraction(a2, chr, wt(a2, {-1, 0})), std::invalid_argument);

    // a dominant mu whose offset is within the cone but too deep for the window
    auto small = verma_character(a2, wt(a2, {8, 8}), margin + 2);
    CHECK_THROWS_AS(multiplicity_extraction(a2, small, Weight::zero(2)), TruncationWindowError);
}

TEST_CASE("extraction is stable under cutoff growth") {
    auto a2 = RootSystem::build('A', 2);
    const int margin = extraction_margin(a2);
    Weight lam = wt(a2, {4, 2});
    for (int extra : {0, 3, 7}) {
        auto chr = verma_character(a2, lam, margin + 8 + extra);
        CHECK(multiplicity_extraction(a2, chr, lam) == 1);
        CHECK(multiplicity_extraction(a2, chr, wt(a2, {2, 0})) == 0);
    }
}

TEST_CASE("character products multiply anchors and truncate to the min cutoff") {
    auto a1 = RootSystem::build('A', 1);
    auto u = verma_character(a1, wt(a1, {2}), 6);
    auto v = verma_character(a1, wt(a1, {4}), 9);
    auto p = u.product(v);
    CHECK(p.anchor() == wt(a1, {6}));
    CHECK(p.cutoff() == 6);
    // 1/(1-q)^2 expansion: coefficient k+1 at depth k
    for (int k = 0; k <= 6; ++k) CHECK(p.coeff_at_offset({k}) == k + 1);
}

TEST_CASE("rank-one cell with a doubled denominator has no dominant extraction") {
    // The open cell of the split-A1 plane centered off the closed orbit:
    // lambda' = -alpha, squared denominator (1 - e^{-alpha})^2.  The sharpened
    // character e^{-alpha}/(1 - e^{-alpha}) carries no dominant weight.
    auto p2 = catalog("P2");
    const RootSystem& rs = p2.rs();
    CellLocalData data{-rs.simple_root(0), {}, {}, {rs.simple_root(0)}};
    const int margin = extraction_margin(rs);
    auto chr = support_character(rs, data, margin + 20);
    for (int m = 0; m <= 9; ++m) {
        Weight mu = wt(rs, {m});
        CHECK(multiplicity_extraction(rs, chr, mu) == 0);
    }
}

TEST_CASE("closed-orbit agreement on the conics pair") {
    auto pair = catalog("conics");
    const RootSystem& rs = pair.rs();
    Coweight zeta = default_coweight(rs);
    const int margin = extraction_margin(rs);

    for (const auto& word : rs.enumerate_weyl()) {
        WeylElement w = rs.weyl_element(word);
        for (long long a : {-3, 0, 2})
            for (long long b : {-2, 1}) {
                Weight lambda = pair.weight_from_special({Int(a), Int(b)});
                auto data = closed_orbit_cell_data(pair, word, lambda, zeta);
                REQUIRE(data);  // every tangent direction of A2 is one-signed
                CHECK(data->double_denoms.empty());  // closed-orbit cells have no Levi pairs
                for (int u = 0; u <= 6; u += 2)
                    for (int v = 0; v <= 6; v += 2) {
                        Weight mu = wt(rs, {u, v});
                        RatVec off = rs.simple_coords(data->lambda_prime - mu);
                        int height = 0;
                        bool in_cone = true;
                        for (const Rat& q : off) {
                            if (!is_integer(q)) in_cone = false;
                            else if (to_integer(q) < 0) in_cone = false;
                            else height += static_cast<int>(to_integer(q));
                        }
                        const int cutoff = margin + (in_cone ? height : 0);
                        auto chr = support_character(rs, *data, cutoff);
                        CHECK(multiplicity_extraction(rs, chr, mu) ==
                              cell_multiplicity(pair, lambda, w, mu, zeta));
                    }
            }
    }
}

TEST_CASE("closed-orbit agreement on the Sp pair") {
    auto pair = catalog("CnH4", 4);
    const RootSystem& rs = pair.rs();
    Coweight zeta = default_coweight(rs);
    const int margin = extraction_margin(rs);
    std::mt19937 rng(4242);

    auto reps = coset_reps(pair);
    CHECK(reps.size() == 96);  // |W(C4)| / |W(A1 x A1)|

    std::uniform_int_distribution<int> pick(0, static_cast<int>(reps.size()) - 1);
    std::uniform_int_distribution<long long> lam_dist(-3, 3);
    std::uniform_int_distribution<int> kdist(0, 2);

    int compared = 0, ones = 0;
    while (compared < 12) {
        const auto& word = reps[pick(rng)];
        Weight lambda =
            pair.weight_from_special({Int(lam_dist(rng)), Int(lam_dist(rng))});
        std::optional<CellLocalData> data;
        try {
            data = closed_orbit_cell_data(pair, word, lambda, zeta);
        } catch (const std::invalid_argument&) {
            continue;  // zeta degenerate for this w
        }
        if (!data) continue;
        WeylElement w = rs.weyl_element(word);
        const IndexSet J = negative_atilde_set(pair, word, zeta);

        // Candidate mu biased toward actual cell members: dominantize
        // w(nu + rho) - rho for nu = lambda + k . atilde with J-compatible signs.
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
        if (in_cone && height > 24) continue;  // keep the truncation simplex small
        const int cutoff = margin + (in_cone ? height : 0);
        auto chr = support_character(rs, *data, cutoff);
        long long extracted = multiplicity_extraction(rs, chr, mu);
        int direct = cell_multiplicity(pair, lambda, w, mu, zeta);
        CHECK(extracted == direct);
        ones += direct;
        ++compared;
    }
    CHECK(ones > 0);  // the sample must exercise nonzero multiplicities
}
