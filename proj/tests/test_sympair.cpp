#include <random>

#include "doctest.h"
#include "symcoh/sympair.hpp"

using namespace symcoh;

namespace {

// All shipped pairs at their smallest (or test-relevant) parameters.
std::vector<SymmetricPair> test_catalog() {
    std::vector<SymmetricPair> pairs;
    pairs.push_back(catalog("A1-split"));
    pairs.push_back(catalog("A1xA1"));
    pairs.push_back(catalog("AII"));
    pairs.push_back(catalog("AIV", 3));
    pairs.push_back(catalog("BII", 2));
    pairs.push_back(catalog("CII", 3));
    pairs.push_back(catalog("DII", 4));
    pairs.push_back(catalog("FII"));
    pairs.push_back(catalog("conics"));
    pairs.push_back(catalog("split-A", 3));
    pairs.push_back(catalog("CnH4", 4));
    pairs.push_back(catalog("CnH4", 5));
    return pairs;
}

}  // namespace

TEST_CASE("split A2 (complete conics)") {
    auto pair = catalog("conics");
    const auto& rs = pair.rs();
    REQUIRE(pair.rank_restricted() == 2);
    CHECK(pair.restricted_simple()[0] == Rat(2) * rs.simple_root(0));
    CHECK(pair.restricted_simple()[1] == Rat(2) * rs.simple_root(1));
    CHECK(pair.special_basis()[0] == Rat(2) * rs.fundamental_weight(0));
    CHECK(pair.special_basis()[1] == Rat(2) * rs.fundamental_weight(1));
    CHECK(pair.rho_coefficients() == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    // theta = -id on the split pair
    for (int i = 0; i < 2; ++i)
        CHECK(pair.theta_apply(rs.fundamental_weight(i)) == -rs.fundamental_weight(i));
}

TEST_CASE("P2 = split A1") {
    auto pair = catalog("P2");
    REQUIRE(pair.rank_restricted() == 1);
    CHECK(pair.restricted_simple()[0] == Rat(2) * pair.rs().simple_root(0));
    CHECK(pair.special_basis()[0] == Rat(2) * pair.rs().fundamental_weight(0));
    CHECK(pair.rho_coefficients()[0] == Rat(1, 2));
    CHECK(pair.dimension() == 2);
}

TEST_CASE("CnH4 matches the Sp_2n / Sp_4 x Sp_2n-4 combinatorics") {
    for (int n : {4, 5, 6}) {
        auto pair = catalog("CnH4", n);
        const auto& rs = pair.rs();
        REQUIRE(pair.rank_restricted() == 2);
        CHECK(pair.restricted_reps() == std::vector<int>{1, 3});

        // theta(alpha_2) = -alpha_1 - alpha_2 - alpha_3
        std::vector<int> a2(n, 0);
        a2[1] = 1;
        std::vector<int> expect2(n, 0);
        expect2[0] = expect2[1] = expect2[2] = -1;
        CHECK(pair.theta_root(a2) == expect2);

        // theta(alpha_4): -2a3 - a4 at n = 4, else -a3 - a4 - 2a5..2a_{n-1} - a_n
        std::vector<int> a4(n, 0);
        a4[3] = 1;
        std::vector<int> expect4(n, 0);
        if (n == 4) {
            expect4[2] = -2;
            expect4[3] = -1;
        } else {
            expect4[2] = -1;
            expect4[3] = -1;
            for (int i = 4; i < n - 1; ++i) expect4[i] = -2;
            expect4[n - 1] = -1;
        }
        CHECK(pair.theta_root(a4) == expect4);

        // special basis = (omega_2, omega_4), rho coefficients (2, (2n-5)/2)
        CHECK(pair.special_basis()[0] == rs.fundamental_weight(1));
        CHECK(pair.special_basis()[1] == rs.fundamental_weight(3));
        CHECK(pair.rho_coefficients()[0] == 2);
        CHECK(pair.rho_coefficients()[1] == Rat(2 * n - 5, 2));

        CHECK(pair.dimension() == 8 * n - 16);
    }
}

TEST_CASE("rank-one catalog theta values match the Satake table") {
    // Each entry: catalog pair, Delta_1 representative, expected -theta(alpha)
    // in simple-root coordinates.
    struct Row {
        SymmetricPair pair;
        int alpha;
        std::vector<int> minus_theta;
    };
    std::vector<Row> rows;
    rows.push_back({catalog("A1-split"), 0, {1}});
    rows.push_back({catalog("A1xA1"), 0, {0, 1}});
    rows.push_back({catalog("AII"), 1, {1, 1, 1}});
    rows.push_back({catalog("BII", 4), 0, {1, 2, 2, 2}});
    rows.push_back({catalog("DII", 5), 0, {1, 2, 2, 1, 1}});
    rows.push_back({catalog("AIV", 4), 0, {0, 1, 1, 1}});
    rows.push_back({catalog("CII", 4), 1, {1, 1, 2, 1}});
    rows.push_back({catalog("FII"), 3, {1, 2, 3, 1}});
    for (const auto& row : rows) {
        CAPTURE(row.pair.name());
        REQUIRE(row.pair.rank_restricted() == 1);
        std::vector<int> alpha(row.pair.ambient_rank(), 0);
        alpha[row.alpha] = 1;
        std::vector<int> image = row.pair.theta_root(alpha);
        std::vector<int> neg(image.size());
        for (size_t i = 0; i < image.size(); ++i) neg[i] = -image[i];
        CHECK(neg == row.minus_theta);
    }
}

TEST_CASE("structural invariants across the catalog") {
    std::mt19937 rng(41);
    for (const auto& pair : test_catalog()) {
        CAPTURE(pair.name());
        const auto& rs = pair.rs();
        const int n = rs.rank();

        // involution
        for (int i = 0; i < n; ++i) {
            Weight w = rs.fundamental_weight(i);
            CHECK(pair.theta_apply(pair.theta_apply(w)) == w);
        }

        // isometry on random integral weights
        std::uniform_int_distribution<int> dist(-4, 4);
        for (int trial = 0; trial < 10; ++trial) {
            Weight a = Weight::zero(n), b = Weight::zero(n);
            for (int i = 0; i < n; ++i) {
                a[i] = dist(rng);
                b[i] = dist(rng);
            }
            CHECK(rs.inner(pair.theta_apply(a), pair.theta_apply(b)) == rs.inner(a, b));
        }

        // moved positive roots go negative
        for (int k = 0; k < rs.num_positive_roots(); ++k) {
            auto image = pair.theta_root(rs.positive_roots()[k]);
            auto idx = rs.signed_root_index(image);
            REQUIRE(idx);
            if (!pair.root_is_fixed(k)) CHECK(idx->second == -1);
        }

        // restricted and special data are special weights
        for (int i = 0; i < pair.rank_restricted(); ++i) {
            CHECK(pair.is_special(pair.restricted_simple()[i]));
            CHECK(pair.is_special(pair.special_basis()[i]));
            CHECK(pair.rho_coefficients()[i] > 0);
        }

        // atilde expands integrally over the special basis
        for (int j = 0; j < pair.rank_restricted(); ++j) {
            Weight rebuilt = Weight::zero(n);
            for (int i = 0; i < pair.rank_restricted(); ++i)
                rebuilt += Rat(pair.atilde_in_special()[i][j]) * pair.special_basis()[i];
            CHECK(rebuilt == pair.restricted_simple()[j]);
        }
    }
}

TEST_CASE("special basis coordinates are the unit vectors") {
    for (const auto& pair : test_catalog()) {
        CAPTURE(pair.name());
        for (int i = 0; i < pair.rank_restricted(); ++i) {
            auto c = pair.special_coords(pair.special_basis()[i]);
            REQUIRE(c);
            for (int j = 0; j < pair.rank_restricted(); ++j) CHECK((*c)[j] == (i == j ? 1 : 0));
        }
        // the special pairing is orthogonal on every shipped pair
        for (int i = 0; i < pair.rank_restricted(); ++i)
            for (int j = 0; j < pair.rank_restricted(); ++j)
                if (i != j)
                    CHECK(pair.rs().inner(pair.special_basis()[i], pair.restricted_simple()[j]) == 0);
    }
}

TEST_CASE("special weight detection and coordinates") {
    auto conics = catalog("conics");
    const auto& rs = conics.rs();
    CHECK(conics.is_special(Weight::zero(2)));
    CHECK(conics.is_special(Rat(2) * rs.fundamental_weight(0)));

    Weight l = Rat(2) * rs.fundamental_weight(0) + Rat(4) * rs.fundamental_weight(1);
    auto c = conics.special_coords(l);
    REQUIRE(c);
    CHECK(*c == RatVec{1, 2});
    CHECK(conics.in_special_lattice(l));
    CHECK_FALSE(conics.in_special_lattice(rs.fundamental_weight(0)));

    auto c4 = catalog("CnH4", 4);
    CHECK_FALSE(c4.is_special(c4.rs().fundamental_weight(0)));
    CHECK_FALSE(c4.special_coords(c4.rs().fundamental_weight(0)).has_value());
    CHECK(c4.special_coords(c4.rs().fundamental_weight(1)).has_value());
}

TEST_CASE("cone memberships") {
    auto conics = catalog("conics");
    const auto& rs = conics.rs();
    const Weight zero = Weight::zero(2);

    auto k0 = conics.r_cone_member(0, zero);
    REQUIRE(k0);
    CHECK(*k0 == std::vector<Int>{0, 0});
    CHECK_FALSE(conics.r_cone_member(1, zero).has_value());
    CHECK_FALSE(conics.r_cone_member(0, rs.simple_root(0)).has_value());  // half of atilde_1

    CHECK(conics.omega_cone_member(0, zero));
    CHECK_FALSE(conics.omega_cone_member(3, zero));
    // -2 omega_1 = -1 otilde_1: strictly below -rho_1 = -1/2
    CHECK(conics.omega_cone_member(1, Rat(-2) * rs.fundamental_weight(0)));
}

TEST_CASE("omega cones partition the off-boundary special lattice") {
    std::mt19937 rng(5);
    for (const auto& pair : test_catalog()) {
        CAPTURE(pair.name());
        std::uniform_int_distribution<int> dist(-6, 6);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Int> coords(pair.rank_restricted());
            bool boundary = false;
            for (int i = 0; i < pair.rank_restricted(); ++i) {
                coords[i] = dist(rng);
                if (Rat(coords[i]) == -pair.rho_coefficients()[i]) boundary = true;
            }
            Weight nu = pair.weight_from_special(coords);
            int hits = 0;
            const IndexSet all = (IndexSet(1) << pair.rank_restricted()) - 1;
            for (IndexSet J = 0; J <= all; ++J) hits += pair.omega_cone_member(J, nu) ? 1 : 0;
            CHECK(hits == (boundary ? 0 : 1));
        }
    }
}

TEST_CASE("invalid Satake specs are rejected") {
    SatakeSpec s;
    s.rs = RootSystem::build('A', 2);
    s.name = "bad";
    s.thetabar = {1, 0};
    s.delta0 = {0};
    CHECK_THROWS_AS(build_pair(s), std::invalid_argument);  // thetabar moves a black node

    SatakeSpec t;
    t.rs = RootSystem::build('A', 3);
    t.name = "bad2";
    t.thetabar = {0, 1, 2};
    t.delta0 = {0, 1, 2};  // no white nodes at all: r = 0 restricted roots
    CHECK_THROWS_AS(build_pair(t), std::invalid_argument);
}

TEST_CASE("catalog rejects unknown names and bad parameters") {
    CHECK_THROWS_AS(catalog("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(catalog("CnH4", 3), std::invalid_argument);
    CHECK_THROWS_AS(catalog("DII", 3), std::invalid_argument);
}
