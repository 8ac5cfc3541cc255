#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sectorlens/region.hpp"
#include "sectorlens/tables.hpp"
#include "sectorlens/zoo.hpp"

using namespace sectorlens;

namespace {

std::vector<std::string> text(const RVec& v) {
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(to_string(v[i]));
    }
    return out;
}

std::set<std::vector<std::string>> vertex_set(const std::vector<Vertex>& vs) {
    std::set<std::vector<std::string>> out;
    for (const auto& v : vs) {
        out.insert(text(v.s));
    }
    return out;
}

std::set<std::vector<std::string>> facet_set(const std::vector<ProjectedRow>& rows) {
    std::set<std::vector<std::string>> out;
    for (const auto& r : rows) {
        auto t = text(r.a);
        t.push_back(to_string(r.b));
        out.insert(t);
    }
    return out;
}

RVec exact(std::initializer_list<Rational> xs) {
    RVec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) {
        v[i++] = x;
    }
    return v;
}

RVec sector_vector_exact(const PureState& psi) {
    const auto s = sector_lengths(psi);
    RVec out(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        out[i] = snap(s[i]);
        REQUIRE(std::abs(to_double(out[i]) - s[i]) < 1e-9);
    }
    return out;
}

RVec exact_from_text(const std::vector<std::string>& t) {
    RVec v(static_cast<Eigen::Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = Rational(t[i]);
    }
    return v;
}

// Se_0 = 2^-N sum_m (-1)^m S_m.
RVec shadow_zero_objective(int n) {
    RVec c(n + 1);
    for (int m = 0; m <= n; ++m) {
        c[m] = Rational(m % 2 ? -1 : 1, 1 << n);
    }
    return c;
}

}  // namespace

TEST_CASE("regions contain the sector vectors of random pure states") {
    std::mt19937_64 rng(61);
    for (int n = 2; n <= 7; ++n) {
        const auto r = build_region(n, "R");
        for (int rep = 0; rep < 25; ++rep) {
            const auto rep_r = check_membership(sector_lengths(haar_random(n, rng)), r);
            CHECK(rep_r.member);
        }
    }
}

TEST_CASE("small-N vertex sets are the named states") {
    // N = 2: R is the segment between |00> (S = 1, 2, 1) and GHZ(2) (1, 0, 3).
    CHECK(vertex_set(enumerate_vertices(build_region(2, "R"))) ==
          std::set<std::vector<std::string>>{{"1", "0", "3"}, {"1", "2", "1"}});
    // N = 3: S_2 = 3 is forced; vertices GHZ(3) and |000>.
    CHECK(vertex_set(enumerate_vertices(build_region(3, "R"))) ==
          std::set<std::vector<std::string>>{{"1", "0", "3", "4"}, {"1", "3", "3", "1"}});
}

TEST_CASE("table I vertex sets for N = 4, 5, 6") {
    for (int n = 4; n <= 6; ++n) {
        INFO("N = " << n);
        std::set<std::vector<std::string>> listed, edges;
        for (const auto& row : table_one()) {
            if (row.n == n) {
                (row.edge ? edges : listed).insert(text(sector_vector_exact(build(row.expression))));
            }
        }
        const auto vs = vertex_set(enumerate_vertices(build_region(n, "R")));
        if (n < 6) {
            CHECK(vs == listed);
            continue;
        }
        // Five listed states plus three vertices with no known state; edge points are not vertices.
        CHECK(vs.size() == 8);
        for (const auto& v : listed) {
            CHECK(vs.count(v) == 1);
        }
        for (const auto& e : edges) {
            CHECK(vs.count(e) == 0);
            CHECK(check_membership(exact_from_text(e), build_region(6, "R")).member);
        }
        // The reduced polytope adds the unrealized vertex (0, 7, 8) and GHZ5|0>.
        auto reduced_expect = listed;
        reduced_expect.insert({"1", "0", "7", "8", "7", "24", "17"});
        reduced_expect.insert(text(sector_vector_exact(build("GHZ(5)*zero(1)"))));
        CHECK(vertex_set(enumerate_vertices(build_region(6, "R6-reduced"))) == reduced_expect);
    }
}

TEST_CASE("published eliminated forms equal the engine's") {
    for (const auto& f : published_forms()) {
        INFO("N = " << f.n << ", " << f.region);
        const auto mine = eliminate(build_region(f.n, f.region));
        const auto theirs = eliminate(region_from_relations(f.n, f.region, f.relations));
        REQUIRE(mine.free_vars == theirs.free_vars);
        for (int p : mine.pivot_vars) {
            const auto [c1, v1] = mine.expression(p);
            const auto [c2, v2] = theirs.expression(p);
            CHECK(c1 == c2);
            CHECK(v1 == v2);
        }
        const auto vm = enumerate_vertices(mine);
        const auto vt = enumerate_vertices(theirs);
        CHECK(vertex_set(vm) == vertex_set(vt));
        CHECK(facet_set(facets(mine, vm)) == facet_set(facets(theirs, vt)));
    }
}

TEST_CASE("R2 and R3 are incomparable for N = 6") {
    const auto r2 = build_region(6, "R2");
    const auto r3 = build_region(6, "R3");
    int in2_not3 = 0, in3_not2 = 0;
    for (const auto& v : enumerate_vertices(r2)) {
        if (!check_membership(v.s, r3).member) {
            ++in2_not3;
        }
    }
    for (const auto& v : enumerate_vertices(r3)) {
        if (!check_membership(v.s, r2).member) {
            ++in3_not2;
        }
    }
    CHECK(in2_not3 > 0);
    CHECK(in3_not2 > 0);
}

TEST_CASE("exact membership and tight faces") {
    const auto r = build_region(6, "R");
    const auto rep = check_membership(sector_lengths(ghz(6)), r);
    CHECK(rep.member);
    CHECK(rep.snap_error < 1e-12);
    CHECK(!rep.tight.empty());
    // Outside: S_1 negative.
    const auto bad = check_membership(exact({1, -1, 16, 0, 15, 0, 33}), r);
    CHECK(!bad.member);
    CHECK(!bad.violated.empty());
    CHECK_THROWS_AS(check_membership(exact({1, 0}), r), contract_error);
}

TEST_CASE("relations parser") {
    const auto spec = region_from_relations(4, "chain", {"0<=S1<=S2-2<=4", "S3=4-S1"});
    CHECK(spec.equalities.size() >= 2);
    // S0 = 1 and S_m >= 0 are always present.
    const auto ok = check_membership(exact({1, 0, 2, 4, 9}), spec);
    CHECK(ok.member);
    const auto bad = check_membership(exact({1, 3, 2, 1, 9}), spec);
    CHECK(!bad.member);
    CHECK_THROWS_AS(region_from_relations(4, "x", {"S1<"}), contract_error);
}

TEST_CASE("objective parser") {
    const RVec c = parse_objective(4, "2*S1 - 1/2*S3 + 3 + SN");
    CHECK(c == exact({3, 2, 0, Rational(-1, 2), 1}));
    CHECK(parse_objective(3, "Se0") == shadow_zero_objective(3));
    CHECK_THROWS_AS(parse_objective(3, "S9"), contract_error);
    CHECK_THROWS_AS(parse_objective(3, "foo"), contract_error);
}

TEST_CASE("linear extremization on vertices") {
    const auto ex = extremize_linear_on_vertices(build_region(4, "R"), objective_sector(4, 4));
    CHECK(ex.min == 1);
    CHECK(ex.max == 9);
    CHECK(ex.argmax.size() == 1);
}

TEST_CASE("self-dual code distance") {
    CHECK(qecc_detect(build("AME(5,2)")) == 3);
    CHECK(qecc_detect(ghz(4)) == 2);
    CHECK(qecc_detect(zero_state(3)) == 1);
}

TEST_CASE("region contracts") {
    CHECK_THROWS_AS(build_region(5, "R6-reduced"), contract_error);
    CHECK_THROWS_AS(build_region(4, "R9"), contract_error);
    CHECK_THROWS_AS(build_region(13, "R"), contract_error);
}
