#include <algorithm>

#include "doctest.h"
#include "qsym/classify.hpp"
#include "qsym/errors.hpp"

using namespace qsym;

namespace {

RootSystem rsys(char s, int n) { return build_root_system({{s, n}}); }

}  // namespace

TEST_CASE("weight filter examples") {
    CHECK(weight_filter(rsys('A', 1), IntVec{1}));
    CHECK(weight_filter(rsys('A', 1), IntVec{2}));
    CHECK_FALSE(weight_filter(rsys('A', 1), IntVec{3}));
    CHECK(weight_filter(rsys('B', 3), IntVec{0, 0, 1}));
    CHECK(weight_filter(rsys('G', 2), IntVec{1, 0}));
    CHECK_THROWS_AS(weight_filter(rsys('A', 2), IntVec{-1, 1}), NotDominant);
}

TEST_CASE("every listed pair passes the weight filter") {
    for (const auto& t : sweep_types(5))
        for (const auto& w : paper_list(t)) {
            CAPTURE(row_key(t, w));
            CHECK(weight_filter(build_root_system({t}), w));
        }
    for (const auto& w : paper_list({'E', 6})) CHECK(weight_filter(rsys('E', 6), w));
}

TEST_CASE("canonical spellings") {
    auto [t, w] = canonical_pair({'B', 2}, IntVec{1, 0});
    CHECK(t == SimpleType{'C', 2});
    CHECK(w == IntVec{0, 1});
    auto [t3, w3] = canonical_pair({'D', 3}, IntVec{1, 0, 0});
    CHECK(t3 == SimpleType{'A', 3});
    CHECK(w3 == IntVec{0, 1, 0});
    CHECK(in_paper_list({'B', 2}, IntVec{1, 0}));
    CHECK_FALSE(in_paper_list({'B', 2}, IntVec{0, 1}));
    CHECK(in_paper_list({'D', 3}, IntVec{0, 1, 0}));
    CHECK_THROWS_AS(canonical_pair({'A', 2}, IntVec{1}), UsageError);
}

TEST_CASE("weights within budget") {
    auto w = weights_within_budget(rsys('A', 1), 2);
    CHECK(w == std::vector<IntVec>{{1}});
    auto a2 = weights_within_budget(rsys('A', 2), 8);
    // dims: (1,0)=3 (0,1)=3 (2,0)=6 (0,2)=6 (1,1)=8
    CHECK(a2.size() == 5);
    CHECK(std::is_sorted(a2.begin(), a2.end()));
}

TEST_CASE("classify_pair examples") {
    auto a2 = classify_pair({'A', 2}, IntVec{1, 0});
    CHECK(a2.weight_filter);
    CHECK(a2.schouten);
    CHECK(a2.jacobi);
    CHECK(a2.geometrically_decomposable);
    CHECK(a2.semidirect_constructed);
    CHECK(a2.in_paper_list);
    CHECK(a2.oracle_ok);

    auto c2 = classify_pair({'C', 2}, IntVec{1, 0});
    CHECK(c2.schouten);
    CHECK(c2.jacobi);
    CHECK_FALSE(c2.geometrically_decomposable);
    CHECK_FALSE(c2.semidirect_constructed);
    CHECK_FALSE(c2.in_paper_list);

    auto b3 = classify_pair({'B', 3}, IntVec{0, 0, 1});
    CHECK(b3.weight_filter);
    CHECK_FALSE(b3.schouten);
    CHECK_FALSE(b3.in_paper_list);

    auto g2 = classify_pair({'G', 2}, IntVec{1, 0});
    CHECK(g2.weight_filter);
    CHECK_FALSE(g2.schouten);

    auto so5 = classify_pair({'B', 2}, IntVec{1, 0});
    CHECK(so5.g_type == SimpleType{'C', 2});
    CHECK(so5.alias == "B2 (1,0)");
    CHECK(so5.passing());
    CHECK(so5.semidirect_constructed);

    CHECK_THROWS_AS(classify_pair({'A', 1}, IntVec{9}, ClassifyOptions{5}), BudgetExceeded);
}

TEST_CASE("BD verdicts agree with the standard structure") {
    ClassifyOptions opt;
    opt.all_bd = true;
    for (auto w : std::vector<IntVec>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) {
        auto row = classify_pair({'A', 3}, w, opt);
        CHECK(row.bd_triples_checked == 9);
        CHECK(row.schouten_all_bd);
    }
}

TEST_CASE("small tables") {
    auto t1 = classification_table(1, 2);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].passing());

    auto t2 = classification_table(2, 16);
    CHECK(diff_against_paper(t2).ok());
    std::vector<std::string> passing;
    for (const auto& r : t2)
        if (r.passing()) passing.push_back(row_key(r.g_type, r.lambda));
    std::vector<std::string> expect = {"A1 (1)", "A1 (2)", "A2 (0,1)", "A2 (0,2)", "A2 (1,0)", "A2 (2,0)", "C2 (0,1)"};
    std::sort(passing.begin(), passing.end());
    CHECK(passing == expect);
    for (const auto& r : t2) {
        CHECK(r.schouten == r.jacobi);
        CHECK(r.oracle_ok);
        if (r.semidirect_constructed) CHECK(r.geometrically_decomposable);
        if (r.semidirect_constructed) CHECK(r.schouten);
    }
    // Threaded sweep gives the same rows.
    ClassifyOptions opt;
    opt.threads = 3;
    auto t2p = classification_table(2, 16, opt);
    REQUIRE(t2p.size() == t2.size());
    for (size_t k = 0; k < t2.size(); ++k) CHECK(row_key(t2p[k].g_type, t2p[k].lambda) == row_key(t2[k].g_type, t2[k].lambda));
}

TEST_CASE("so(10) spin modules") {
    for (auto w : std::vector<IntVec>{{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}) {
        auto row = classify_pair({'D', 5}, w);
        CHECK(row.passing());
        CHECK(row.semidirect_constructed);
        CHECK(row.in_paper_list);
    }
}
