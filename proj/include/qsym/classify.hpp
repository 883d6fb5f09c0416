#pragma once

#include <string>
#include <vector>

#include "qsym/bialg.hpp"
#include "qsym/poisson.hpp"

namespace qsym {

struct ClassifyOptions {
    long long dim_budget = 60;
    bool all_bd = false;        // rerun the Schouten criterion for every BD triple
    int threads = 1;
    int max_ambient_rank = 6;   // ambient search for geometric decomposability
};

struct ClassificationRow {
    SimpleType g_type;  // canonical (B2 -> C2, D3 -> A3)
    IntVec lambda;      // fundamental coordinates in the canonical type
    std::string alias;  // e.g. "B2 (1,0)" when the input used another spelling
    long long dim_V = 0;
    bool weight_filter = false;
    bool schouten = false;        // promoted mode (raw)
    bool schouten_projected = false;
    bool jacobi = false;
    bool schouten_all_bd = true;  // verdict agrees for every BD triple (when requested)
    int bd_triples_checked = 0;
    bool geometrically_decomposable = false;
    std::string ambient;          // e.g. "B3 node 1"
    bool semidirect_constructed = false;
    bool in_paper_list = false;
    bool oracle_ok = false;       // constructed module agrees with Weyl/Freudenthal

    bool passing() const { return schouten && geometrically_decomposable; }
};

// Necessary condition for a semidirect structure: for every weight mu of V_lambda and
// every simple i with (lambda, alpha_i) > 0 and (mu, alpha_i) < 0, lambda - mu - alpha_i
// is a positive root or zero.
bool weight_filter(const RootSystem& rs, const IntVec& lambda);
bool weight_filter(const RootSystem& rs, const WeightVec& lambda);

// The pairs (g, V_lambda) admitting semidirect structures, by canonical type.
bool in_paper_list(const SimpleType& t, const IntVec& lambda);
std::vector<IntVec> paper_list(const SimpleType& t);

// Maps a type and weight to the canonical type (B2 -> C2, D3 -> A3) and its coordinates.
std::pair<SimpleType, IntVec> canonical_pair(const SimpleType& t, const IntVec& lambda);

ClassificationRow classify_pair(const SimpleType& t, const IntVec& lambda, const ClassifyOptions& opt = {});

// Simple types of rank <= max_rank, canonical only, in table order.
std::vector<SimpleType> sweep_types(int max_rank);
// Nonzero dominant weights with Weyl dimension <= budget, lexicographic.
std::vector<IntVec> weights_within_budget(const RootSystem& rs, long long budget);

std::vector<ClassificationRow> classification_table(int max_rank, long long dim_budget,
                                                    const ClassifyOptions& opt = {});

struct PaperDiff {
    std::vector<std::string> missing;     // listed but not passing
    std::vector<std::string> unexpected;  // passing but not listed
    bool ok() const { return missing.empty() && unexpected.empty(); }
};
PaperDiff diff_against_paper(const std::vector<ClassificationRow>& rows);

std::string row_key(const SimpleType& t, const IntVec& lambda);  // "A2 (1,0)"

}  // namespace qsym
