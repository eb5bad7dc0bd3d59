#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "regrank/pagerank.hpp"
#include "regrank/projection.hpp"
#include "regrank/ranking.hpp"
#include "regrank/ratings.hpp"

namespace regrank {

// Gain of a relevance level in the DCG sum: the standard (2^rel - 1), or the
// literal 2^(rel-1) reading kept for sensitivity checks.
enum class GainKind : std::uint8_t { standard = 0, literal = 1 };

// Candidate set ranked during evaluation: the user's test items (default),
// or the full catalog with unrated recommendations counting as relevance 0.
enum class CandidateMode : std::uint8_t { test_items = 0, full_catalog = 1 };

struct UserSplit {
    std::string user;
    std::vector<Rating> train; // exactly UPL ratings
    std::vector<Rating> test;  // the remainder, >= 10
};

// Per-user UPL split. Users with fewer than UPL+10 ratings are excluded.
struct UplSplit {
    std::uint32_t upl = 0;
    std::uint64_t seed = 0;
    std::vector<UserSplit> users;

    RatingTable train_table(const RatingScale& scale) const;
};

// Deterministic given (table, upl, seed) and independent of row order.
// Throws DataError when no user passes the UPL+10 threshold.
UplSplit upl_split(const RatingTable& table, std::uint32_t upl, std::uint64_t seed);

// DCG of a relevance list: sum over positions of gain(rel_i)/log2(i+1).
double dcg(std::span<const double> rels, GainKind gain = GainKind::standard);

// Per-user NDCG@n: DCG of the top-n recommended items' test relevances over
// the DCG of the n best test relevances. Returns -1 when the user has fewer
// than n test items (callers count those as skipped).
double ndcg_at_n(const RecommendationList& rec, const std::map<std::string, double>& test_rels,
                 std::size_t n, GainKind gain = GainKind::standard);

struct SampleResult {
    std::uint64_t seed = 0;
    double ndcg = 0.0;
    std::uint32_t users_evaluated = 0;
    std::uint32_t users_skipped = 0;
    double sec_per_user = 0.0;
};

struct MetricReport {
    Variant variant = Variant::unc;
    std::uint32_t upl = 0;
    std::vector<SampleResult> samples;
    double mean = 0.0;
    double stddev = 0.0;
    double mean_sec_per_user = 0.0;
    std::uint32_t eligible_users = 0;
};

struct EvalOptions {
    std::vector<Variant> variants{Variant::unc, Variant::pnc, Variant::rnc, Variant::grank};
    std::vector<std::uint32_t> upls{10};
    std::uint32_t samples = 5;
    std::uint64_t seed = 42;
    PprConfig ppr{};
    GainKind gain = GainKind::standard;
    CandidateMode candidates = CandidateMode::test_items;
    std::size_t top_n = 10;
    unsigned threads = 0; // 0 = hardware concurrency
};

// per-sample seeds derived from the master seed, recorded for replay
std::vector<std::uint64_t> derive_sample_seeds(std::uint64_t master, std::uint32_t samples);

// The full protocol: for each UPL and sample, split, build the TPG from the
// train ratings, project each variant, rank every eligible user's candidates
// and average NDCG@top_n; mean and std taken across samples. `progress`, when
// given, receives one line per completed (variant, upl, sample).
std::vector<MetricReport> run_experiment(const RatingTable& table, const EvalOptions& options,
                                         std::ostream* progress = nullptr);

struct RuntimeOrdering {
    std::uint32_t upl = 0;
    std::vector<std::pair<Variant, double>> sec_per_user; // mean, one entry per variant
    bool rnc_before_unc = false;
    bool rnc_before_grank = false;
};

// Mean per-user recommendation time (PPR + ranking) per variant on one
// split. Only the ordering is meaningful, never the absolute numbers.
RuntimeOrdering runtime_ordering(const RatingTable& table, std::uint32_t upl,
                                 const EvalOptions& options);

} // namespace regrank
