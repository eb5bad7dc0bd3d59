#include "regrank/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>

#include "regrank/errors.hpp"
#include "regrank/parallel.hpp"
#include "regrank/preference.hpp"

namespace regrank {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Minimal deterministic generator; never touches global entropy.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() { return state = splitmix64(state); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

} // namespace

std::vector<std::uint64_t> derive_sample_seeds(std::uint64_t master, std::uint32_t samples) {
    std::vector<std::uint64_t> out(samples);
    for (std::uint32_t i = 0; i < samples; ++i) out[i] = splitmix64(master + i);
    return out;
}

UplSplit upl_split(const RatingTable& table, std::uint32_t upl, std::uint64_t seed) {
    if (upl < 1) throw std::invalid_argument("UPL must be >= 1");

    UplSplit split;
    split.upl = upl;
    split.seed = seed;

    const auto& rows = table.rows;
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j < rows.size() && rows[j].user == rows[i].user) ++j;
        std::size_t count = j - i;
        // every eligible user keeps >= 10 ratings for the test side
        if (count >= upl + 10) {
            UserSplit us;
            us.user = rows[i].user;
            std::vector<std::size_t> idx(count);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            // per-user generator keyed by (seed, user) so row order and the
            // other users never influence this user's sample
            Rng rng{splitmix64(seed ^ fnv1a(us.user))};
            for (std::uint32_t k = 0; k < upl; ++k) {
                std::size_t pick = k + rng.below(count - k);
                std::swap(idx[k], idx[pick]);
            }
            std::sort(idx.begin(), idx.begin() + upl);
            std::size_t t = 0;
            for (std::size_t k = 0; k < count; ++k) {
                if (t < upl && idx[t] == k) {
                    us.train.push_back(rows[i + k]);
                    ++t;
                } else {
                    us.test.push_back(rows[i + k]);
                }
            }
            split.users.push_back(std::move(us));
        }
        i = j;
    }
    if (split.users.empty())
        throw DataError("no eligible users: every user needs at least UPL+10 = " +
                        std::to_string(upl + 10) + " ratings");
    return split;
}

RatingTable UplSplit::train_table(const RatingScale& scale) const {
    std::vector<Rating> rows;
    for (const auto& us : users) rows.insert(rows.end(), us.train.begin(), us.train.end());
    return normalize_ratings(std::move(rows), scale);
}

double dcg(std::span<const double> rels, GainKind gain) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        double g = gain == GainKind::standard ? std::exp2(rels[i]) - 1.0
                                              : std::exp2(rels[i] - 1.0);
        sum += g / std::log2(static_cast<double>(i) + 2.0);
    }
    return sum;
}

double ndcg_at_n(const RecommendationList& rec, const std::map<std::string, double>& test_rels,
                 std::size_t n, GainKind gain) {
    if (test_rels.size() < n) return -1.0;

    std::vector<double> rels;
    rels.reserve(n);
    for (const auto& e : rec.entries) {
        if (rels.size() == n) break;
        auto it = test_rels.find(e.item);
        rels.push_back(it == test_rels.end() ? 0.0 : it->second);
    }
    while (rels.size() < n) rels.push_back(0.0);

    std::vector<double> ideal;
    ideal.reserve(test_rels.size());
    for (const auto& [item, rel] : test_rels) ideal.push_back(rel);
    std::sort(ideal.begin(), ideal.end(), std::greater<>());
    ideal.resize(n);

    double denom = dcg(ideal, gain);
    if (denom == 0.0) return -1.0; // all-zero relevances carry no signal
    return dcg(rels, gain) / denom;
}

namespace {

struct SampleRun {
    double mean_ndcg = 0.0;
    std::uint32_t evaluated = 0;
    std::uint32_t skipped = 0;
    double sec_per_user = 0.0;
};

SampleRun evaluate_sample(const ProjectedGraph& proj, const UplSplit& split,
                          const EvalOptions& options) {
    const std::size_t n_users = split.users.size();
    std::vector<double> ndcgs(n_users, -1.0);
    std::vector<double> seconds(n_users, 0.0);

    parallel_for(n_users, options.threads, [&](std::size_t ui) {
        const UserSplit& us = split.users[ui];
        auto row_it = proj.user_row.find(us.user);
        if (row_it == proj.user_row.end()) return; // no train preference survived (all ties)

        std::map<std::string, double> test_rels;
        for (const Rating& r : us.test) test_rels[r.item] = r.value;

        auto t0 = std::chrono::steady_clock::now();
        ScoreVector scores = personalized_pagerank(proj, row_it->second, options.ppr);

        std::vector<std::string> candidates;
        if (options.candidates == CandidateMode::test_items) {
            candidates.reserve(test_rels.size());
            for (const auto& [item, rel] : test_rels) candidates.push_back(item);
        } else {
            std::set<std::string> train_items;
            for (const Rating& r : us.train) train_items.insert(r.item);
            candidates.reserve(proj.item_labels.size());
            for (const std::string& item : proj.item_labels) {
                if (!train_items.contains(item)) candidates.push_back(item);
            }
        }
        RecommendationList ranked = rank_items(proj, scores, candidates);
        auto t1 = std::chrono::steady_clock::now();
        seconds[ui] = std::chrono::duration<double>(t1 - t0).count();

        ndcgs[ui] = ndcg_at_n(ranked, test_rels, options.top_n, options.gain);
    });

    // order-independent aggregation: per-user results land in fixed slots and
    // are reduced serially in canonical user order
    SampleRun run;
    double sum = 0.0, sec = 0.0;
    for (std::size_t ui = 0; ui < n_users; ++ui) {
        if (ndcgs[ui] < 0.0) {
            ++run.skipped;
            continue;
        }
        sum += ndcgs[ui];
        sec += seconds[ui];
        ++run.evaluated;
    }
    if (run.evaluated) {
        run.mean_ndcg = sum / run.evaluated;
        run.sec_per_user = sec / run.evaluated;
    }
    return run;
}

} // namespace

std::vector<MetricReport> run_experiment(const RatingTable& table, const EvalOptions& options,
                                         std::ostream* progress) {
    std::vector<std::uint64_t> seeds = derive_sample_seeds(options.seed, options.samples);
    std::vector<MetricReport> reports;

    for (std::uint32_t upl : options.upls) {
        // splits and projections are shared by every variant of the sample
        std::vector<MetricReport> per_variant(options.variants.size());
        for (std::size_t v = 0; v < options.variants.size(); ++v) {
            per_variant[v].variant = options.variants[v];
            per_variant[v].upl = upl;
        }

        for (std::uint32_t s = 0; s < options.samples; ++s) {
            UplSplit split;
            try {
                split = upl_split(table, upl, seeds[s]);
            } catch (const DataError& e) {
                throw DataError("UPL " + std::to_string(upl) + ", sample " + std::to_string(s) +
                                ": " + e.what());
            }
            TripartitePreferenceGraph tpg = build_tpg(split.train_table(table.scale));

            for (std::size_t v = 0; v < options.variants.size(); ++v) {
                ProjectedGraph proj = project_variant(tpg, options.variants[v]);
                SampleRun run = evaluate_sample(proj, split, options);
                per_variant[v].samples.push_back(SampleResult{
                    seeds[s], run.mean_ndcg, run.evaluated, run.skipped, run.sec_per_user});
                per_variant[v].eligible_users =
                    static_cast<std::uint32_t>(split.users.size());
                if (progress) {
                    (*progress) << "upl=" << upl << " sample=" << s
                                << " variant=" << variant_name(options.variants[v])
                                << " ndcg@" << options.top_n << "=" << run.mean_ndcg
                                << " users=" << run.evaluated << " skipped=" << run.skipped
                                << " sec/user=" << run.sec_per_user << '\n';
                }
            }
        }

        for (auto& report : per_variant) {
            double sum = 0.0, sec = 0.0;
            for (const auto& s : report.samples) {
                sum += s.ndcg;
                sec += s.sec_per_user;
            }
            report.mean = report.samples.empty() ? 0.0 : sum / report.samples.size();
            report.mean_sec_per_user =
                report.samples.empty() ? 0.0 : sec / report.samples.size();
            double var = 0.0;
            for (const auto& s : report.samples) var += (s.ndcg - report.mean) * (s.ndcg - report.mean);
            report.stddev =
                report.samples.size() > 1 ? std::sqrt(var / report.samples.size()) : 0.0;
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

RuntimeOrdering runtime_ordering(const RatingTable& table, std::uint32_t upl,
                                 const EvalOptions& options) {
    EvalOptions opts = options;
    opts.upls = {upl};
    opts.samples = 1;
    std::vector<MetricReport> reports = run_experiment(table, opts);

    RuntimeOrdering out;
    out.upl = upl;
    double rnc = -1.0, unc = -1.0, grank = -1.0;
    for (const auto& r : reports) {
        out.sec_per_user.emplace_back(r.variant, r.mean_sec_per_user);
        if (r.variant == Variant::rnc) rnc = r.mean_sec_per_user;
        if (r.variant == Variant::unc) unc = r.mean_sec_per_user;
        if (r.variant == Variant::grank) grank = r.mean_sec_per_user;
    }
    out.rnc_before_unc = rnc >= 0.0 && unc >= 0.0 && rnc < unc;
    out.rnc_before_grank = rnc >= 0.0 && grank >= 0.0 && rnc < grank;
    return out;
}

} // namespace regrank
