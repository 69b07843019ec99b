#include "sgsr/classify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "sgsr/factors.hpp"
#include "sgsr/regular_gen.hpp"
#include "search_engine.hpp"

namespace sgsr {

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  int workers = std::min<std::size_t>(jobs, count);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  for (auto& t : pool) t.join();
}

std::filesystem::path census_file(const std::filesystem::path& dir, int r, int n) {
  return dir / ("r" + std::to_string(r) + "_n" + std::to_string(n) + ".g6");
}

struct Deadline {
  std::chrono::steady_clock::time_point at{};
  bool active = false;
  bool passed() const {
    return active && std::chrono::steady_clock::now() > at;
  }
};

}  // namespace

SearchReport classify(const ClassifyQuery& query) {
  SearchReport report;
  ClassifyQuery q = query;
  if (q.n_min <= 0) q.n_min = q.r + 1;
  report.query = q;
  int k_neg = negative_regularity(q.r, q.rho);
  if (q.mode == SearchMode::Constrained && k_neg == 0)
    throw std::invalid_argument("constrained mode needs rho < r");

  Deadline deadline;
  if (q.time_limit_s > 0) {
    deadline.active = true;
    deadline.at = std::chrono::steady_clock::now() +
                  std::chrono::microseconds(
                      static_cast<long long>(q.time_limit_s * 1e6));
  }
  std::atomic<long long> nodes_used{0};

  for (int n = q.n_min; n <= q.n_max; ++n) {
    if (n <= q.r || (n * q.r) % 2 != 0) continue;
    if (deadline.passed() || report.complete == false) {
      report.complete = false;
      break;
    }
    RunStats stats;
    stats.n = n;

    if (q.mode == SearchMode::Full) {
      std::vector<SignedGraph> hosts;
      if (q.source == SearchSource::Census) {
        hosts = ingest_census(census_file(q.census_dir, q.r, n), n, q.r).graphs;
      } else {
        // generation runs under the same budget as the search itself
        engine::Limits limits;
        limits.deadline = deadline.active
                              ? deadline.at
                              : std::chrono::steady_clock::time_point{};
        if (q.max_nodes > 0)
          limits.max_nodes = std::max(1ll, q.max_nodes - nodes_used.load());
        auto gstats =
            engine::run(n, q.r, 0, std::nullopt, limits,
                        [&hosts](const SignedGraph& g) {
                          hosts.push_back(g);
                          return true;
                        });
        nodes_used.fetch_add(gstats.nodes);
        stats.engine_nodes += gstats.nodes;
        if (gstats.budget_exceeded) {
          report.complete = false;
          report.runs.push_back(stats);
          break;
        }
      }
      stats.underlying_count = static_cast<long long>(hosts.size());

      std::vector<std::vector<Survivor>> found(hosts.size());
      std::vector<long long> signings(hosts.size(), 0);
      std::atomic<bool> out_of_time{false};
      parallel_for(hosts.size(), q.jobs, [&](std::size_t i) {
        if (out_of_time.load()) return;
        if (deadline.passed()) {
          out_of_time.store(true);
          return;
        }
        const SignedGraph& host = hosts[i];
        auto reps = enumerate_negative_subgraphs(host, k_neg);
        signings[i] = static_cast<long long>(reps.size());
        for (const auto& rep : reps) {
          SignedGraph signed_g = sign_with_negative(host, rep);
          auto res = check_srsg(signed_g);
          if (!std::holds_alternative<SrsgParams>(res)) continue;
          const auto& params = std::get<SrsgParams>(res);
          ClassLabel label = classify_class(params);
          if (label == ClassLabel::Homogeneous) continue;
          found[i].push_back(
              {signed_g, params, label, canonical_form(signed_g)});
        }
      });
      if (out_of_time.load()) report.complete = false;
      for (std::size_t i = 0; i < hosts.size(); ++i) {
        stats.signing_count += signings[i];
        for (auto& s : found[i]) report.survivors.push_back(std::move(s));
      }
    } else {
      ParamQuery pq;
      pq.r = q.r;
      pq.rho = q.rho;
      pq.n_min = pq.n_max = n;
      pq.require_noncomplete = false;
      pq.structural_filters = q.paper_filters;
      std::vector<Candidate> tuples;
      for (const auto& cand : enumerate_candidates(pq))
        for (const auto& mat : materialize(cand, pq)) tuples.push_back(mat);
      stats.candidate_tuples = static_cast<long long>(tuples.size());

      std::vector<std::vector<Survivor>> found(tuples.size());
      std::vector<engine::Stats> estats(tuples.size());
      parallel_for(tuples.size(), q.jobs, [&](std::size_t i) {
        const Candidate& cand = tuples[i];
        engine::PairTarget target{cand.a, cand.b, cand.c};
        engine::Limits limits;
        limits.deadline = deadline.active
                              ? deadline.at
                              : std::chrono::steady_clock::time_point{};
        if (q.max_nodes > 0) {
          long long left = q.max_nodes - nodes_used.load();
          limits.max_nodes = std::max(1ll, left);
        }
        SrsgParams want{n, q.r, cand.a, cand.b, cand.c};
        estats[i] = engine::run(
            n, q.r, k_neg, target, limits, [&](const SignedGraph& g) {
              auto res = check_srsg(g);
              if (std::holds_alternative<SrsgParams>(res) &&
                  std::get<SrsgParams>(res) == want) {
                ClassLabel label = classify_class(want);
                if (label != ClassLabel::Homogeneous)
                  found[i].push_back({g, want, label, canonical_form(g)});
              }
              return true;
            });
        nodes_used.fetch_add(estats[i].nodes);
      });
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        stats.signing_count += estats[i].emitted;
        stats.engine_nodes += estats[i].nodes;
        if (estats[i].budget_exceeded) report.complete = false;
        for (auto& s : found[i]) report.survivors.push_back(std::move(s));
      }
    }
    report.runs.push_back(stats);
  }

  // dedupe up to signed isomorphism, then deterministic order
  std::sort(report.survivors.begin(), report.survivors.end(),
            [](const Survivor& x, const Survivor& y) {
              if (x.params.n != y.params.n) return x.params.n < y.params.n;
              return x.form < y.form;
            });
  report.survivors.erase(
      std::unique(report.survivors.begin(), report.survivors.end(),
                  [](const Survivor& x, const Survivor& y) {
                    return x.form == y.form;
                  }),
      report.survivors.end());

  // order-free c = 0 strata can only be verified up to n_max by search
  ParamQuery box;
  box.r = q.r;
  box.rho = q.rho;
  box.n_min = q.n_min;
  box.n_max = q.n_max;
  box.require_noncomplete = true;
  for (const auto& cand : enumerate_candidates(box))
    if (cand.stratum())
      report.notes.push_back(
          "parameters (n," + std::to_string(cand.r) + "," +
          std::to_string(cand.a) + "," + std::to_string(cand.b) +
          ",0) satisfy the net constraint for every admissible order; "
          "search verified emptiness up to n=" + std::to_string(q.n_max) +
          " only");
  return report;
}

}  // namespace sgsr
