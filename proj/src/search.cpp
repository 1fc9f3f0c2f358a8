#include "bkg/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <thread>

#include "bkg/errors.hpp"

namespace bkg {

namespace {

using Clock = std::chrono::steady_clock;

void validate(const ProblemSpec& spec) {
    if (spec.k < 2 || spec.g < 1 || spec.n < 1) {
        throw InvalidInputError("need k >= 2, g >= 1, n >= 1");
    }
    auto width = checked_mul(spec.k, spec.n);
    if (!width || *width > 50'000'000) {
        throw InvalidInputError("k*n too large for the dense search tables");
    }
}

// Largest m such that C(m+k-1, k) <= g * (k*(w-1) + 1): no B_k[g] subset of a
// width-w window can be bigger, since all of its k-fold sums land in a range
// of k*(w-1)+1 values and each value absorbs at most g multisets.
std::vector<u32> window_capacity(unsigned k, u64 g, u32 n) {
    std::vector<u32> cap(n + 1, 0);
    u64 m = 0;
    for (u32 w = 1; w <= n; ++w) {
        const u64 slots = u64(k) * (w - 1) + 1;
        const u64 budget = checked_mul(g, slots).value_or(UINT64_MAX);
        while (multiset_count(m + 1, k) <= budget) ++m;
        cap[w] = u32(std::min<u64>(m, w));
    }
    return cap;
}

class Searcher {
  public:
    Searcher(const ProblemSpec& spec)
        : k_(spec.k), g_(spec.g), n_(u32(spec.n)) {
        state_.sum_counts.assign(k_ + 1,
                                 std::vector<u64>(size_t(k_) * n_ + 1, 0));
        state_.sum_counts[0][0] = 1;
    }

    const PartialState& state() const { return state_; }
    const std::vector<u32>& chosen() const { return state_.chosen; }

    // Adds e and refreshes all multiset-sum counts. If some k-fold sum now
    // exceeds g, rolls back and reports failure.
    bool try_add(u32 e) {
        bool ok = true;
        auto& cnt = state_.sum_counts;
        for (unsigned j = k_; j >= 1; --j) {
            for (unsigned t = 1; t <= j; ++t) {
                const auto& src = cnt[j - t];
                auto& dst = cnt[j];
                const u64 offset = u64(t) * e;
                const u64 hi = dst.size() - offset;
                for (u64 s = 0; s < hi; ++s) {
                    if (src[s]) {
                        dst[s + offset] += src[s];
                        if (j == k_ && dst[s + offset] > g_) ok = false;
                    }
                }
            }
        }
        state_.chosen.push_back(e);
        if (!ok) remove_last();
        return ok;
    }

    void remove_last() {
        const u32 e = state_.chosen.back();
        state_.chosen.pop_back();
        auto& cnt = state_.sum_counts;
        for (unsigned j = 1; j <= k_; ++j) {
            for (unsigned t = 1; t <= j; ++t) {
                const auto& src = cnt[j - t];
                auto& dst = cnt[j];
                const u64 offset = u64(t) * e;
                const u64 hi = dst.size() - offset;
                for (u64 s = 0; s < hi; ++s) {
                    if (src[s]) dst[s + offset] -= src[s];
                }
            }
        }
    }

  private:
    unsigned k_;
    u64 g_;
    u32 n_;
    PartialState state_;
};

struct SharedBest {
    std::atomic<u64> size{0};
    std::mutex mutex;
    std::vector<u32> witness;

    void offer(const std::vector<u32>& set) {
        u64 cur = size.load(std::memory_order_relaxed);
        while (set.size() > cur &&
               !size.compare_exchange_weak(cur, set.size())) {
        }
        std::lock_guard<std::mutex> lock(mutex);
        if (set.size() > witness.size()) witness = set;
    }
};

class DfsWorker {
  public:
    DfsWorker(const ProblemSpec& spec, const std::vector<u32>& window_cap,
              SharedBest& best, Clock::time_point deadline, bool has_deadline,
              const SearchOptions& options, bool allow_hook)
        : spec_(spec),
          n_(u32(spec.n)),
          window_cap_(window_cap),
          best_(best),
          deadline_(deadline),
          has_deadline_(has_deadline),
          searcher_(spec),
          options_(options),
          allow_hook_(allow_hook) {}

    u64 nodes = 0;
    bool timed_out = false;

    // Runs the subtree where the first two chosen elements are 1 and second,
    // or the whole tree rooted at {1} when second == 0.
    void run(u32 second) {
        if (!searcher_.try_add(1)) return;  // cannot fail; k >= 2
        ++nodes;
        best_.offer(searcher_.chosen());
        if (second == 0) {
            dfs(1);
        } else if (enter(second)) {
            dfs(second);
            searcher_.remove_last();
        }
        searcher_.remove_last();
    }

  private:
    bool hit_deadline() {
        if (!has_deadline_) return false;
        if (timed_out) return true;
        if ((nodes & 1023) == 0 && Clock::now() >= deadline_) timed_out = true;
        return timed_out;
    }

    bool enter(u32 e) {
        if (!searcher_.try_add(e)) return false;
        ++nodes;
        if (options_.node_hook && allow_hook_ && options_.node_hook_stride &&
            nodes % options_.node_hook_stride == 0) {
            options_.node_hook(searcher_.state());
        }
        best_.offer(searcher_.chosen());
        return true;
    }

    void dfs(u32 last) {
        if (hit_deadline()) return;
        const u64 chosen = searcher_.chosen().size();
        for (u32 e = last + 1; e <= n_; ++e) {
            const u64 incumbent = best_.size.load(std::memory_order_relaxed);
            // Even taking e and every later element cannot beat the incumbent;
            // later candidates only shrink the window, so stop.
            if (chosen + 1 + (n_ - e) <= incumbent) break;
            if (chosen + 1 + window_cap_[n_ - e] <= incumbent) break;
            if (enter(e)) {
                dfs(e);
                searcher_.remove_last();
            }
            if (hit_deadline()) return;
        }
    }

    ProblemSpec spec_;
    u32 n_;
    const std::vector<u32>& window_cap_;
    SharedBest& best_;
    Clock::time_point deadline_;
    bool has_deadline_;
    Searcher searcher_;
    const SearchOptions& options_;
    bool allow_hook_;
};

}  // namespace

std::vector<u32> greedy_set(const ProblemSpec& spec) {
    validate(spec);
    Searcher searcher(spec);
    for (u32 e = 1; e <= spec.n; ++e) searcher.try_add(e);
    return searcher.chosen();
}

SearchResult exact_max(const ProblemSpec& spec, const SearchOptions& options) {
    validate(spec);
    const auto start = Clock::now();
    const bool has_deadline = options.time_limit_seconds > 0;
    const auto deadline =
        start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(options.time_limit_seconds));

    SharedBest best;
    best.offer(greedy_set(spec));

    SearchResult result;
    result.spec = spec;

    const std::vector<u32> window_cap = window_capacity(spec.k, spec.g, u32(spec.n));
    bool timed_out = false;
    u64 nodes = 0;

    const unsigned threads =
        std::max(1u, std::min<unsigned>(options.threads, u32(spec.n)));
    if (threads == 1) {
        DfsWorker worker(spec, window_cap, best, deadline, has_deadline, options,
                         /*allow_hook=*/true);
        worker.run(0);
        nodes = worker.nodes;
        timed_out = worker.timed_out;
    } else {
        // Partition the tree at the second element; workers steal subtree
        // roots from a shared counter.
        std::atomic<u32> next_second{2};
        std::vector<std::thread> pool;
        std::vector<std::unique_ptr<DfsWorker>> workers;
        for (unsigned i = 0; i < threads; ++i) {
            workers.push_back(std::make_unique<DfsWorker>(
                spec, window_cap, best, deadline, has_deadline, options,
                /*allow_hook=*/false));
        }
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back([&, i] {
                for (;;) {
                    u32 second = next_second.fetch_add(1);
                    if (second > spec.n) break;
                    workers[i]->run(second);
                    if (workers[i]->timed_out) break;
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& w : workers) {
            nodes += w->nodes;
            timed_out = timed_out || w->timed_out;
        }
    }

    result.nodes = nodes;
    result.status = timed_out ? SearchResult::Status::timeout_lower_bound
                              : SearchResult::Status::exact;
    {
        std::lock_guard<std::mutex> lock(best.mutex);
        result.best = best.witness;
    }
    result.seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

}  // namespace bkg
