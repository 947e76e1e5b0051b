#include "setmax/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "setmax/checkpoint.hpp"

namespace setmax {
namespace {

using Clock = std::chrono::steady_clock;

// Decks above this size use one-card work-unit prefixes so the frontier
// stays small enough to checkpoint.
constexpr std::uint32_t kTwoLevelDeckLimit = 729;
constexpr std::uint64_t kStopPollMask = (1u << 20) - 1;

double binomial(double n, double k) {
  if (k < 0 || k > n) return 0;
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

void raise_to(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t seen = target.load(std::memory_order_relaxed);
  while (seen < value &&
         !target.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
  }
}

struct UnitResult {
  bool found = false;
  std::uint64_t best = 0;
  std::vector<CardId> witness;
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
};

// Depth-first search below one work-unit prefix. One instance per thread.
class SubtreeSearch {
 public:
  SubtreeSearch(Dimension dim, int n, std::atomic<std::uint64_t>& best, std::stop_token stop)
      : deck_(dim.deck_size()),
        n_(n),
        best_(best),
        stop_(std::move(stop)),
        present_(deck_, 0),
        chosen_(static_cast<std::size_t>(n)),
        bound_(static_cast<std::size_t>(n) + 1) {
    for (int k = 0; k <= n; ++k) bound_[k] = bound_remaining(k, n);
  }

  /// Returns nullopt when interrupted part way.
  std::optional<UnitResult> run(std::span<const CardId> prefix) {
    result_ = UnitResult{};
    aborted_ = false;
    std::fill(present_.begin(), present_.end(), 0);
    std::uint64_t current = 0;
    int depth = 0;
    for (CardId card : prefix) {
      current += place_delta(card.value, depth);
      present_[card.value] = 1;
      chosen_[depth++] = card;
    }
    ++result_.nodes;
    if (current + bound_[depth] < best_.load(std::memory_order_relaxed)) {
      ++result_.pruned;
    } else {
      descend(depth, prefix.back().value + 1u, current);
    }
    if (aborted_) return std::nullopt;
    return std::move(result_);
  }

 private:
  std::uint64_t place_delta(std::uint32_t card, int depth) const {
    std::uint64_t hits = 0;
    for (int i = 0; i < depth; ++i) {
      hits += present_[detail::third_card_unchecked(CardId{card}, chosen_[i]).value];
    }
    return hits / 2;
  }

  void descend(int depth, std::uint32_t next, std::uint64_t current) {
    if (depth == n_) {
      if (!result_.found || current > result_.best) {
        result_.found = true;
        result_.best = current;
        result_.witness.assign(chosen_.begin(), chosen_.end());
        raise_to(best_, current);
      }
      return;
    }
    const std::uint32_t last = deck_ - static_cast<std::uint32_t>(n_ - depth);
    for (std::uint32_t card = next; card <= last; ++card) {
      if ((++result_.nodes & kStopPollMask) == 0 && stop_.stop_requested()) {
        aborted_ = true;
      }
      if (aborted_) return;
      const std::uint64_t after = current + place_delta(card, depth);
      if (after + bound_[depth + 1] < best_.load(std::memory_order_relaxed)) {
        ++result_.pruned;
        continue;
      }
      present_[card] = 1;
      chosen_[depth] = CardId{card};
      descend(depth + 1, card + 1, after);
      present_[card] = 0;
    }
  }

  std::uint32_t deck_;
  int n_;
  std::atomic<std::uint64_t>& best_;
  std::stop_token stop_;
  std::vector<std::uint8_t> present_;
  std::vector<CardId> chosen_;
  std::vector<std::uint64_t> bound_;
  UnitResult result_;
  bool aborted_ = false;
};

struct UnitPlan {
  std::vector<CardId> fixed;
  // Card ids beyond `fixed`, increasing.
  std::vector<std::vector<CardId>> prefixes;
};

UnitPlan plan_units(const SearchConfig& config) {
  UnitPlan plan;
  if (config.symmetry) plan.fixed = {CardId{0}, CardId{1}};
  const std::uint32_t deck = config.dim.deck_size();
  const int free_cards = config.n - static_cast<int>(plan.fixed.size());
  const int levels = std::min(deck <= kTwoLevelDeckLimit ? 2 : 1, free_cards);
  const auto first = static_cast<std::uint32_t>(plan.fixed.size());
  // The last prefix card must leave room for the remaining free cards.
  const std::uint32_t limit = deck - static_cast<std::uint32_t>(free_cards - levels);
  for (std::uint32_t a = first; a < limit; ++a) {
    if (levels == 1) {
      plan.prefixes.push_back({CardId{a}});
      continue;
    }
    for (std::uint32_t b = a + 1; b < limit; ++b) plan.prefixes.push_back({CardId{a}, CardId{b}});
  }
  return plan;
}

struct Merged {
  std::uint64_t best = 0;
  std::optional<std::uint64_t> witness_unit;
  std::vector<CardId> witness;
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;

  void absorb(std::uint64_t unit, const UnitResult& r) {
    nodes += r.nodes;
    pruned += r.pruned;
    if (!r.found) return;
    if (!witness_unit || r.best > best || (r.best == best && unit < *witness_unit)) {
      best = r.best;
      witness_unit = unit;
      witness = r.witness;
    }
  }
};

Checkpoint make_checkpoint(const SearchConfig& config, const UnitPlan& plan,
                           const std::vector<char>& done, const Merged& merged) {
  Checkpoint cp;
  cp.props = config.dim.props();
  cp.n = config.n;
  cp.symmetry = config.symmetry;
  cp.units_total = plan.prefixes.size();
  for (std::size_t i = 0; i < plan.prefixes.size(); ++i) {
    if (!done[i]) cp.frontier.push_back(plan.prefixes[i]);
  }
  cp.best_so_far = merged.best;
  cp.witness_unit = merged.witness_unit;
  cp.witness = merged.witness;
  cp.nodes_visited = merged.nodes;
  cp.configs_pruned = merged.pruned;
  return cp;
}

}  // namespace

void validate(const SearchConfig& config) {
  const auto deck = static_cast<int>(config.dim.deck_size());
  if (config.n < 3 || config.n > deck) {
    throw Error(Errc::invalid_config, "board size must be in [3, " + std::to_string(deck) +
                                          "] for d=" + std::to_string(config.dim.props()) +
                                          ", got " + std::to_string(config.n));
  }
  if (config.threads < 1) {
    throw Error(Errc::invalid_config, "thread count must be positive");
  }
}

double naive_triple_checks(Dimension dim, int n) {
  return binomial(dim.deck_size(), n) * binomial(n, 3);
}

SearchResult max_sets_naive(const SearchConfig& config) {
  validate(config);
  const auto start = Clock::now();
  const double estimate = naive_triple_checks(config.dim, config.n);
  if (estimate > config.naive_budget) {
    std::ostringstream msg;
    msg << "naive search for d=" << config.dim.props() << ", n=" << config.n << " needs about "
        << estimate << " triple checks (C(" << config.dim.deck_size() << "," << config.n
        << ") * C(" << config.n << ",3)), over the budget of " << config.naive_budget;
    throw Error(Errc::budget_exceeded, msg.str());
  }

  const int n = config.n;
  const std::uint32_t deck = config.dim.deck_size();
  std::vector<std::uint32_t> idx(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> present(deck, 0);
  for (int i = 0; i < n; ++i) {
    idx[i] = static_cast<std::uint32_t>(i);
    present[i] = 1;
  }

  SearchResult result;
  bool found = false;
  std::vector<std::uint32_t> best_idx;
  bool interrupted = false;
  while (true) {
    std::uint64_t hits = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        hits += present[detail::third_card_unchecked(CardId{idx[i]}, CardId{idx[j]}).value];
      }
    }
    const std::uint64_t count = hits / 3;
    if (!found || count > result.max_sets) {
      found = true;
      result.max_sets = count;
      best_idx = idx;
    }
    if ((++result.nodes_visited & kStopPollMask) == 0 && config.stop.stop_requested()) {
      interrupted = true;
      break;
    }

    int i = n - 1;
    while (i >= 0 && idx[i] == deck - static_cast<std::uint32_t>(n - i)) --i;
    if (i < 0) break;
    for (int j = i; j < n; ++j) present[idx[j]] = 0;
    ++idx[i];
    present[idx[i]] = 1;
    for (int j = i + 1; j < n; ++j) {
      idx[j] = idx[j - 1] + 1;
      present[idx[j]] = 1;
    }
  }

  std::vector<CardId> witness;
  for (auto v : best_idx) witness.emplace_back(v);
  result.witness = Board(config.dim, witness);
  result.complete = !interrupted;
  result.elapsed = Clock::now() - start;
  return result;
}

SearchResult max_sets_pruned(const SearchConfig& config, const Checkpoint* resume) {
  validate(config);
  if (config.mode != SearchMode::pruned) {
    throw Error(Errc::invalid_config, "max_sets_pruned called with a naive configuration");
  }
  const auto start = Clock::now();
  const UnitPlan plan = plan_units(config);
  const std::size_t total = plan.prefixes.size();

  std::vector<char> done(total, 0);
  Merged merged;
  if (resume) {
    if (resume->props != config.dim.props() || resume->n != config.n ||
        resume->symmetry != config.symmetry || resume->units_total != total) {
      throw Error(Errc::checkpoint_mismatch,
                  "checkpoint was written for d=" + std::to_string(resume->props) +
                      ", n=" + std::to_string(resume->n) +
                      ", symmetry=" + (resume->symmetry ? "on" : "off") +
                      ", which differs from the requested search");
    }
    std::map<std::vector<CardId>, std::size_t> index;
    for (std::size_t i = 0; i < total; ++i) index.emplace(plan.prefixes[i], i);
    std::fill(done.begin(), done.end(), 1);
    for (const auto& prefix : resume->frontier) {
      const auto it = index.find(prefix);
      if (it == index.end()) {
        throw Error(Errc::checkpoint_corrupt, "checkpoint frontier holds an unknown work unit");
      }
      done[it->second] = 0;
    }
    merged.best = resume->best_so_far;
    merged.witness_unit = resume->witness_unit;
    merged.witness = resume->witness;
    merged.nodes = resume->nodes_visited;
    merged.pruned = resume->configs_pruned;
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < total; ++i) {
    if (!done[i]) pending.push_back(i);
  }

  std::atomic<std::uint64_t> best{merged.best};
  std::atomic<std::size_t> cursor{0};
  std::atomic<std::uint64_t> started{0};
  std::mutex mutex;
  std::uint64_t units_done = total - pending.size();
  auto last_save = Clock::now();
  auto last_report = Clock::now();

  auto maybe_save = [&](bool force) {
    // Caller holds `mutex`.
    const auto now = Clock::now();
    if (config.on_progress && (force || now - last_report >= config.report_interval)) {
      last_report = now;
      config.on_progress(SearchProgress{units_done, total, merged.best, merged.nodes,
                                        now - start});
    }
    if (config.checkpoint_path && (force || now - last_save >= config.report_interval)) {
      last_save = now;
      checkpoint_save(make_checkpoint(config, plan, done, merged), *config.checkpoint_path);
    }
  };

  auto worker = [&] {
    SubtreeSearch search(config.dim, config.n, best, config.stop);
    std::vector<CardId> prefix;
    while (!config.stop.stop_requested()) {
      if (config.unit_limit && started.fetch_add(1) >= *config.unit_limit) break;
      const std::size_t k = cursor.fetch_add(1);
      if (k >= pending.size()) break;
      const std::size_t unit = pending[k];
      prefix = plan.fixed;
      prefix.insert(prefix.end(), plan.prefixes[unit].begin(), plan.prefixes[unit].end());
      auto outcome = search.run(prefix);
      if (!outcome) break;
      std::lock_guard lock(mutex);
      merged.absorb(unit, *outcome);
      done[unit] = 1;
      ++units_done;
      maybe_save(false);
    }
  };

  {
    std::vector<std::jthread> pool;
    const int extra = std::min<int>(config.threads, static_cast<int>(pending.size())) - 1;
    for (int t = 0; t < extra; ++t) pool.emplace_back(worker);
    worker();
  }

  std::lock_guard lock(mutex);
  maybe_save(true);

  SearchResult result;
  result.max_sets = merged.best;
  result.witness = Board(config.dim, merged.witness);
  result.nodes_visited = merged.nodes;
  result.configs_pruned = merged.pruned;
  result.complete = units_done == total;
  result.elapsed = Clock::now() - start;
  return result;
}

SearchResult max_sets(const SearchConfig& config) {
  return config.mode == SearchMode::naive ? max_sets_naive(config) : max_sets_pruned(config);
}

}  // namespace setmax
