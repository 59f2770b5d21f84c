#include "predkit/paging_policies.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "predkit/error.hpp"
#include "predkit/measures.hpp"

namespace predkit {

void FwzPolicy::on_hit(std::size_t, PageId page, Bit prediction) { bit_[page] = prediction; }

std::vector<PageId> FwzPolicy::on_fault(std::size_t, PageId page, Bit prediction, const Cache& cache) {
  bit_[page] = prediction;
  if (!cache.full()) return {};
  for (PageId p : cache.pages()) {
    if (bit_.at(p) == 1) return {p};
  }
  return {cache.pages().begin(), cache.pages().end()};
}

std::string to_string(BlockEnd end) {
  switch (end) {
    case BlockEnd::kCondition1:
      return "cond1";
    case BlockEnd::kCondition2:
      return "cond2";
    case BlockEnd::kFinalIncomplete:
      return "final";
  }
  return "?";
}

void FbbPolicy::on_hit(std::size_t, PageId page, Bit prediction) { bit_[page] = prediction; }

std::vector<PageId> FbbPolicy::on_fault(std::size_t index, PageId page, Bit prediction,
                                        const Cache& cache) {
  std::vector<PageId> victims;
  if (cache.full()) {
    PageId oldest = 0;
    std::size_t oldest_time = std::numeric_limits<std::size_t>::max();
    bool any_one = false;
    for (PageId p : cache.pages()) {
      if (bit_.at(p) != 1) continue;
      any_one = true;
      if (evicted_in_block_.count(p) > 0) continue;
      if (entered_.at(p) < oldest_time) {
        oldest_time = entered_.at(p);
        oldest = p;
      }
    }
    if (oldest_time != std::numeric_limits<std::size_t>::max()) {
      victims.push_back(oldest);
      evicted_in_block_.insert(oldest);
    } else {
      closed_.push_back({block_begin_, index + 1,
                         any_one ? BlockEnd::kCondition2 : BlockEnd::kCondition1});
      victims.push_back(*cache.pages().begin());
      flush_pending_ = true;
    }
    for (PageId v : victims) entered_.erase(v);
  }
  bit_[page] = prediction;
  entered_[page] = index;
  return victims;
}

std::vector<PageId> FbbPolicy::after_request(std::size_t index, const Cache& cache) {
  if (!flush_pending_) return {};
  flush_pending_ = false;
  evicted_in_block_.clear();
  entered_.clear();
  block_begin_ = index + 1;
  return {cache.pages().begin(), cache.pages().end()};
}

std::vector<BlockRange> FbbPolicy::blocks(std::size_t input_length) const {
  std::vector<BlockRange> out = closed_;
  if (block_begin_ < input_length) {
    out.push_back({block_begin_, input_length, BlockEnd::kFinalIncomplete});
  }
  return out;
}

void LruPolicy::on_hit(std::size_t index, PageId page, Bit) { last_used_[page] = index; }

std::vector<PageId> LruPolicy::on_fault(std::size_t index, PageId page, Bit, const Cache& cache) {
  std::vector<PageId> victims;
  if (cache.full()) {
    PageId victim = *std::min_element(cache.pages().begin(), cache.pages().end(),
                                      [&](PageId a, PageId b) { return last_used_.at(a) < last_used_.at(b); });
    victims.push_back(victim);
    last_used_.erase(victim);
  }
  last_used_[page] = index;
  return victims;
}

std::vector<PageId> FifoPolicy::on_fault(std::size_t index, PageId page, Bit, const Cache& cache) {
  std::vector<PageId> victims;
  if (cache.full()) {
    PageId victim = *std::min_element(cache.pages().begin(), cache.pages().end(),
                                      [&](PageId a, PageId b) { return entered_.at(a) < entered_.at(b); });
    victims.push_back(victim);
    entered_.erase(victim);
  }
  entered_[page] = index;
  return victims;
}

PagingRun fwz(std::span<const PageId> trace, std::int64_t k, const BitString& predictions,
              bool record_events) {
  FwzPolicy policy;
  return simulate_paging(trace, predictions, k, policy, record_events);
}

FbbRun fbb(std::span<const PageId> trace, std::int64_t t, const BitString& predictions,
           bool record_events) {
  FbbPolicy policy;
  FbbRun out;
  out.run = simulate_paging(trace, predictions, t, policy, record_events);
  out.blocks = policy.blocks(trace.size());
  return out;
}

std::vector<FbbBlockStats> fbb_block_stats(std::span<const PageId> trace, std::int64_t t,
                                           const BitString& predictions, const BitString& truth,
                                           const FbbRun& run) {
  if (truth.size() != trace.size() || predictions.size() != trace.size()) {
    throw InvalidInput("fbb_block_stats: trace, predictions and truth differ in length");
  }
  LfdRun global = lfd(trace, t);
  std::vector<FbbBlockStats> out;
  for (std::size_t b = 0; b < run.blocks.size(); ++b) {
    const BlockRange& range = run.blocks[b];
    FbbBlockStats stats;
    stats.index = b;
    stats.range = range;
    std::unordered_map<PageId, int> faults_on;
    std::unordered_map<PageId, std::size_t> last_fault;
    for (std::size_t i = range.begin; i < range.end; ++i) {
      faults_on.try_emplace(trace[i], 0);
      if (run.run.fault_at[i]) {
        ++stats.fbb_faults;
        ++faults_on[trace[i]];
        last_fault[trace[i]] = i;
      }
      if (global.fault_at[i]) ++stats.lfd_global;
      stats.mu0 += truth[i] * (1 - predictions[i]);
      stats.mu1 += (1 - truth[i]) * predictions[i];
    }
    stats.s = static_cast<std::int64_t>(faults_on.size());
    for (const auto& [page, count] : faults_on) {
      if (count < 2) continue;
      ++stats.d;
      std::size_t f = last_fault.at(page);
      std::size_t j = f;
      while (j-- > range.begin) {
        if (trace[j] == page) break;
      }
      if (truth[j] == 1 && predictions[j] == 1) {
        ++stats.d_c;
      } else {
        ++stats.d_w;
      }
    }
    stats.lfd_restarted =
        lfd(trace.subspan(range.begin, range.end - range.begin), t).faults;
    out.push_back(stats);
  }
  return out;
}

std::vector<BlockLemmaCheck> check_fbb_lemmas(const FbbBlockStats& stats, std::int64_t t,
                                              LfdAttribution attribution) {
  const Rational lfd_value(attribution == LfdAttribution::kGlobal ? stats.lfd_global
                                                                  : stats.lfd_restarted);
  const Rational tr(t);
  const Rational eps(1, 3 * t * t);
  const bool complete = stats.range.condition != BlockEnd::kFinalIncomplete;
  const Rational fbb_value(stats.fbb_faults);
  std::vector<BlockLemmaCheck> out;

  auto add = [&](std::string lemma, bool applies, Rational lhs, Rational rhs) {
    out.push_back({std::move(lemma), stats.index, applies, !applies || lhs <= rhs, lhs, rhs});
  };
  add("cond1", stats.range.condition == BlockEnd::kCondition1, Rational(1), Rational(stats.mu0));
  add("beta_2k", t >= 3, fbb_value, (tr - Rational(1, t)) * lfd_value + 2 * tr);
  add("lfd_bound", complete && stats.mu0 == 0, Rational(2), lfd_value);
  add("rule2", t >= 5 && complete && stats.mu0 == 0, fbb_value,
      (tr - eps) * lfd_value + (1 - eps) * Rational(stats.mu1));
  add("block_bound", t >= 5, fbb_value,
      (tr - eps) * lfd_value + 2 * tr * Rational(stats.mu0) + (1 - eps) * Rational(stats.mu1) +
          (complete ? Rational(0) : 2 * tr));
  return out;
}

Rational fbb_total_bound(std::int64_t t, std::int64_t lfd_faults, std::int64_t mu0_value,
                         std::int64_t mu1_value) {
  const Rational eps(1, 3 * t * t);
  return (Rational(t) - eps) * lfd_faults + Rational(2 * t * mu0_value) +
         (1 - eps) * Rational(mu1_value) + Rational(2 * t);
}

}  // namespace predkit
