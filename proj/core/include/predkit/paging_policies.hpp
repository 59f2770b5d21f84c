#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "predkit/cost.hpp"
#include "predkit/paging.hpp"

namespace predkit {

// Each page carries the prediction of its latest request. On a fault with a
// full cache, evict the smallest-id cached page whose bit is 1; if there is
// none, evict every cached page.
class FwzPolicy final : public PagingPolicy {
 public:
  std::string name() const override { return "fwz"; }
  void on_hit(std::size_t index, PageId page, Bit prediction) override;
  std::vector<PageId> on_fault(std::size_t index, PageId page, Bit prediction,
                               const Cache& cache) override;

 private:
  std::map<PageId, Bit> bit_;
};

enum class BlockEnd { kCondition1, kCondition2, kFinalIncomplete };
std::string to_string(BlockEnd end);

struct BlockRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  BlockEnd condition = BlockEnd::kFinalIncomplete;
};

// Splits the input into blocks. Inside a block, evictions only take pages
// whose latest prediction is 1 and that were not evicted earlier in the block,
// oldest current residence first. A fault on a full cache with no such page
// ends the block: Condition 1 if no cached page has prediction 1, Condition 2
// otherwise. The smallest cached id is evicted and the cache is flushed after
// that request.
class FbbPolicy final : public PagingPolicy {
 public:
  std::string name() const override { return "fbb"; }
  void on_hit(std::size_t index, PageId page, Bit prediction) override;
  std::vector<PageId> on_fault(std::size_t index, PageId page, Bit prediction,
                               const Cache& cache) override;
  std::vector<PageId> after_request(std::size_t index, const Cache& cache) override;

  // Completed blocks plus the trailing incomplete one, given the input length.
  std::vector<BlockRange> blocks(std::size_t input_length) const;

 private:
  std::map<PageId, Bit> bit_;
  std::map<PageId, std::size_t> entered_;
  std::set<PageId> evicted_in_block_;
  std::vector<BlockRange> closed_;
  std::size_t block_begin_ = 0;
  bool flush_pending_ = false;
};

class LruPolicy final : public PagingPolicy {
 public:
  std::string name() const override { return "lru"; }
  void on_hit(std::size_t index, PageId page, Bit prediction) override;
  std::vector<PageId> on_fault(std::size_t index, PageId page, Bit prediction,
                               const Cache& cache) override;

 private:
  std::map<PageId, std::size_t> last_used_;
};

class FifoPolicy final : public PagingPolicy {
 public:
  std::string name() const override { return "fifo"; }
  void on_hit(std::size_t, PageId, Bit) override {}
  std::vector<PageId> on_fault(std::size_t index, PageId page, Bit prediction,
                               const Cache& cache) override;

 private:
  std::map<PageId, std::size_t> entered_;
};

PagingRun fwz(std::span<const PageId> trace, std::int64_t k, const BitString& predictions,
              bool record_events = false);

struct FbbRun {
  PagingRun run;
  std::vector<BlockRange> blocks;
};

FbbRun fbb(std::span<const PageId> trace, std::int64_t t, const BitString& predictions,
           bool record_events = false);

struct FbbBlockStats {
  std::size_t index = 0;
  BlockRange range;
  std::int64_t s = 0;        // distinct pages in the block
  std::int64_t d = 0;        // pages FbB faults on at least twice in the block
  std::int64_t d_c = 0;
  std::int64_t d_w = 0;
  std::int64_t fbb_faults = 0;
  std::int64_t lfd_restarted = 0;  // LFD from an empty cache on the block alone
  std::int64_t lfd_global = 0;     // faults of the global LFD run inside the block
  std::int64_t mu0 = 0;
  std::int64_t mu1 = 0;
};

// Per-block instrumentation. `truth` is the global lfd_labels of the trace.
std::vector<FbbBlockStats> fbb_block_stats(std::span<const PageId> trace, std::int64_t t,
                                           const BitString& predictions, const BitString& truth,
                                           const FbbRun& run);

enum class LfdAttribution { kRestarted, kGlobal };

struct BlockLemmaCheck {
  std::string lemma;
  std::size_t block = 0;
  bool applies = false;
  bool holds = true;
  Rational lhs{0};
  Rational rhs{0};
};

// Evaluates the per-block lemmas: a Condition 1 block has mu0 >= 1; every block
// has fbb <= (t - 1/t) lfd + 2t; a complete block without wrong 0-predictions
// has lfd >= 2 and fbb <= (t - e) lfd + (1 - e) mu1 with e = 1/(3t^2); every
// block satisfies the summed per-block bound.
std::vector<BlockLemmaCheck> check_fbb_lemmas(const FbbBlockStats& stats, std::int64_t t,
                                              LfdAttribution attribution);

// (t - 1/(3t^2)) * lfd + 2t * mu0 + (1 - 1/(3t^2)) * mu1 + 2t.
Rational fbb_total_bound(std::int64_t t, std::int64_t lfd_faults, std::int64_t mu0_value,
                         std::int64_t mu1_value);

}  // namespace predkit
