#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "predkit/bits.hpp"
#include "predkit/instance.hpp"

namespace predkit {

class Cache {
 public:
  explicit Cache(std::int64_t capacity);

  std::int64_t capacity() const { return capacity_; }
  std::size_t size() const { return pages_.size(); }
  bool full() const { return static_cast<std::int64_t>(pages_.size()) >= capacity_; }
  bool contains(PageId page) const { return pages_.count(page) > 0; }
  const std::set<PageId>& pages() const { return pages_; }

  void insert(PageId page);
  // Throws PolicyBug when the page is not cached.
  void evict(PageId page);

 private:
  std::int64_t capacity_;
  std::set<PageId> pages_;
};

// An online eviction policy. The simulator owns the cache; the policy only
// names pages to drop.
class PagingPolicy {
 public:
  virtual ~PagingPolicy() = default;
  virtual std::string name() const = 0;

  virtual void on_hit(std::size_t index, PageId page, Bit prediction) = 0;
  // Called on a miss before `page` is inserted. The returned pages are evicted
  // first; if the cache is full they must free at least one slot.
  virtual std::vector<PageId> on_fault(std::size_t index, PageId page, Bit prediction,
                                       const Cache& cache) = 0;
  // Called after each request is served; returned pages are evicted. Used for flushes.
  virtual std::vector<PageId> after_request(std::size_t /*index*/, const Cache& /*cache*/) {
    return {};
  }
};

struct PagingEvent {
  std::size_t index = 0;
  PageId page = 0;
  bool fault = false;
  std::vector<PageId> evicted;       // before inserting the page
  std::vector<PageId> flushed_after;  // after serving the request
};

struct PagingRun {
  std::int64_t faults = 0;
  std::vector<bool> fault_at;
  std::vector<PagingEvent> events;  // filled only when requested
};

// Runs the policy from an empty cache. Throws PolicyBug on an illegal eviction.
PagingRun simulate_paging(std::span<const PageId> trace, const BitString& predictions,
                          std::int64_t cache_size, PagingPolicy& policy, bool record_events = false);

struct LfdRun {
  std::int64_t faults = 0;
  std::vector<bool> fault_at;
  struct Eviction {
    std::size_t index;  // request at which the eviction happened
    PageId page;
  };
  std::vector<Eviction> evictions;
  // label i is 1 iff the page of request i is evicted before its next request
  // (or before the end of input when it is never requested again).
  BitString labels;
};

// Longest-forward-distance offline paging from an empty cache. Ties between
// equally distant pages (including pages never requested again) evict the
// smallest page id.
LfdRun lfd(std::span<const PageId> trace, std::int64_t cache_size);
BitString lfd_labels(std::span<const PageId> trace, std::int64_t cache_size);

std::size_t distinct_pages(std::span<const PageId> trace);

}  // namespace predkit
