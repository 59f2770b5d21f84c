#include "predkit/paging.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "predkit/error.hpp"

namespace predkit {

Cache::Cache(std::int64_t capacity) : capacity_(capacity) {
  if (capacity < 1) throw InvalidInput("cache size must be positive");
}

void Cache::insert(PageId page) {
  if (full()) throw PolicyBug("inserting page " + std::to_string(page) + " into a full cache");
  pages_.insert(page);
}

void Cache::evict(PageId page) {
  if (pages_.erase(page) == 0) {
    throw PolicyBug("evicting page " + std::to_string(page) + " which is not cached");
  }
}

PagingRun simulate_paging(std::span<const PageId> trace, const BitString& predictions,
                          std::int64_t cache_size, PagingPolicy& policy, bool record_events) {
  if (predictions.size() != trace.size()) {
    throw InvalidInput("paging: predictions and trace differ in length");
  }
  Cache cache(cache_size);
  PagingRun run;
  run.fault_at.assign(trace.size(), false);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    PagingEvent event{i, trace[i], false, {}, {}};
    if (cache.contains(trace[i])) {
      policy.on_hit(i, trace[i], predictions[i]);
    } else {
      event.fault = true;
      run.fault_at[i] = true;
      ++run.faults;
      event.evicted = policy.on_fault(i, trace[i], predictions[i], cache);
      for (PageId victim : event.evicted) cache.evict(victim);
      if (cache.full()) {
        throw PolicyBug(policy.name() + " left no room for page " + std::to_string(trace[i]));
      }
      cache.insert(trace[i]);
    }
    event.flushed_after = policy.after_request(i, cache);
    for (PageId victim : event.flushed_after) cache.evict(victim);
    if (record_events) run.events.push_back(std::move(event));
  }
  return run;
}

LfdRun lfd(std::span<const PageId> trace, std::int64_t cache_size) {
  if (cache_size < 1) throw InvalidInput("cache size must be positive");
  const std::size_t n = trace.size();
  std::vector<std::size_t> next_use(n, n);
  {
    std::unordered_map<PageId, std::size_t> seen;
    for (std::size_t i = n; i-- > 0;) {
      auto it = seen.find(trace[i]);
      if (it != seen.end()) next_use[i] = it->second;
      seen[trace[i]] = i;
    }
  }
  // Victim = largest next use, then smallest page id: order by (-next, page).
  struct Key {
    std::size_t next;
    PageId page;
    bool operator<(const Key& o) const { return next != o.next ? next > o.next : page < o.page; }
  };
  std::set<Key> order;
  std::unordered_map<PageId, std::size_t> cached_next;
  std::unordered_map<PageId, std::size_t> last_request;

  LfdRun run;
  run.fault_at.assign(n, false);
  run.labels = BitString(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    PageId page = trace[i];
    auto hit = cached_next.find(page);
    if (hit != cached_next.end()) {
      order.erase(Key{hit->second, page});
    } else {
      ++run.faults;
      run.fault_at[i] = true;
      if (static_cast<std::int64_t>(cached_next.size()) >= cache_size) {
        Key victim = *order.begin();
        order.erase(order.begin());
        cached_next.erase(victim.page);
        run.evictions.push_back({i, victim.page});
        run.labels.set(last_request.at(victim.page), 1);
      }
    }
    cached_next[page] = next_use[i];
    order.insert(Key{next_use[i], page});
    last_request[page] = i;
  }
  return run;
}

BitString lfd_labels(std::span<const PageId> trace, std::int64_t cache_size) {
  return lfd(trace, cache_size).labels;
}

std::size_t distinct_pages(std::span<const PageId> trace) {
  return std::unordered_set<PageId>(trace.begin(), trace.end()).size();
}

}  // namespace predkit
