#include "arf/genusr.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>
#include <thread>

#include "arf/errors.hpp"
#include "arf/genus1.hpp"

namespace arf {

namespace {

void run_tasks(size_t count, int jobs,
               const std::function<void(size_t)>& fn) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& w : workers) w.join();
}

void check_rank_genus(int rank, int genus) {
  if (rank < 1) throw Error(errc::invalid_argument, "rank must be >= 1");
  if (genus < 0) throw Error(errc::invalid_argument, "genus must be >= 0");
}

}  // namespace

uint32_t TreeEnumerator::intern(const MultiplicitySequence& m) {
  auto [it, inserted] =
      pool_index_.try_emplace(m.entries(), static_cast<uint32_t>(pool_.size()));
  if (inserted) pool_.push_back(m);
  return it->second;
}

const std::vector<uint32_t>& TreeEnumerator::ids_for_genus(int genus) {
  if (genus >= static_cast<int>(ids_by_genus_.size())) {
    ids_by_genus_.resize(genus + 1);
    genus_built_.resize(genus + 1, false);
  }
  if (!genus_built_[genus]) {
    // enumerate_genus is sorted, so ids within one genus ascend with content
    for (const auto& m : enumerate_genus(genus))
      ids_by_genus_[genus].push_back(intern(m));
    genus_built_[genus] = true;
  }
  return ids_by_genus_[genus];
}

bool TreeEnumerator::comp_allows(uint32_t a, uint32_t b, int p) {
  if (a == b) return true;  // equal sequences, unbounded compatibility
  const uint64_t key =
      (static_cast<uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
  {
    std::lock_guard<std::mutex> lock(comp_mutex_);
    auto it = comp_cache_.find(key);
    if (it != comp_cache_.end()) return p <= it->second;
  }
  const int level = compatibility(pool_[a], pool_[b]).level();
  std::lock_guard<std::mutex> lock(comp_mutex_);
  comp_cache_.emplace(key, level);
  return p <= level;
}

TreeEnumerator::FlatTreeSet& TreeEnumerator::entry(int rank, int genus) {
  const auto key = std::make_pair(rank, genus);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  FlatTreeSet set;
  set.rank = rank;
  if (rank == 1) {
    set.data = ids_for_genus(genus);
  } else if (genus >= rank - 1) {
    set.data = build_records(rank, genus, rank / 2, true);
  }
  return memo_.emplace(key, std::move(set)).first->second;
}

void TreeEnumerator::ensure_by_last(FlatTreeSet& set) {
  if (set.by_last_built) return;
  std::map<uint32_t, std::vector<uint32_t>> groups;
  const size_t stride = set.stride();
  for (size_t i = 0; i < set.size(); ++i)
    groups[set.data[i * stride + set.rank - 1]].push_back(
        static_cast<uint32_t>(i));
  set.by_last.assign(groups.begin(), groups.end());
  set.by_last_built = true;
}

void TreeEnumerator::join_into(const FlatTreeSet& left,
                               const FlatTreeSet& right, int p,
                               bool emit_reversed,
                               std::vector<uint32_t>& out) {
  const int lr = left.rank, rr = right.rank;
  const int rank = lr + rr;
  const size_t lstride = left.stride(), rstride = right.stride();
  // right records are sorted, so runs of a common first id are contiguous
  size_t run_begin = 0;
  while (run_begin < right.size()) {
    const uint32_t first_id = right.record(run_begin)[0];
    size_t run_end = run_begin + 1;
    while (run_end < right.size() && right.record(run_end)[0] == first_id)
      ++run_end;
    for (const auto& [last_id, lrecs] : left.by_last) {
      if (!comp_allows(last_id, first_id, p)) continue;
      for (uint32_t li : lrecs) {
        const uint32_t* lrec = left.record(li);
        for (size_t ri = run_begin; ri < run_end; ++ri) {
          const uint32_t* rrec = right.record(ri);
          const size_t base = out.size();
          out.resize(base + 2 * rank - 1);
          uint32_t* rec = out.data() + base;
          std::copy(lrec, lrec + lr, rec);
          std::copy(rrec, rrec + rr, rec + lr);
          std::copy(lrec + lr, lrec + lstride, rec + rank);
          rec[rank + lr - 1] = static_cast<uint32_t>(p);
          std::copy(rrec + rr, rrec + rstride, rec + rank + lr);
          if (emit_reversed) {
            const size_t rbase = out.size();
            out.resize(rbase + 2 * rank - 1);
            uint32_t* rev = out.data() + rbase;
            rec = out.data() + base;  // resize may move the buffer
            std::reverse_copy(rec, rec + rank, rev);
            std::reverse_copy(rec + rank, rec + 2 * rank - 1, rev + rank);
          }
        }
      }
    }
    run_begin = run_end;
  }
}

void TreeEnumerator::sort_unique_records(std::vector<uint32_t>& buf,
                                         size_t stride) {
  const size_t count = buf.size() / stride;
  std::vector<uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    const uint32_t* pa = buf.data() + a * stride;
    const uint32_t* pb = buf.data() + b * stride;
    return std::lexicographical_compare(pa, pa + stride, pb, pb + stride);
  });
  std::vector<uint32_t> out;
  out.reserve(buf.size());
  for (uint32_t i : order) {
    const uint32_t* rec = buf.data() + i * stride;
    if (!out.empty() &&
        std::equal(rec, rec + stride, out.data() + out.size() - stride))
      continue;
    out.insert(out.end(), rec, rec + stride);
  }
  buf = std::move(out);
}

std::vector<uint32_t> TreeEnumerator::build_records(int rank, int genus, int t,
                                                    bool refine) {
  assert(rank >= 2 && genus >= rank - 1 && t >= 1 && t < rank);
  assert(!refine || 2 * t <= rank);
  struct Task {
    int p, k;
  };
  std::vector<Task> tasks;
  for (int p = 1; p <= genus - rank + 2; ++p) {
    const int khi =
        refine ? (genus - p) / 2 : genus - p - rank + t + 1;
    for (int k = t - 1; k <= khi; ++k) {
      const int m = genus - p - k;
      if (m < rank - t - 1) continue;  // right side would be empty
      tasks.push_back({p, k});
    }
  }

  // Build every subentry (and its by-last index) before the join loop, so the
  // memo is only read afterwards.
  for (const Task& task : tasks) {
    ensure_by_last(entry(t, task.k));
    entry(rank - t, genus - task.p - task.k);
  }

  std::vector<std::vector<uint32_t>> bufs(tasks.size());
  run_tasks(tasks.size(), options_.jobs, [&](size_t i) {
    const Task& task = tasks[i];
    const FlatTreeSet& left = entry(t, task.k);
    const FlatTreeSet& right = entry(rank - t, genus - task.p - task.k);
    if (left.size() == 0 || right.size() == 0) return;
    join_into(left, right, task.p, refine, bufs[i]);
  });

  std::vector<uint32_t> all;
  size_t total = 0;
  for (const auto& b : bufs) total += b.size();
  all.reserve(total);
  for (const auto& b : bufs) all.insert(all.end(), b.begin(), b.end());
  sort_unique_records(all, 2 * static_cast<size_t>(rank) - 1);
  return all;
}

UntwistedTree TreeEnumerator::tree_from_record(const uint32_t* rec,
                                               int rank) const {
  std::vector<MultiplicitySequence> seqs;
  seqs.reserve(rank);
  for (int i = 0; i < rank; ++i) seqs.push_back(pool_[rec[i]]);
  std::vector<int> gluing(rec + rank, rec + 2 * rank - 1);
  return UntwistedTree::validated(std::move(seqs), std::move(gluing));
}

size_t TreeEnumerator::count(int rank, int genus) {
  check_rank_genus(rank, genus);
  return entry(rank, genus).size();
}

std::vector<UntwistedTree> TreeEnumerator::list(int rank, int genus) {
  check_rank_genus(rank, genus);
  const FlatTreeSet& set = entry(rank, genus);
  std::vector<UntwistedTree> out;
  out.reserve(set.size());
  for (size_t i = 0; i < set.size(); ++i)
    out.push_back(tree_from_record(set.record(i), rank));
  std::sort(out.begin(), out.end());
  return out;
}

void TreeEnumerator::for_each(
    int rank, int genus, const std::function<void(const UntwistedTree&)>& fn) {
  check_rank_genus(rank, genus);
  const FlatTreeSet& set = entry(rank, genus);
  for (size_t i = 0; i < set.size(); ++i)
    fn(tree_from_record(set.record(i), rank));
}

std::vector<UntwistedTree> TreeEnumerator::list_with_split(
    int rank, int genus, int t, bool reversal_refinement) {
  check_rank_genus(rank, genus);
  if (rank < 2) throw Error(errc::invalid_argument, "split needs rank >= 2");
  if (t < 1 || t >= rank)
    throw Error(errc::invalid_argument, "split must satisfy 1 <= t < rank");
  std::vector<UntwistedTree> out;
  if (genus < rank - 1) return out;
  const bool refine = reversal_refinement && 2 * t <= rank;
  std::vector<uint32_t> records = build_records(rank, genus, t, refine);
  const size_t stride = 2 * static_cast<size_t>(rank) - 1;
  for (size_t i = 0; i < records.size() / stride; ++i)
    out.push_back(tree_from_record(records.data() + i * stride, rank));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UntwistedTree> TreeEnumerator::i_set(int rank, int genus, int t,
                                                 int p, int k) {
  check_rank_genus(rank, genus);
  if (rank < 2 || t < 1 || t >= rank)
    throw Error(errc::invalid_argument, "need rank >= 2 and 1 <= t < rank");
  std::vector<UntwistedTree> out;
  if (p < 1 || k < t - 1) return out;
  const int m = genus - p - k;
  if (m < rank - t - 1) return out;
  FlatTreeSet& left = entry(t, k);
  ensure_by_last(left);
  const FlatTreeSet& right = entry(rank - t, m);
  std::vector<uint32_t> buf;
  if (left.size() != 0 && right.size() != 0)
    join_into(left, right, p, /*emit_reversed=*/false, buf);
  sort_unique_records(buf, 2 * static_cast<size_t>(rank) - 1);
  const size_t stride = 2 * static_cast<size_t>(rank) - 1;
  for (size_t i = 0; i < buf.size() / stride; ++i)
    out.push_back(tree_from_record(buf.data() + i * stride, rank));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::vector<uint32_t>> TreeEnumerator::twisted_keys(int rank,
                                                             int genus) {
  if (rank > options_.twisted_rank_cap)
    throw Error(errc::rank_too_large_for_twisted,
                "rank " + std::to_string(rank) +
                    " exceeds the twisted enumeration cap of " +
                    std::to_string(options_.twisted_rank_cap));
  const FlatTreeSet& set = entry(rank, genus);
  const int r = rank;
  std::set<std::vector<uint32_t>> keys;
  std::vector<std::vector<int>> lvl(r + 1, std::vector<int>(r + 1, 0));
  std::vector<int> sigma(r);
  for (size_t i = 0; i < set.size(); ++i) {
    const uint32_t* rec = set.record(i);
    // full gluing-level matrix of this untwisted tree
    for (int a = 1; a <= r; ++a) {
      int run = 0;
      for (int b = a + 1; b <= r; ++b) {
        const int adj = static_cast<int>(rec[r + b - 2]);
        run = (b == a + 1) ? adj : std::min(run, adj);
        lvl[a][b] = lvl[b][a] = run;
      }
    }
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      std::vector<uint32_t> key;
      key.reserve(r + r * (r - 1) / 2);
      for (int a = 0; a < r; ++a) key.push_back(rec[sigma[a] - 1]);
      for (int a = 1; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b)
          key.push_back(static_cast<uint32_t>(lvl[sigma[a - 1]][sigma[b - 1]]));
      keys.insert(std::move(key));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return keys;
}

std::vector<TreeMatrix> TreeEnumerator::twisted_list(int rank, int genus) {
  check_rank_genus(rank, genus);
  const auto keys = twisted_keys(rank, genus);
  std::vector<TreeMatrix> out;
  out.reserve(keys.size());
  for (const auto& key : keys) {
    std::vector<MultiplicitySequence> seqs;
    seqs.reserve(rank);
    for (int i = 0; i < rank; ++i) seqs.push_back(pool_[key[i]]);
    std::vector<std::vector<int>> levels(rank, std::vector<int>(rank, 0));
    size_t pos = rank;
    for (int a = 1; a <= rank; ++a)
      for (int b = a + 1; b <= rank; ++b)
        levels[a - 1][b - 1] = static_cast<int>(key[pos++]);
    out.push_back(TreeMatrix::validated(std::move(seqs), std::move(levels),
                                        options_.twisted_rank_cap));
  }
  std::sort(out.begin(), out.end());
  return out;
}

size_t TreeEnumerator::twisted_count(int rank, int genus) {
  check_rank_genus(rank, genus);
  return twisted_keys(rank, genus).size();
}

std::vector<std::vector<unsigned long long>> TreeEnumerator::count_table(
    int rank_max, int genus_max) {
  if (rank_max < 1 || genus_max < 0)
    throw Error(errc::invalid_argument, "table bounds must be positive");
  std::vector<std::vector<unsigned long long>> table(
      rank_max, std::vector<unsigned long long>(genus_max + 1, 0));
  for (int r = 1; r <= rank_max; ++r)
    for (int n = 0; n <= genus_max; ++n) table[r - 1][n] = count(r, n);
  return table;
}

std::vector<std::vector<unsigned long long>>
TreeEnumerator::twisted_count_table(int rank_max, int genus_max) {
  if (rank_max < 1 || genus_max < 0)
    throw Error(errc::invalid_argument, "table bounds must be positive");
  std::vector<std::vector<unsigned long long>> table(
      rank_max, std::vector<unsigned long long>(genus_max + 1, 0));
  for (int r = 1; r <= rank_max; ++r)
    for (int n = 0; n <= genus_max; ++n) table[r - 1][n] = twisted_count(r, n);
  return table;
}

unsigned long long TreeEnumerator::ng(int genus) {
  if (genus < 0) throw Error(errc::invalid_argument, "genus must be >= 0");
  unsigned long long total = 0;
  for (int r = 1; r <= genus + 1; ++r) total += count(r, genus);
  return total;
}

}  // namespace arf
