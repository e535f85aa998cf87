#ifndef ARF_GENUSR_HPP_
#define ARF_GENUSR_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <vector>

#include "arf/multiplicity_sequence.hpp"
#include "arf/tree.hpp"

namespace arf {

// Enumerates Gen(r,n), the untwisted multiplicity trees of rank r and genus n,
// by joining smaller trees at a seam: a tree of genus n splits at branch t
// into a left tree of genus k, a seam gluing level p bounded by the seam
// compatibility, and a right tree of genus n-p-k.  One instance owns a memo
// table over (rank, genus) shared by every query, so count tables reuse all
// subresults.  Also produces the permutation closures Gen-bar(r,n).
//
// Trees are stored internally as fixed-stride records of interned sequence
// ids plus gluing levels, sorted for deduplication.
class TreeEnumerator {
 public:
  struct Options {
    int twisted_rank_cap = 8;  // permutation closure refuses larger ranks
    int jobs = 1;              // worker threads for the join loops
  };

  TreeEnumerator() : TreeEnumerator(Options{}) {}
  explicit TreeEnumerator(Options options) : options_(options) {}

  // |Gen(r,n)|
  size_t count(int rank, int genus);

  // Gen(r,n) sorted by (sequences, gluing).
  std::vector<UntwistedTree> list(int rank, int genus);

  // Streams Gen(r,n) in deterministic (internal record) order.
  void for_each(int rank, int genus,
                const std::function<void(const UntwistedTree&)>& fn);

  // Gen-bar(r,n): all branch permutations of the untwisted trees,
  // deduplicated structurally.  Throws Error(rank_too_large_for_twisted)
  // when rank exceeds the configured cap.
  std::vector<TreeMatrix> twisted_list(int rank, int genus);
  size_t twisted_count(int rank, int genus);

  // counts[r-1][n] = |Gen(r,n)| for 1 <= r <= rank_max, 0 <= n <= genus_max
  std::vector<std::vector<unsigned long long>> count_table(int rank_max,
                                                           int genus_max);
  std::vector<std::vector<unsigned long long>> twisted_count_table(
      int rank_max, int genus_max);

  // NG(n): total untwisted count over all ranks (rows past r = n+1 are 0).
  unsigned long long ng(int genus);

  // Differential-testing entry point: assembles Gen(r,n) splitting at branch
  // t, 1 <= t < r.  The reversal refinement (shortened genus range plus
  // reversed copies) is only applied when its hypothesis t <= r/2 holds;
  // otherwise the full genus range is scanned.  Any valid t yields the same
  // set.
  std::vector<UntwistedTree> list_with_split(int rank, int genus, int t,
                                             bool reversal_refinement = true);

  // The single join set I(t,p,k): left trees from Gen(t,k), right trees from
  // Gen(r-t, n-p-k), seam level p where compatibility permits.
  std::vector<UntwistedTree> i_set(int rank, int genus, int t, int p, int k);

 private:
  struct FlatTreeSet {
    int rank = 0;
    std::vector<uint32_t> data;  // sorted records [ids..., gluing...]
    bool by_last_built = false;
    // record indices grouped by trailing sequence id
    std::vector<std::pair<uint32_t, std::vector<uint32_t>>> by_last;

    size_t stride() const { return 2 * static_cast<size_t>(rank) - 1; }
    size_t size() const { return rank == 0 ? 0 : data.size() / stride(); }
    const uint32_t* record(size_t i) const { return data.data() + i * stride(); }
  };

  uint32_t intern(const MultiplicitySequence& m);
  const std::vector<uint32_t>& ids_for_genus(int genus);
  bool comp_allows(uint32_t a, uint32_t b, int p);

  FlatTreeSet& entry(int rank, int genus);
  void ensure_by_last(FlatTreeSet& set);
  std::vector<uint32_t> build_records(int rank, int genus, int t, bool refine);
  void join_into(const FlatTreeSet& left, const FlatTreeSet& right, int p,
                 bool emit_reversed, std::vector<uint32_t>& out);
  static void sort_unique_records(std::vector<uint32_t>& buf, size_t stride);
  UntwistedTree tree_from_record(const uint32_t* rec, int rank) const;
  std::set<std::vector<uint32_t>> twisted_keys(int rank, int genus);

  Options options_;
  std::vector<MultiplicitySequence> pool_;          // id -> sequence
  std::map<std::vector<int>, uint32_t> pool_index_; // entries -> id
  std::vector<std::vector<uint32_t>> ids_by_genus_;
  std::vector<bool> genus_built_;
  std::map<std::pair<int, int>, FlatTreeSet> memo_;
  std::unordered_map<uint64_t, int> comp_cache_;
  std::mutex comp_mutex_;
};

}  // namespace arf

#endif  // ARF_GENUSR_HPP_
