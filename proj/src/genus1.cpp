#include "arf/genus1.hpp"

#include <algorithm>
#include <cassert>

#include "arf/errors.hpp"

namespace arf {

std::vector<MultiplicitySequence> enumerate_genus(int n) {
  if (n < 0) throw Error(errc::invalid_argument, "genus must be nonnegative");
  if (n == 0) return {MultiplicitySequence::ones()};

  std::vector<MultiplicitySequence> result;
  result.push_back(MultiplicitySequence::validated({n + 1}));

  // u[i] holds the sequences M of genus i with M[1] + i - 1 <= n.  The pass
  // below only appends to u[j] with j > i while consuming u[i], so a single
  // sweep sees every element exactly once.
  std::vector<std::vector<MultiplicitySequence>> u(n);
  for (int i = 1; i <= n - 1; ++i)
    if (i <= n / 2) u[i].push_back(MultiplicitySequence::validated({i + 1}));

  for (int i = 1; i <= n - 1; ++i) {
    for (size_t idx = 0; idx < u[i].size(); ++idx) {
      const MultiplicitySequence m = u[i][idx];
      if (m.contains(n - i + 1)) result.push_back(m.prepend(n - i + 1));
      const long long kmax = (n - i + 2) / 2;
      for (long long k : m.elements_up_to(kmax)) {
        if (k < 2) continue;
        const int target = i + static_cast<int>(k) - 1;
        assert(target > i && target <= n - 1);
        u[target].push_back(m.prepend(static_cast<int>(k)));
      }
    }
  }

  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

namespace {

// Extends a nonincreasing prefix (as seen from the tail) of entries >= 2 whose
// (entry - 1) values sum to the remaining genus.
void search(std::vector<int>& head, int remaining, int max_entry,
            std::vector<MultiplicitySequence>& out) {
  if (remaining == 0) {
    if (auto m = MultiplicitySequence::try_validated(head)) out.push_back(*m);
    return;
  }
  for (int e = std::min(max_entry, remaining + 1); e >= 2; --e) {
    head.push_back(e);
    search(head, remaining - (e - 1), e, out);
    head.pop_back();
  }
}

}  // namespace

std::vector<MultiplicitySequence> brute_force_genus(int n) {
  if (n < 0) throw Error(errc::invalid_argument, "genus must be nonnegative");
  if (n == 0) return {MultiplicitySequence::ones()};
  std::vector<MultiplicitySequence> out;
  std::vector<int> head;
  search(head, n, n + 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arf
