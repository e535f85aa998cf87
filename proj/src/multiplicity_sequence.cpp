#include "arf/multiplicity_sequence.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace arf {

namespace {

// Canonical storage: strip trailing ones; an all-ones vector collapses to [1].
std::vector<int> canonicalized(std::vector<int> v) {
  while (!v.empty() && v.back() == 1) v.pop_back();
  if (v.empty()) v.push_back(1);
  return v;
}

std::vector<long long> prefix_sums(const std::vector<int>& v) {
  std::vector<long long> p;
  p.reserve(v.size());
  long long acc = 0;
  for (int x : v) p.push_back(acc += x);
  return p;
}

// Returns the failing error, or nullopt when `v` is a valid canonical vector.
std::optional<Error> check(const std::vector<int>& v) {
  if (v.empty())
    return Error(errc::invalid_argument, "sequence must be nonempty");
  for (int x : v)
    if (x < 1)
      return Error(errc::invalid_argument, "entries must be positive");
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1])
      return Error(errc::not_nonincreasing,
                   "entries must be nonincreasing at position " +
                       std::to_string(i + 1),
                   static_cast<int>(i + 1));
  if (v.back() == 1 && v.size() > 1)
    return Error(errc::non_canonical_tail,
                 "sequence ends in 1 but is not [1]");
  auto entry = [&](size_t n) {  // 1-based, padded with ones
    return n <= v.size() ? v[n - 1] : 1;
  };
  for (size_t n = 1; n <= v.size(); ++n) {
    // Scan suffix sums; entries past the end are 1, so once the accumulator
    // enters the all-ones tail it hits every larger value.
    long long acc = 0;
    for (size_t l = n + 1; acc < v[n - 1]; ++l) acc += entry(l);
    if (acc != v[n - 1])
      return Error(errc::no_suffix_sum_witness,
                   "entry " + std::to_string(n) +
                       " is not a suffix sum of its successors",
                   static_cast<int>(n));
  }
  return std::nullopt;
}

}  // namespace

MultiplicitySequence MultiplicitySequence::validated(std::vector<int> entries) {
  if (auto err = check(entries)) throw *err;
  auto prefix = prefix_sums(entries);
  return MultiplicitySequence(std::move(entries), std::move(prefix));
}

std::optional<MultiplicitySequence> MultiplicitySequence::try_validated(
    std::vector<int> entries) {
  if (check(entries)) return std::nullopt;
  auto prefix = prefix_sums(entries);
  return MultiplicitySequence(std::move(entries), std::move(prefix));
}

MultiplicitySequence MultiplicitySequence::ones() {
  return MultiplicitySequence({1}, {1});
}

int MultiplicitySequence::entry(int n) const {
  assert(n >= 1);
  return n <= length() ? entries_[n - 1] : 1;
}

long long MultiplicitySequence::partial_sum(int depth) const {
  assert(depth >= 0);
  if (depth == 0) return 0;
  if (depth <= length()) return prefix_[depth - 1];
  return prefix_.back() + (depth - length());
}

long long MultiplicitySequence::conductor() const {
  return is_ones() ? 0 : prefix_.back();
}

long long MultiplicitySequence::genus() const {
  return is_ones() ? 0 : conductor() - length();
}

bool MultiplicitySequence::contains(long long x) const {
  if (x < 0) return false;
  if (x == 0 || x >= conductor()) return true;
  return std::binary_search(prefix_.begin(), prefix_.end(), x);
}

std::vector<long long> MultiplicitySequence::small_elements() const {
  std::vector<long long> out;
  const long long c = conductor();
  if (0 < c) out.push_back(0);
  for (long long p : prefix_) {
    if (p >= c) break;
    out.push_back(p);
  }
  return out;
}

std::vector<long long> MultiplicitySequence::elements_up_to(
    long long bound) const {
  std::vector<long long> out;
  if (bound < 0) return out;
  const long long c = conductor();
  out.push_back(0);
  for (long long p : prefix_) {
    if (p >= c || p > bound) break;
    out.push_back(p);
  }
  for (long long x = std::max(c, 1LL); x <= bound; ++x) out.push_back(x);
  return out;
}

int MultiplicitySequence::s_value(int k) const {
  assert(k >= 1);
  const int mk = entry(k);
  long long acc = 0;
  int l = k;
  while (acc < mk) acc += entry(++l);
  assert(acc == mk);  // guaranteed by validity
  return l;
}

std::vector<int> MultiplicitySequence::s_values(int upto) const {
  std::vector<int> out;
  out.reserve(upto);
  for (int k = 1; k <= upto; ++k) out.push_back(s_value(k));
  return out;
}

MultiplicitySequence MultiplicitySequence::prepend(int m) const {
  if (m < multiplicity())
    throw Error(errc::invalid_argument,
                "prepended entry " + std::to_string(m) +
                    " is smaller than the multiplicity");
  if (!contains(m))
    throw Error(errc::invalid_argument,
                "prepended entry " + std::to_string(m) +
                    " is not a member of " + to_string());
  std::vector<int> v;
  v.reserve(entries_.size() + 1);
  v.push_back(m);
  v.insert(v.end(), entries_.begin(), entries_.end());
  v = canonicalized(std::move(v));
  auto prefix = prefix_sums(v);
  return MultiplicitySequence(std::move(v), std::move(prefix));
}

MultiplicitySequence MultiplicitySequence::tail() const {
  std::vector<int> v(entries_.begin() + (is_ones() ? 0 : 1), entries_.end());
  v = canonicalized(std::move(v));
  auto prefix = prefix_sums(v);
  return MultiplicitySequence(std::move(v), std::move(prefix));
}

std::string MultiplicitySequence::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ']';
  return os.str();
}

SemigroupView semigroup_view(const MultiplicitySequence& m) {
  return SemigroupView{m, m.conductor(), m.genus(), m.small_elements()};
}

CompatibilityLevel CompatibilityLevel::at(int level) {
  if (level < 1) throw Error(errc::invalid_argument, "level must be positive");
  return CompatibilityLevel(level);
}

int CompatibilityLevel::level() const {
  if (is_unbounded())
    throw Error(errc::invalid_argument, "unbounded compatibility has no level");
  return level_;
}

CompatibilityLevel compatibility(const MultiplicitySequence& a,
                                 const MultiplicitySequence& b) {
  if (a == b) return CompatibilityLevel::unbounded();
  // Past max(l(a), l(b)) both s-streams are k+1, so any difference shows up
  // within the scan bound.
  const int bound = std::max(a.length(), b.length()) + 1;
  int best = 0;
  for (int k = 1; k <= bound; ++k) {
    if (best != 0 && best <= k + 1) break;  // later s-values are >= k+2
    const int sa = a.s_value(k);
    const int sb = b.s_value(k);
    if (sa == sb) continue;
    const int cand = std::min(sa, sb);
    if (best == 0 || cand < best) best = cand;
  }
  assert(best >= 1);
  return CompatibilityLevel::at(best);
}

}  // namespace arf
