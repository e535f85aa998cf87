#ifndef ARF_MULTIPLICITY_SEQUENCE_HPP_
#define ARF_MULTIPLICITY_SEQUENCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "arf/errors.hpp"

namespace arf {

// A multiplicity sequence [m1,...,mk]: nonincreasing positive integers where
// every entry equals the sum of an initial run of its successors (entries past
// the stored end count as 1), stored so that the last entry differs from 1.
// The constant sequence of ones is stored as [1] and describes the semigroup N.
//
// Each sequence is in bijection with an Arf numerical semigroup
//   { 0, m1, m1+m2, ..., m1+...+mk, -> }.
class MultiplicitySequence {
 public:
  // Validates `entries` and builds the sequence; throws Error with code
  // not_nonincreasing, no_suffix_sum_witness (index = offending entry) or
  // non_canonical_tail.
  static MultiplicitySequence validated(std::vector<int> entries);

  // Non-throwing variant, used by brute-force search.
  static std::optional<MultiplicitySequence> try_validated(
      std::vector<int> entries);

  // The sequence [1] (the semigroup N).
  static MultiplicitySequence ones();

  const std::vector<int>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }  // l(M)
  bool is_ones() const { return entries_.size() == 1 && entries_[0] == 1; }
  int multiplicity() const { return entries_[0]; }

  // 1-based entry access; positions past length() read as 1.
  int entry(int n) const;

  // m1 + ... + m_depth with 1-padding past the end; depth >= 0.
  long long partial_sum(int depth) const;

  long long conductor() const;  // 0 for [1], sum of entries otherwise
  long long genus() const;      // conductor - length, 0 for [1]

  // True iff x is in the associated numerical semigroup.
  bool contains(long long x) const;

  // Elements strictly below the conductor, i.e. {0, m1, m1+m2, ...}.
  std::vector<long long> small_elements() const;

  // All semigroup elements in [0, bound], ascending.
  std::vector<long long> elements_up_to(long long bound) const;

  // s_value(k) is the unique s with m_k = m_{k+1} + ... + m_s.
  int s_value(int k) const;
  std::vector<int> s_values(int upto) const;

  // [m | M], re-canonicalized.  m must be >= the first entry and a member of
  // the semigroup; the result is then always a valid sequence.
  MultiplicitySequence prepend(int m) const;

  // Drops m1 and re-canonicalizes the tail (e.g. [2] -> [1]).
  MultiplicitySequence tail() const;

  std::string to_string() const;  // e.g. "[3,2]"

  bool operator==(const MultiplicitySequence& o) const {
    return entries_ == o.entries_;
  }
  bool operator<(const MultiplicitySequence& o) const {
    return entries_ < o.entries_;
  }

 private:
  MultiplicitySequence(std::vector<int> entries, std::vector<long long> prefix)
      : entries_(std::move(entries)), prefix_(std::move(prefix)) {}

  std::vector<int> entries_;
  std::vector<long long> prefix_;  // prefix_[j] = m1 + ... + m_{j+1}
};

// Derived view of the Arf numerical semigroup AS(M).
struct SemigroupView {
  MultiplicitySequence source;
  long long conductor;
  long long genus;
  std::vector<long long> small_elements;
};

SemigroupView semigroup_view(const MultiplicitySequence& m);

// Maximum admissible gluing level between branches carrying two sequences;
// unbounded exactly when the sequences are equal.
class CompatibilityLevel {
 public:
  static CompatibilityLevel unbounded() { return CompatibilityLevel(0); }
  static CompatibilityLevel at(int level);

  bool is_unbounded() const { return level_ == 0; }
  int level() const;  // requires !is_unbounded()
  bool allows(int p) const { return is_unbounded() || p <= level_; }

  bool operator==(const CompatibilityLevel&) const = default;

 private:
  explicit CompatibilityLevel(int level) : level_(level) {}
  int level_;  // 0 encodes unbounded
};

CompatibilityLevel compatibility(const MultiplicitySequence& a,
                                 const MultiplicitySequence& b);

}  // namespace arf

#endif  // ARF_MULTIPLICITY_SEQUENCE_HPP_
