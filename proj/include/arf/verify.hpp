#ifndef ARF_VERIFY_HPP_
#define ARF_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "arf/tree.hpp"

namespace arf {

struct AxiomViolation {
  std::string axiom;
  std::vector<std::vector<long long>> witnesses;
};

// Outcome of an axiom sweep over a finite window.  Checks whose witnesses
// could fall outside the box are counted as unchecked, never as failed.
// Locality is reported separately: it classifies a good semigroup rather
// than being one of its axioms (the ambient N^r is good but not local).
struct AxiomReport {
  long long checked = 0;
  long long unchecked = 0;
  std::vector<AxiomViolation> violations;
  bool local = true;
  std::vector<std::vector<long long>> nonlocal_witnesses;

  bool clean() const { return violations.empty(); }
};

// Good-semigroup axioms on the window: min-closure, the axiom-2 witness
// clause, and conductor saturation; also reports locality (only the zero
// vector may have a zero component).
AxiomReport check_good_axioms(const FiniteGoodSemigroup& s);

// Arf condition: for each a in S the set {b - a : b in S, b >= a} is closed
// under addition, for pairs whose sum stays inside the box.
AxiomReport check_arf_axiom(const FiniteGoodSemigroup& s);

// Length of a saturated chain in S from `from` to `to`.  Runs `sample_runs`
// randomized greedy walks (each step moves to a random minimal element of S
// strictly above the current one and below `to`) and requires every walk to
// find the same length; a disagreement throws std::logic_error.
long long saturated_chain_length(const FiniteGoodSemigroup& s,
                                 const std::vector<long long>& from,
                                 const std::vector<long long>& to,
                                 int sample_runs = 8,
                                 uint64_t seed = 0x5eed);

// Genus via the chain definition: sum of the conductor components minus the
// saturated chain length from 0 to the conductor in the expanded semigroup.
// Must agree with UntwistedTree::genus().
long long chain_genus(const UntwistedTree& t);

// Independent oracle for Gen(r,n): crosses all tuples of brute-forced branch
// sequences with all gluing vectors of the complementary total, keeping the
// seam-compatible ones.  Practical for rank <= 4, genus <= 8.
std::vector<UntwistedTree> brute_force_genus_trees(int rank, int genus);

}  // namespace arf

#endif  // ARF_VERIFY_HPP_
