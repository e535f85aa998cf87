#ifndef ARF_GENUS1_HPP_
#define ARF_GENUS1_HPP_

#include <vector>

#include "arf/multiplicity_sequence.hpp"

namespace arf {

// All multiplicity sequences of Arf numerical semigroups with genus n,
// ascending lexicographic order.  Single left-to-right pass over working sets
// U(i) = { M of genus i : M[1] + i - 1 <= n }.
std::vector<MultiplicitySequence> enumerate_genus(int n);

// Independent oracle: exhaustive search over nonincreasing positive vectors
// with sum(m_i - 1) = n, keeping those with the suffix-sum property.  Same
// output contract as enumerate_genus; practical up to n ~ 15.
std::vector<MultiplicitySequence> brute_force_genus(int n);

}  // namespace arf

#endif  // ARF_GENUS1_HPP_
