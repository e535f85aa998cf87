#ifndef ARF_TREE_HPP_
#define ARF_TREE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "arf/multiplicity_sequence.hpp"

namespace arf {

// Multiplicity tree of an Arf good semigroup of N^r in untwisted form: an
// ordered list of branch sequences (M1,...,Mr) plus the gluing levels
// (p1,...,p_{r-1}) between consecutive branches.  Branches i < j are then
// glued up to level min(p_i,...,p_{j-1}).
class UntwistedTree {
 public:
  // Throws Error(gluing_exceeds_compatibility, seam) when some p_i exceeds
  // the compatibility of the adjacent sequences; seams are 1-based.
  static UntwistedTree validated(std::vector<MultiplicitySequence> sequences,
                                 std::vector<int> gluing);

  int rank() const { return static_cast<int>(sequences_.size()); }
  const std::vector<MultiplicitySequence>& sequences() const {
    return sequences_;
  }
  const std::vector<int>& gluing() const { return gluing_; }

  const MultiplicitySequence& sequence(int i) const;  // 1-based branch
  int gluing_level(int i) const;  // between branches i and i+1, 1-based

  // Sum of the branch genera plus the sum of the gluing levels.
  long long genus() const;

  // Conductor vector of the associated semigroup; component i is the partial
  // sum of M_i up to max(l(M_i), p_{i-1}, p_i).  Rank 1 delegates to the
  // numerical conductor (so a lone [1] branch has conductor 0).
  std::vector<long long> conductor() const;

  UntwistedTree reversed() const;

  std::string to_string() const;  // e.g. "([1],[3]; 1)"

  bool operator==(const UntwistedTree& o) const {
    return sequences_ == o.sequences_ && gluing_ == o.gluing_;
  }
  bool operator<(const UntwistedTree& o) const {
    if (sequences_ != o.sequences_) return sequences_ < o.sequences_;
    return gluing_ < o.gluing_;
  }

 private:
  UntwistedTree(std::vector<MultiplicitySequence> s, std::vector<int> g)
      : sequences_(std::move(s)), gluing_(std::move(g)) {}

  std::vector<MultiplicitySequence> sequences_;
  std::vector<int> gluing_;
};

// General (possibly twisted) multiplicity tree: sequences plus the full
// gluing-level matrix p_{i,j} = highest level at which branches i and j are
// glued.  Stored upper-triangular with zero diagonal.
class TreeMatrix {
 public:
  static TreeMatrix from_tree(const UntwistedTree& t);

  // Raw input path.  `levels` is the full r x r matrix with zero diagonal and
  // zero lower triangle.  Rejects entries above compatibility, and matrices
  // no branch permutation makes untwisted; the permutation search runs only
  // for rank <= permutation_search_cap (throws rank_too_large_for_twisted
  // beyond it when the matrix is not already untwisted).
  static TreeMatrix validated(std::vector<MultiplicitySequence> sequences,
                              std::vector<std::vector<int>> levels,
                              int permutation_search_cap = 8);

  int rank() const { return static_cast<int>(sequences_.size()); }
  const std::vector<MultiplicitySequence>& sequences() const {
    return sequences_;
  }

  int level(int i, int j) const;  // 1-based, i != j, order-insensitive
  std::vector<std::vector<int>> levels() const;  // full matrix, zero diagonal

  // Branch relabeling: entry sigma[a] is the old position shown at new
  // position a (both 1-based).
  TreeMatrix permuted(const std::vector<int>& sigma) const;

  // True iff p_{i,j} = min(p_{i,i+1},...,p_{j-1,j}) for all i < j.
  bool is_untwisted() const;
  UntwistedTree to_untwisted() const;  // requires is_untwisted()

  // Some permutation whose application makes the matrix untwisted, if one
  // exists within the search cap.
  std::optional<std::vector<int>> untwisting_permutation(int cap = 8) const;

  std::string to_string() const;

  bool operator==(const TreeMatrix& o) const {
    return sequences_ == o.sequences_ && upper_ == o.upper_;
  }
  bool operator<(const TreeMatrix& o) const {
    if (sequences_ != o.sequences_) return sequences_ < o.sequences_;
    return upper_ < o.upper_;
  }

 private:
  TreeMatrix(std::vector<MultiplicitySequence> s, std::vector<int> upper)
      : sequences_(std::move(s)), upper_(std::move(upper)) {}

  int upper_index(int i, int j) const;  // i < j, 1-based

  std::vector<MultiplicitySequence> sequences_;
  std::vector<int> upper_;  // row-major upper triangle, r(r-1)/2 entries
};

// One distinct node of a multiplicity tree.
struct GridNode {
  int level;                 // 1-based
  std::vector<int> branches; // sorted, 1-based branches sharing this node
  std::vector<int> value;    // vector in N^r
  int parent;                // index into NodeGrid::distinct, -1 for the root

  bool is_canonical() const;  // equals some e_i
};

// Explicit nodes n_i^j of a tree up to the level where everything is
// canonical.  Glued branches see the same node.
struct NodeGrid {
  int rank = 0;
  int depth = 0;  // L: at this level every node is canonical
  // nodes[i-1][j-1] = n_i^j for branch i <= rank, level j <= depth
  std::vector<std::vector<std::vector<int>>> nodes;
  std::vector<GridNode> distinct;  // level-major, root first

  // n_i^j; levels past depth are the canonical vector e_i.
  std::vector<int> node(int branch, int level) const;
};

NodeGrid node_grid(const UntwistedTree& t);
NodeGrid node_grid(const TreeMatrix& t);

// Explicit element set of a good semigroup inside the half-open box
// [0, box), together with its conductor vector.  Elements are kept sorted.
class FiniteGoodSemigroup {
 public:
  FiniteGoodSemigroup(std::vector<long long> box,
                      std::vector<long long> conductor,
                      std::vector<std::vector<long long>> elements);

  int rank() const { return static_cast<int>(box_.size()); }
  const std::vector<long long>& box() const { return box_; }
  const std::vector<long long>& conductor() const { return conductor_; }
  const std::vector<std::vector<long long>>& elements() const {
    return elements_;
  }
  bool contains(const std::vector<long long>& v) const;

 private:
  std::vector<long long> box_;
  std::vector<long long> conductor_;
  std::vector<std::vector<long long>> elements_;
};

// All elements of S(T) inside [0, box): sums over the finite subtrees of the
// multiplicity tree (per-branch cut levels consistent with the gluing),
// clipped to the box and saturated above the conductor.  Requires
// box >= conductor + 1 componentwise (else Error(box_too_small)).
FiniteGoodSemigroup expand_semigroup(const UntwistedTree& t,
                                     const std::vector<long long>& box);

}  // namespace arf

#endif  // ARF_TREE_HPP_
