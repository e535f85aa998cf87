#include "arf/tree.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

#include "arf/errors.hpp"

namespace arf {

// ---------------------------------------------------------------- trees ----

UntwistedTree UntwistedTree::validated(
    std::vector<MultiplicitySequence> sequences, std::vector<int> gluing) {
  if (sequences.empty())
    throw Error(errc::invalid_argument, "tree needs at least one branch");
  if (gluing.size() + 1 != sequences.size())
    throw Error(errc::invalid_argument,
                "gluing vector must have rank-1 entries");
  for (size_t i = 0; i < gluing.size(); ++i) {
    if (gluing[i] < 1)
      throw Error(errc::invalid_argument, "gluing levels must be positive");
    if (!compatibility(sequences[i], sequences[i + 1]).allows(gluing[i]))
      throw Error(errc::gluing_exceeds_compatibility,
                  "gluing level " + std::to_string(gluing[i]) + " at seam " +
                      std::to_string(i + 1) + " exceeds the compatibility of " +
                      sequences[i].to_string() + " and " +
                      sequences[i + 1].to_string(),
                  static_cast<int>(i + 1));
  }
  return UntwistedTree(std::move(sequences), std::move(gluing));
}

const MultiplicitySequence& UntwistedTree::sequence(int i) const {
  assert(i >= 1 && i <= rank());
  return sequences_[i - 1];
}

int UntwistedTree::gluing_level(int i) const {
  assert(i >= 1 && i < rank());
  return gluing_[i - 1];
}

long long UntwistedTree::genus() const {
  long long g = 0;
  for (const auto& m : sequences_) g += m.genus();
  for (int p : gluing_) g += p;
  return g;
}

std::vector<long long> UntwistedTree::conductor() const {
  const int r = rank();
  if (r == 1) return {sequences_[0].conductor()};
  std::vector<long long> c(r);
  for (int i = 1; i <= r; ++i) {
    int d = sequences_[i - 1].length();
    if (i > 1) d = std::max(d, gluing_[i - 2]);
    if (i < r) d = std::max(d, gluing_[i - 1]);
    c[i - 1] = sequences_[i - 1].partial_sum(d);
  }
  return c;
}

UntwistedTree UntwistedTree::reversed() const {
  std::vector<MultiplicitySequence> s(sequences_.rbegin(), sequences_.rend());
  std::vector<int> g(gluing_.rbegin(), gluing_.rend());
  return UntwistedTree(std::move(s), std::move(g));
}

std::string UntwistedTree::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < sequences_.size(); ++i) {
    if (i) os << ',';
    os << sequences_[i].to_string();
  }
  os << "; ";
  for (size_t i = 0; i < gluing_.size(); ++i) {
    if (i) os << ',';
    os << gluing_[i];
  }
  os << ')';
  return os.str();
}

// ------------------------------------------------------------- matrices ----

int TreeMatrix::upper_index(int i, int j) const {
  assert(i >= 1 && i < j && j <= rank());
  const int r = rank();
  // row-major position of (i,j) in the strict upper triangle
  return (i - 1) * r - (i * (i + 1)) / 2 + (j - 1);
}

TreeMatrix TreeMatrix::from_tree(const UntwistedTree& t) {
  const int r = t.rank();
  std::vector<int> upper;
  upper.reserve(r * (r - 1) / 2);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      int p = t.gluing_level(i);
      for (int k = i + 1; k < j; ++k) p = std::min(p, t.gluing_level(k));
      upper.push_back(p);
    }
  return TreeMatrix(t.sequences(), std::move(upper));
}

TreeMatrix TreeMatrix::validated(std::vector<MultiplicitySequence> sequences,
                                 std::vector<std::vector<int>> levels,
                                 int permutation_search_cap) {
  const int r = static_cast<int>(sequences.size());
  if (r < 1) throw Error(errc::invalid_argument, "matrix needs branches");
  if (static_cast<int>(levels.size()) != r)
    throw Error(errc::invalid_argument, "levels must be an r x r matrix");
  for (const auto& row : levels)
    if (static_cast<int>(row.size()) != r)
      throw Error(errc::invalid_argument, "levels must be an r x r matrix");
  std::vector<int> upper;
  upper.reserve(r * (r - 1) / 2);
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      const int p = levels[i - 1][j - 1];
      if (j <= i) {
        if (p != 0)
          throw Error(errc::invalid_argument,
                      "diagonal and lower triangle must be zero");
        continue;
      }
      if (p < 1)
        throw Error(errc::invalid_argument, "gluing levels must be positive");
      if (!compatibility(sequences[i - 1], sequences[j - 1]).allows(p))
        throw Error(errc::gluing_exceeds_compatibility,
                    "level " + std::to_string(p) + " between branches " +
                        std::to_string(i) + " and " + std::to_string(j) +
                        " exceeds compatibility",
                    i);
      upper.push_back(p);
    }
  }
  TreeMatrix m(std::move(sequences), std::move(upper));
  if (!m.is_untwisted()) {
    if (r > permutation_search_cap)
      throw Error(errc::rank_too_large_for_twisted,
                  "rank " + std::to_string(r) +
                      " exceeds the permutation search cap of " +
                      std::to_string(permutation_search_cap));
    if (!m.untwisting_permutation(permutation_search_cap))
      throw Error(errc::invalid_argument,
                  "no branch permutation makes the matrix untwisted");
  }
  return m;
}

int TreeMatrix::level(int i, int j) const {
  assert(i != j);
  if (i > j) std::swap(i, j);
  return upper_[upper_index(i, j)];
}

std::vector<std::vector<int>> TreeMatrix::levels() const {
  const int r = rank();
  std::vector<std::vector<int>> out(r, std::vector<int>(r, 0));
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) out[i - 1][j - 1] = level(i, j);
  return out;
}

TreeMatrix TreeMatrix::permuted(const std::vector<int>& sigma) const {
  const int r = rank();
  if (static_cast<int>(sigma.size()) != r)
    throw Error(errc::invalid_argument, "permutation size mismatch");
  std::vector<bool> seen(r + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > r || seen[v])
      throw Error(errc::invalid_argument, "not a permutation of 1..r");
    seen[v] = true;
  }
  std::vector<MultiplicitySequence> seqs;
  seqs.reserve(r);
  for (int a = 1; a <= r; ++a) seqs.push_back(sequences_[sigma[a - 1] - 1]);
  std::vector<int> upper;
  upper.reserve(upper_.size());
  for (int a = 1; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b)
      upper.push_back(level(sigma[a - 1], sigma[b - 1]));
  return TreeMatrix(std::move(seqs), std::move(upper));
}

bool TreeMatrix::is_untwisted() const {
  const int r = rank();
  for (int i = 1; i <= r; ++i) {
    int run = 0;
    for (int j = i + 1; j <= r; ++j) {
      const int adj = level(j - 1, j);
      run = (j == i + 1) ? adj : std::min(run, adj);
      if (level(i, j) != run) return false;
    }
  }
  return true;
}

UntwistedTree TreeMatrix::to_untwisted() const {
  if (!is_untwisted())
    throw Error(errc::invalid_argument, "matrix is twisted");
  std::vector<int> gluing;
  for (int i = 1; i < rank(); ++i) gluing.push_back(level(i, i + 1));
  return UntwistedTree::validated(sequences_, std::move(gluing));
}

std::optional<std::vector<int>> TreeMatrix::untwisting_permutation(
    int cap) const {
  const int r = rank();
  std::vector<int> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 1);
  if (is_untwisted()) return sigma;
  if (r > cap) return std::nullopt;
  while (std::next_permutation(sigma.begin(), sigma.end()))
    if (permuted(sigma).is_untwisted()) return sigma;
  return std::nullopt;
}

std::string TreeMatrix::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < sequences_.size(); ++i) {
    if (i) os << ',';
    os << sequences_[i].to_string();
  }
  os << "; levels ";
  for (size_t i = 0; i < upper_.size(); ++i) {
    if (i) os << ',';
    os << upper_[i];
  }
  os << ')';
  return os.str();
}

// ------------------------------------------------------------ node grid ----

bool GridNode::is_canonical() const {
  int nonzero = 0;
  bool unit = true;
  for (int v : value) {
    if (v != 0) {
      ++nonzero;
      if (v != 1) unit = false;
    }
  }
  return nonzero == 1 && unit;
}

std::vector<int> NodeGrid::node(int branch, int level) const {
  assert(branch >= 1 && branch <= rank && level >= 1);
  if (level <= depth) return nodes[branch - 1][level - 1];
  std::vector<int> e(rank, 0);
  e[branch - 1] = 1;
  return e;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

NodeGrid node_grid(const TreeMatrix& t) {
  const int r = t.rank();
  NodeGrid grid;
  grid.rank = r;
  int depth = 0;
  for (int i = 1; i <= r; ++i) {
    int d = t.sequences()[i - 1].length();
    for (int h = 1; h <= r; ++h)
      if (h != i) d = std::max(d, t.level(i, h));
    depth = std::max(depth, d + 1);
  }
  grid.depth = depth;
  grid.nodes.assign(r, std::vector<std::vector<int>>(depth));

  std::vector<int> prev_group_index(r, -1);  // distinct index per branch
  for (int j = 1; j <= depth; ++j) {
    UnionFind uf(r);
    for (int i = 1; i <= r; ++i)
      for (int h = i + 1; h <= r; ++h)
        if (t.level(i, h) >= j) uf.unite(i - 1, h - 1);
    // groups keyed by representative, in order of smallest branch
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(r, -1);
    for (int i = 0; i < r; ++i) {
      const int rep = uf.find(i);
      bool placed = false;
      for (size_t g = 0; g < groups.size(); ++g)
        if (uf.find(groups[g][0] - 1) == rep) {
          groups[g].push_back(i + 1);
          group_of[i] = static_cast<int>(g);
          placed = true;
          break;
        }
      if (!placed) {
        group_of[i] = static_cast<int>(groups.size());
        groups.push_back({i + 1});
      }
    }
    std::vector<int> this_group_index(r, -1);
    for (const auto& g : groups) {
      std::vector<int> value(r, 0);
      for (int h : g) value[h - 1] = t.sequences()[h - 1].entry(j);
      GridNode node;
      node.level = j;
      node.branches = g;
      node.value = value;
      node.parent = (j == 1) ? -1 : prev_group_index[g[0] - 1];
      const int idx = static_cast<int>(grid.distinct.size());
      grid.distinct.push_back(std::move(node));
      for (int h : g) {
        this_group_index[h - 1] = idx;
        grid.nodes[h - 1][j - 1] = value;
      }
    }
    prev_group_index = this_group_index;
  }
  return grid;
}

NodeGrid node_grid(const UntwistedTree& t) {
  return node_grid(TreeMatrix::from_tree(t));
}

// ------------------------------------------------- finite good semigroup ----

FiniteGoodSemigroup::FiniteGoodSemigroup(
    std::vector<long long> box, std::vector<long long> conductor,
    std::vector<std::vector<long long>> elements)
    : box_(std::move(box)),
      conductor_(std::move(conductor)),
      elements_(std::move(elements)) {
  const int r = rank();
  if (r < 1) throw Error(errc::invalid_argument, "box must be nonempty");
  if (static_cast<int>(conductor_.size()) != r)
    throw Error(errc::invalid_argument, "conductor arity mismatch");
  for (int i = 0; i < r; ++i) {
    if (box_[i] < 1)
      throw Error(errc::invalid_argument, "box bounds must be positive");
    if (conductor_[i] < 0 || conductor_[i] >= box_[i])
      throw Error(errc::invalid_argument, "conductor must lie inside the box");
  }
  for (const auto& v : elements_) {
    if (static_cast<int>(v.size()) != r)
      throw Error(errc::invalid_argument, "element arity mismatch");
    for (int i = 0; i < r; ++i)
      if (v[i] < 0 || v[i] >= box_[i])
        throw Error(errc::invalid_argument, "element outside the box");
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool FiniteGoodSemigroup::contains(const std::vector<long long>& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

FiniteGoodSemigroup expand_semigroup(const UntwistedTree& t,
                                     const std::vector<long long>& box) {
  const int r = t.rank();
  if (static_cast<int>(box.size()) != r)
    throw Error(errc::invalid_argument, "box arity mismatch");
  const std::vector<long long> delta = t.conductor();
  for (int i = 0; i < r; ++i)
    if (box[i] < delta[i] + 1)
      throw Error(errc::box_too_small,
                  "box must exceed the conductor componentwise", i + 1);

  // cut depth beyond which component i leaves the box
  std::vector<int> max_cut(r);
  for (int i = 0; i < r; ++i) {
    int d = 1;
    while (t.sequences()[i].partial_sum(d) < box[i]) ++d;
    max_cut[i] = d;
  }

  std::set<std::vector<long long>> elems;
  elems.insert(std::vector<long long>(r, 0));

  // Per-branch cut levels; branches glued at level p share nodes, so two
  // adjacent cuts must be equal or both reach past the gluing level.
  std::vector<int> cut(r, 1);
  while (true) {
    bool consistent = true;
    for (int i = 0; i + 1 < r && consistent; ++i)
      if (cut[i] != cut[i + 1] &&
          std::min(cut[i], cut[i + 1]) < t.gluing_level(i + 1))
        consistent = false;
    if (consistent) {
      std::vector<long long> v(r);
      bool in_box = true;
      for (int i = 0; i < r; ++i) {
        v[i] = t.sequences()[i].partial_sum(cut[i]);
        if (v[i] >= box[i]) in_box = false;
      }
      if (in_box) elems.insert(std::move(v));
    }
    int pos = 0;
    while (pos < r && cut[pos] == max_cut[pos]) cut[pos++] = 1;
    if (pos == r) break;
    ++cut[pos];
  }

  // saturation: everything from the conductor to the box boundary
  std::vector<long long> v(delta);
  while (true) {
    elems.insert(v);
    int pos = 0;
    while (pos < r && v[pos] == box[pos] - 1) {
      v[pos] = delta[pos];
      ++pos;
    }
    if (pos == r) break;
    ++v[pos];
  }

  return FiniteGoodSemigroup(
      box, delta,
      std::vector<std::vector<long long>>(elems.begin(), elems.end()));
}

}  // namespace arf
