#include "arf/io.hpp"

#include <sstream>

#include "arf/errors.hpp"

namespace arf {

namespace {

std::vector<int> int_vector(const nlohmann::json& j, const char* what) {
  if (!j.is_array())
    throw Error(errc::invalid_argument, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw Error(errc::invalid_argument,
                  std::string(what) + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<MultiplicitySequence> sequences_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sequences"))
    throw Error(errc::invalid_argument, "tree object needs \"sequences\"");
  std::vector<MultiplicitySequence> seqs;
  for (const auto& s : j.at("sequences"))
    seqs.push_back(MultiplicitySequence::validated(int_vector(s, "sequence")));
  return seqs;
}

std::string vector_label(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

nlohmann::json to_json(const MultiplicitySequence& m) {
  return nlohmann::json(m.entries());
}

MultiplicitySequence sequence_from_json(const nlohmann::json& j) {
  return MultiplicitySequence::validated(int_vector(j, "sequence"));
}

std::string to_csv_cell(const MultiplicitySequence& m) {
  std::ostringstream os;
  for (size_t i = 0; i < m.entries().size(); ++i) {
    if (i) os << ',';
    os << m.entries()[i];
  }
  return os.str();
}

MultiplicitySequence sequence_from_csv_cell(const std::string& cell) {
  std::vector<int> entries;
  std::istringstream is(cell);
  std::string part;
  while (std::getline(is, part, ','))
    entries.push_back(std::stoi(part));
  return MultiplicitySequence::validated(std::move(entries));
}

nlohmann::json to_json(const UntwistedTree& t) {
  nlohmann::json j;
  j["sequences"] = nlohmann::json::array();
  for (const auto& m : t.sequences()) j["sequences"].push_back(to_json(m));
  j["gluing"] = t.gluing();
  return j;
}

nlohmann::json to_json(const TreeMatrix& t) {
  nlohmann::json j;
  j["sequences"] = nlohmann::json::array();
  for (const auto& m : t.sequences()) j["sequences"].push_back(to_json(m));
  j["levels"] = t.levels();
  return j;
}

UntwistedTree tree_from_json(const nlohmann::json& j) {
  auto seqs = sequences_from_json(j);
  if (!j.contains("gluing"))
    throw Error(errc::invalid_argument, "tree object needs \"gluing\"");
  return UntwistedTree::validated(std::move(seqs),
                                  int_vector(j.at("gluing"), "gluing"));
}

TreeMatrix matrix_from_json(const nlohmann::json& j,
                            int permutation_search_cap) {
  if (j.is_object() && j.contains("levels")) {
    auto seqs = sequences_from_json(j);
    std::vector<std::vector<int>> levels;
    for (const auto& row : j.at("levels"))
      levels.push_back(int_vector(row, "levels row"));
    return TreeMatrix::validated(std::move(seqs), std::move(levels),
                                 permutation_search_cap);
  }
  return TreeMatrix::from_tree(tree_from_json(j));
}

nlohmann::json to_json(const AxiomReport& report) {
  nlohmann::json j;
  j["checked"] = report.checked;
  j["unchecked"] = report.unchecked;
  j["local"] = report.local;
  j["nonlocal_witnesses"] = report.nonlocal_witnesses;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back(
        {{"axiom", v.axiom}, {"witness_vectors", v.witnesses}});
  return j;
}

namespace {

// Children per distinct node, pruned below the first canonical node of each
// branch: a canonical node repeats forever, so drawings stop there.
std::vector<std::vector<int>> drawn_children(const NodeGrid& grid) {
  std::vector<std::vector<int>> children(grid.distinct.size());
  for (size_t i = 0; i < grid.distinct.size(); ++i) {
    const int parent = grid.distinct[i].parent;
    if (parent >= 0 && !grid.distinct[parent].is_canonical())
      children[parent].push_back(static_cast<int>(i));
  }
  return children;
}

int grid_root(const NodeGrid& grid) {
  for (size_t i = 0; i < grid.distinct.size(); ++i)
    if (grid.distinct[i].parent < 0) return static_cast<int>(i);
  return 0;
}

}  // namespace

std::string render_dot(const TreeMatrix& t) {
  const NodeGrid grid = node_grid(t);
  const auto children = drawn_children(grid);
  std::vector<int> order;
  order.push_back(grid_root(grid));
  for (size_t q = 0; q < order.size(); ++q)
    for (int c : children[order[q]]) order.push_back(c);
  std::ostringstream os;
  os << "digraph multiplicity_tree {\n";
  os << "  node [shape=ellipse];\n";
  for (int i : order)
    os << "  n" << i << " [label=\"" << vector_label(grid.distinct[i].value)
       << "\"];\n";
  for (int i : order)
    if (grid.distinct[i].parent >= 0)
      os << "  n" << grid.distinct[i].parent << " -> n" << i << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_dot(const UntwistedTree& t) {
  return render_dot(TreeMatrix::from_tree(t));
}

namespace {

void ascii_subtree(const NodeGrid& grid,
                   const std::vector<std::vector<int>>& children, int node,
                   const std::string& prefix, bool last, bool root,
                   std::ostringstream& os) {
  if (root) {
    os << vector_label(grid.distinct[node].value) << "\n";
  } else {
    os << prefix << (last ? "`-- " : "|-- ")
       << vector_label(grid.distinct[node].value) << "\n";
  }
  const std::string child_prefix =
      root ? "" : prefix + (last ? "    " : "|   ");
  for (size_t c = 0; c < children[node].size(); ++c)
    ascii_subtree(grid, children, children[node][c], child_prefix,
                  c + 1 == children[node].size(), false, os);
}

}  // namespace

std::string render_ascii(const TreeMatrix& t) {
  const NodeGrid grid = node_grid(t);
  const auto children = drawn_children(grid);
  std::ostringstream os;
  ascii_subtree(grid, children, grid_root(grid), "", true, true, os);
  return os.str();
}

std::string render_ascii(const UntwistedTree& t) {
  return render_ascii(TreeMatrix::from_tree(t));
}

std::string count_table_csv(
    const std::vector<std::vector<unsigned long long>>& table, int genus_max,
    const std::vector<unsigned long long>* ng_row) {
  std::ostringstream os;
  os << "r\\n";
  for (int n = 0; n <= genus_max; ++n) os << ',' << n;
  os << '\n';
  for (size_t r = 0; r < table.size(); ++r) {
    os << (r + 1);
    for (int n = 0; n <= genus_max; ++n) os << ',' << table[r][n];
    os << '\n';
  }
  if (ng_row) {
    os << "NG";
    for (int n = 0; n <= genus_max; ++n) os << ',' << (*ng_row)[n];
    os << '\n';
  }
  return os.str();
}

}  // namespace arf
