#ifndef ARF_IO_HPP_
#define ARF_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "arf/multiplicity_sequence.hpp"
#include "arf/tree.hpp"
#include "arf/verify.hpp"

namespace arf {

// Sequences travel as plain integer arrays ("[3,2]") in JSON and as
// comma-separated integers ("3,2") in CSV cells.
nlohmann::json to_json(const MultiplicitySequence& m);
MultiplicitySequence sequence_from_json(const nlohmann::json& j);
std::string to_csv_cell(const MultiplicitySequence& m);
MultiplicitySequence sequence_from_csv_cell(const std::string& cell);

// Trees: {"sequences": [[1],[3]], "gluing": [1]}.  Matrices additionally
// carry "levels" (full square matrix, zero diagonal).
nlohmann::json to_json(const UntwistedTree& t);
nlohmann::json to_json(const TreeMatrix& t);
UntwistedTree tree_from_json(const nlohmann::json& j);
// Accepts either form; a "levels" object must be untwisted or a permutation
// of an untwisted tree (search capped as in TreeMatrix::validated).
TreeMatrix matrix_from_json(const nlohmann::json& j,
                            int permutation_search_cap = 8);

nlohmann::json to_json(const AxiomReport& report);

// Graphviz digraph of the multiplicity tree; shared glued nodes appear once.
std::string render_dot(const TreeMatrix& t);
std::string render_dot(const UntwistedTree& t);

// Plain-text tree drawing, root first.
std::string render_ascii(const TreeMatrix& t);
std::string render_ascii(const UntwistedTree& t);

// Count-table CSV: corner header cell "r\n", one column per genus, one row
// per rank; `ng_row` appends a final NG row (column sums over all ranks).
std::string count_table_csv(
    const std::vector<std::vector<unsigned long long>>& table, int genus_max,
    const std::vector<unsigned long long>* ng_row = nullptr);

}  // namespace arf

#endif  // ARF_IO_HPP_
