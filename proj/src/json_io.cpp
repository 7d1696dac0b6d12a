#include "ficat/json_io.hpp"

#include "ficat/error.hpp"

namespace ficat {

nlohmann::json elem_to_json(const FiniteRing& r, Elem x) {
  auto comp = r.components(x);
  if (comp.size() == 1) return comp[0];
  return comp;
}

Elem elem_from_json(const FiniteRing& r, const nlohmann::json& j) {
  if (j.is_number_integer()) return r.from_int(j.get<long long>());
  if (j.is_array()) {
    std::vector<long long> res;
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw PreconditionError("bad_element", "residues must be integers");
      res.push_back(v.get<long long>());
    }
    return r.from_components(res);
  }
  throw PreconditionError("bad_element", "ring element must be an integer or a list of residues");
}

nlohmann::json mat_entries_json(const Mat& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(elem_to_json(*m.ring, m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json mat_to_json(const Mat& m) {
  return {{"ring", m.ring->spec()}, {"rows", m.rows}, {"cols", m.cols}, {"entries", mat_entries_json(m)}};
}

Mat mat_from_json(const RingPtr& r, const nlohmann::json& j, int rows_hint, int cols_hint) {
  const nlohmann::json* entries = &j;
  if (j.is_object()) {
    if (j.contains("ring") && FiniteRing::make(j.at("ring").get<std::string>())->spec() != r->spec())
      throw PreconditionError("ring_mismatch", "matrix ring " + j.at("ring").get<std::string>() + " != " + r->spec());
    if (j.contains("rows")) rows_hint = j.at("rows").get<int>();
    if (j.contains("cols")) cols_hint = j.at("cols").get<int>();
    if (!j.contains("entries")) throw PreconditionError("bad_matrix", "matrix object needs entries");
    entries = &j.at("entries");
  }
  if (!entries->is_array()) throw PreconditionError("bad_matrix", "matrix entries must be a list of rows");
  int nr = static_cast<int>(entries->size());
  int nc = nr ? static_cast<int>((*entries)[0].size()) : std::max(cols_hint, 0);
  if (rows_hint >= 0 && rows_hint != nr && nr != 0)
    throw PreconditionError("bad_matrix", "row count does not match");
  if (nr == 0 && rows_hint > 0) nr = rows_hint;
  if (cols_hint >= 0 && nc != cols_hint && !(entries->empty()))
    throw PreconditionError("bad_matrix", "column count does not match");
  Mat m(r, nr, nc);
  for (int i = 0; i < static_cast<int>(entries->size()); ++i) {
    const auto& row = (*entries)[i];
    if (!row.is_array() || static_cast<int>(row.size()) != nc) throw PreconditionError("bad_matrix", "ragged rows");
    for (int c = 0; c < nc; ++c) m.at(i, c) = elem_from_json(*r, row[c]);
  }
  return m;
}

}  // namespace ficat
