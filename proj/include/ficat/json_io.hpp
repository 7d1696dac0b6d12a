#pragma once

#include "json.hpp"
#include "ficat/matrix.hpp"

namespace ficat {

// An integer for Z/n, a list of component residues for product rings.
nlohmann::json elem_to_json(const FiniteRing& r, Elem x);
// Accepts an integer (reduced through Z -> R) or a list of residues.
Elem elem_from_json(const FiniteRing& r, const nlohmann::json& j);

// {"ring": spec, "rows": n, "cols": m, "entries": [[...], ...]}
nlohmann::json mat_to_json(const Mat& m);
nlohmann::json mat_entries_json(const Mat& m);
// Accepts the object form or a bare list of rows. A row list with no rows
// needs explicit dimensions, so `rows`/`cols` hints fill the gap.
Mat mat_from_json(const RingPtr& r, const nlohmann::json& j, int rows_hint = -1, int cols_hint = -1);

}  // namespace ficat
