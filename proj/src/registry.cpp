#include <algorithm>
#include <cctype>

#include "ficat/category.hpp"
#include "ficat/error.hpp"
#include "ficat/si.hpp"
#include "ficat/vic.hpp"

namespace ficat {

CategoryPtr make_category(const std::string& kind, const std::string& ring_spec, const std::vector<long long>& units,
                          std::uint64_t budget) {
  std::string k = kind;
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::toupper(c); });
  if (k == "FI") {
    if (!ring_spec.empty()) throw PreconditionError("bad_category", "FI takes no ring");
    return fi_category(budget);
  }
  if (k != "VIC" && k != "OVIC" && k != "SI" && k != "OSI")
    throw PreconditionError("bad_category", "unknown category '" + kind + "'");
  if (ring_spec.empty()) throw PreconditionError("bad_category", k + " needs a ring");
  auto r = FiniteRing::make(ring_spec);
  if (!units.empty() && k != "VIC") throw PreconditionError("bad_units", k + " takes no unit subgroup");
  if (k == "VIC") return make_vic(r, UnitSubgroup::make(r, units), budget);
  if (k == "OVIC") return make_ovic(r, budget);
  if (k == "SI") return make_si(r, budget);
  return make_osi(r, budget);
}

}  // namespace ficat
