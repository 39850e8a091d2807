#pragma once

#include <json.hpp>

#include "dring/derivation.hpp"
#include "dring/solver.hpp"

namespace dring::report {

using json = nlohmann::json;

json poly_list(const std::vector<Poly>& polys);
json series(const Series& s);
json solution(const Solution& s);
json kernel(const KernelApprox& k);
json verdict(const SimplicityVerdict& v);
json simplicity(const SimplicityReport& r);
json ell(const EllReport& r);

/// Reads the object written by solution(); also accepts a whole `solve`
/// report and uses its result.solution member.
Solution parse_solution(const json& j, const RingPtr& ring);

}  // namespace dring::report
