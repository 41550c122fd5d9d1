#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "iet/factor.hpp"

namespace iet::doc {

using json = nlohmann::ordered_json;

json interval_to_json(const Interval& iv);
Interval interval_from_json(const json& j);

/// {"interval": {...}, "lengths": [surd...], "perm": [1-based ranks]}.
/// Parsing also accepts "perm": {"cycles": [[...]]}.
json iet_to_json(const Iet& f);
Iet iet_from_json(const json& j);

/// {"interval": {...}, "a": surd, "x": surd, "y": surd}.
json swap_to_json(const Interval& base, const SwapSpec& s);
std::pair<Interval, SwapSpec> swap_from_json(const json& j);

json factor_to_json(const Interval& base, const Factor& f);
Factor factor_from_json(const json& j);

/// {"target": iet, "factors": [...], "verified": true}.
json certificate_to_json(const Factorization& fz);
Factorization certificate_from_json(const json& j);

json conjugacy_to_json(const Interval& base, const SwapSpec& s1, const SwapSpec& s2,
                       const ConjugacyCertificate& cert);
json simplicity_to_json(const Iet& f, const SurdReal& eps, const SimplicityCertificate& cert);

json load_json(const std::filesystem::path& path);
Iet load_iet(const std::filesystem::path& path);
void write_output(const json& j, const std::string& out_path);  // empty path = stdout

}  // namespace iet::doc
