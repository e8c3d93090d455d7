#pragma once

#include <json.hpp>

#include "instab/bounds.hpp"
#include "instab/kempf.hpp"
#include "instab/repcalc.hpp"
#include "instab/sandbox.hpp"
#include "instab/states.hpp"
#include "instab/truncsym.hpp"

namespace instab {

using Json = nlohmann::json;

// Input parsers; error messages name the offending field so the CLI can
// surface them on exit code 2.
State state_from_json(const Json& j);
RepSpec rep_from_json(const Json& j);
SplitBundle bundle_from_json(const Json& j);

Json state_to_json(const State& s);
Json rep_to_json(const RepSpec& spec);
Json bundle_to_json(const SplitBundle& e);
Json report_to_json(const InstabilityReport& report);
Json bound_to_json(const BoundResult& result);

// Big integers render as JSON numbers when they fit 64 bits, strings
// otherwise; rationals always render as canonical "num/den" strings.
Json big_to_json(const BigInt& v);

}  // namespace instab
