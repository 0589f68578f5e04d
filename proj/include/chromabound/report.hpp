#pragma once

#include <string>

#include "json.hpp"

#include "chromabound/bounds.hpp"
#include "chromabound/chromatic.hpp"

namespace chromabound {

using Json = nlohmann::ordered_json;

// Integers are emitted as decimal strings throughout so that arbitrary
// precision survives any consumer.
Json to_json(const ChromaticPolynomial& p);
Json to_json(const EdgeChoice& choice);
Json to_json(const BoundReport& report);

// Columns: r,exact,li_tian,improved,edge,lg,lgp1star,S,flags. `edge` is
// "x-y" and `flags` joins the names of the flags that are set with ';'.
std::string to_csv(const BoundReport& report);

// Replayable record of one bound violation.
Json witness_json(const BoundReport& report, const BoundRow& row);

}  // namespace chromabound
