#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdskit/existence.hpp"
#include "pdskit/pds.hpp"
#include "pdskit/restrict.hpp"

namespace pdskit {

// All documents are compact single-line JSON with alphabetically ordered
// keys, so identical inputs always serialize to identical bytes.

// classify + regularity + triviality + character cross-check in one document.
std::string verify_json(const SubsetInGroup& d);

// {"group", "ranks", "params"} for a subset that classifies as a PDS.
std::string subset_params_json(const SubsetInGroup& d);

// Full construct document for the Paley subset of GF(q), including the field
// modulus for reproducibility.
std::string paley_construct_json(std::uint64_t q);

std::string restrict_report_json(const RestrictionReport& report);
std::string nonexistence_json(std::uint64_t v);
std::string existence_verdict_json(const ExistenceVerdict& verdict);
std::string classify_order_json(std::uint64_t v);
std::string search_summary_json(const AbelianGroup& g, std::uint64_t found);

}  // namespace pdskit
