#pragma once

#include <string>

#include "ccauto/criteria.hpp"

namespace ccauto {

enum class ReportFormat { Text, Json, Csv };

// Per-group record with stable field names:
//   group, order, abelian, center_order, class, gamma2_order, z2_order,
//   criteria_fired, classification, outc_order, cent_count, lemma26_bound
// json emits an array of these records; csv uses the same column order;
// text is an aligned table followed by a verdict summary.
std::string render_catalog_report(const CatalogReport& rep, ReportFormat format);

std::string render_group_report(const GroupReport& rep, ReportFormat format);

// One line per criterion: token, fired flag, witness description.
std::string render_criteria_lines(const GroupReport& rep);

} // namespace ccauto
