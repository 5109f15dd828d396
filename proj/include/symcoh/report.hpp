#pragma once

#include <string>

#include "symcoh/exact_rank2.hpp"
#include "symcoh/sympair.hpp"
#include "symcoh/virtmod.hpp"

namespace symcoh {

/// Interprets a CLI lambda argument: restricted-rank length means
/// special-lattice units (the per-family coordinates), ambient-rank
/// length means fundamental-weight coordinates.  Throws on anything else.
Weight lambda_from_cli(const SymmetricPair& pair, const std::vector<Int>& values);

/// {"schema":1, "pair":..., "lambda":[...], "chi":[{"weight","mult","dim"}...]}
std::string euler_report_json(const SymmetricPair& pair, const Weight& lambda);

/// Exact tables exist for the conics and CnH4 pairs only; throws
/// std::invalid_argument for --exact elsewhere.
std::string cohomology_report_json(const SymmetricPair& pair, const Weight& lambda, bool exact);

/// Lattice window in special-basis coordinates, one marked glyph set per
/// point (conics: the closed-form nonvanishing predicates; otherwise the
/// degree support of the upper bound).  format is "svg" or "ascii".
std::string regions_render(const SymmetricPair& pair, long long x0, long long x1, long long y0,
                           long long y1, const std::string& format);

std::string catalog_list_json();
std::string pair_info_json(const SymmetricPair& pair);

}  // namespace symcoh
