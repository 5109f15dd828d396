#pragma once

#include <string>

#include "symcoh/sympair.hpp"

namespace symcoh {

/// Pair-spec document: {"name": str, "family": "A|B|C|D|F|A1xA1",
/// "rank": int, "delta0": [1-based indices], "thetabar": [[a, b], ...]}.
/// thetabar lists the white-node pairs (1-based); omitted nodes are fixed.
SatakeSpec parse_pair_spec(const std::string& json_text);
std::string pair_spec_to_json(const SatakeSpec& spec);

SymmetricPair load_pair_file(const std::string& path);

/// Resolve a CLI --pair argument: a catalog name (with parameter n where the
/// entry is parameterized), else a readable file path, else <name>.pair in
/// the colon-separated directories of SYMCOH_PAIR_PATH.
SymmetricPair resolve_pair(const std::string& name, int n);

}  // namespace symcoh
