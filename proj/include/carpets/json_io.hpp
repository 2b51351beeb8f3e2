#pragma once

#include <string>

#include <json.hpp>

#include "carpets/carpet.hpp"
#include "carpets/dimensions.hpp"
#include "carpets/sequence.hpp"

namespace carpets {

// Carpet format: {"maps":[{"a":num|"p/q","b":...,"dx":...,"dy":...},...]}.
// String entries are kept as exact rationals.
DiagonalIFS carpet_from_json(const nlohmann::json &j);
nlohmann::json carpet_to_json(const DiagonalIFS &ifs);

// Sequence format: {"preperiod":[...],"period":[...]} or
// {"blocks":[{"word":[...],"repeat":n|"tail"},...]}.
SequenceSpec sequence_from_json(const nlohmann::json &j);
nlohmann::json sequence_to_json(const SequenceSpec &spec);

nlohmann::json classification_to_json(const ClassificationReport &rep);
// Full dimension report with solver diagnostics; carries "schema": 1.
nlohmann::json report_to_json(const DimensionReport &rep);

DiagonalIFS load_carpet(const std::string &path);
SequenceSpec load_sequence(const std::string &path);

} // namespace carpets
