#pragma once

#include <memory>
#include <string_view>

#include "catclass/dataset/dataset.hpp"

namespace catclass::corpus {

/// Identifier accepted by the CLI in place of a data path.
inline constexpr std::string_view kElectionId = "embedded:election";

/// Root attribute of the hand-drawn reference tree distributed with the
/// election survey. Used only for reporting agreement, never asserted.
inline constexpr std::string_view kElectionReferenceRoot = "Attitude to election officials";

/// Raw embedded files, byte-identical to data/election.schema.json and
/// data/election.csv in the source tree.
std::string_view election_schema_text();
std::string_view election_csv_text();

/// 9 survey attributes plus the 3-class participation target.
std::shared_ptr<const AttributeSchema> election_schema();

/// The 100 labeled survey records in source order.
Dataset election_dataset();

}  // namespace catclass::corpus
