#pragma once

#include "walkwise/bounds.hpp"
#include "walkwise/graph.hpp"
#include "walkwise/sparsify.hpp"
#include "walkwise/witness.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace walkwise {

/// 64-bit FNV-1a over the graph's vertex count, mode, and canonical typed
/// edge list; identifies the exact graph a report was computed on.
std::uint64_t graph_fingerprint(const Graph& g);

/// Line-oriented trace: one removal per line as
/// `iteration u v score_summary`, where the summary is the ascending score
/// tuple, the degree pair, or `-` for unscored removals.
void write_trace_text(std::ostream& out, const RemovalTrace& trace);
std::string trace_text(const RemovalTrace& trace);

nlohmann::json trace_to_json(const RemovalTrace& trace);
nlohmann::json bound_report_to_json(const BoundReport& report, std::uint64_t fingerprint,
                                    const VertexSet& subset);
nlohmann::json witness_to_json(const LowerBoundWitness& witness);

const char* tie_break_name(TieBreak tie_break);
const char* argmax_order_name(ArgmaxOrder order);

} // namespace walkwise
