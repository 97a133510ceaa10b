#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "latroute/graph.hpp"

namespace latroute {

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// Line-oriented instance format:
///   header  `n m d has_budget`
///   m lines `tail head w1 ... wd [wd+1]`
/// `#` starts a full-line comment; blank lines are skipped. Doubles are
/// written in shortest round-trip form, so read(write(g)) reproduces g
/// bit-exactly. Throws ParseError with the offending line number.
Graph read_instance(std::istream& in);
Graph read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Graph& graph);
void write_instance_file(const std::string& path, const Graph& graph);

/// TNTP-style network parser. Reads `<NUMBER OF NODES>` and
/// `<NUMBER OF LINKS>` from the metadata block, then one link record per
/// line (init node, term node, capacity, length, free-flow time, ...;
/// trailing fields ignored, `~` starts a comment). Produces a d=2 graph:
/// criterion 1 is the free-flow time (mean), criterion 2 is a variance
/// drawn per link from (mean*1e-6, mean] with the seeded generator (the
/// lower bound keeps weights strictly positive). Node ids are 1-based in
/// the file, 0-based in the graph.
Graph parse_tntp(std::istream& in, std::uint64_t variance_seed);
Graph parse_tntp_file(const std::string& path, std::uint64_t variance_seed);

}  // namespace latroute
