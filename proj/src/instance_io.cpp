#include "latroute/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "latroute/errors.hpp"
#include "latroute/generators.hpp"

namespace latroute {

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) {
    throw Error("format_double: conversion failed");
  }
  return {buffer, ptr};
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) {
    tokens.push_back(token);
  }
  return tokens;
}

double parse_double_token(const std::string& token, int line) {
  double value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("bad number '" + token + "'", line);
  }
  return value;
}

long long parse_int_token(const std::string& token, int line) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("bad integer '" + token + "'", line);
  }
  return value;
}

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

Graph read_instance(std::istream& in) {
  std::string line;
  int line_no = 0;

  long long n = 0, m = 0, d = 0, has_budget = 0;
  bool header_seen = false;
  std::vector<Edge> edges;
  long long edges_read = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) {
      continue;
    }
    const auto tokens = split_tokens(line);
    if (!header_seen) {
      if (tokens.size() != 4) {
        throw ParseError("header must be 'n m d has_budget'", line_no);
      }
      n = parse_int_token(tokens[0], line_no);
      m = parse_int_token(tokens[1], line_no);
      d = parse_int_token(tokens[2], line_no);
      has_budget = parse_int_token(tokens[3], line_no);
      if (n <= 0 || m < 0 || d <= 0 || (has_budget != 0 && has_budget != 1)) {
        throw ParseError("bad header values", line_no);
      }
      header_seen = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (edges_read >= m) {
      throw ParseError("unexpected content after " + std::to_string(m) +
                           " edges",
                       line_no);
    }
    const auto width = static_cast<std::size_t>(d + has_budget);
    if (tokens.size() != 2 + width) {
      throw ParseError("edge needs tail, head and " + std::to_string(width) +
                           " weights",
                       line_no);
    }
    Edge edge;
    edge.tail = static_cast<VertexId>(parse_int_token(tokens[0], line_no));
    edge.head = static_cast<VertexId>(parse_int_token(tokens[1], line_no));
    edge.weights.reserve(width);
    for (std::size_t k = 0; k < width; ++k) {
      edge.weights.push_back(parse_double_token(tokens[2 + k], line_no));
    }
    edges.push_back(std::move(edge));
    ++edges_read;
  }

  if (!header_seen) {
    throw ParseError("empty instance", line_no + 1);
  }
  if (edges_read != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges_read),
                     line_no + 1);
  }
  return Graph(static_cast<VertexId>(n), static_cast<int>(d), has_budget == 1,
               std::move(edges));
}

void write_instance(std::ostream& out, const Graph& graph) {
  out << graph.vertex_count() << ' ' << graph.edge_count() << ' '
      << graph.criteria_count() << ' ' << (graph.has_budget_weight() ? 1 : 0)
      << '\n';
  for (const Edge& edge : graph.edges()) {
    out << edge.tail << ' ' << edge.head;
    for (const double w : edge.weights) {
      out << ' ' << format_double(w);
    }
    out << '\n';
  }
}

Graph read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  return read_instance(in);
}

void write_instance_file(const std::string& path, const Graph& graph) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open '" + path + "' for writing");
  }
  write_instance(out, graph);
}

namespace {

std::string strip_semicolons(std::string token) {
  while (!token.empty() && token.back() == ';') {
    token.pop_back();
  }
  return token;
}

}  // namespace

Graph parse_tntp(std::istream& in, std::uint64_t variance_seed) {
  std::string line;
  int line_no = 0;

  long long nodes = -1, links = -1;
  bool metadata_done = false;

  while (!metadata_done && std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '~') {
      continue;
    }
    if (line[first] != '<') {
      throw ParseError("expected metadata tag before link records", line_no);
    }
    const auto close = line.find('>', first);
    if (close == std::string::npos) {
      throw ParseError("unterminated metadata tag", line_no);
    }
    const std::string key = line.substr(first + 1, close - first - 1);
    const std::string rest = line.substr(close + 1);
    if (key == "END OF METADATA") {
      metadata_done = true;
    } else if (key == "NUMBER OF NODES") {
      nodes = parse_int_token(split_tokens(rest).at(0), line_no);
    } else if (key == "NUMBER OF LINKS") {
      links = parse_int_token(split_tokens(rest).at(0), line_no);
    }
    // other tags (zones, first thru node, ...) are irrelevant here
  }

  if (!metadata_done) {
    throw ParseError("missing <END OF METADATA>", line_no + 1);
  }
  if (nodes <= 0) {
    throw ParseError("missing or bad <NUMBER OF NODES>", line_no);
  }
  if (links < 0) {
    throw ParseError("missing or bad <NUMBER OF LINKS>", line_no);
  }

  std::mt19937_64 rng(variance_seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(links));

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '~') {
      continue;
    }
    if (static_cast<long long>(edges.size()) >= links) {
      throw ParseError("more link records than <NUMBER OF LINKS>", line_no);
    }
    auto tokens = split_tokens(line);
    for (auto& token : tokens) {
      token = strip_semicolons(token);
    }
    while (!tokens.empty() && tokens.back().empty()) {
      tokens.pop_back();
    }
    if (tokens.size() < 5) {
      throw ParseError("link record needs at least init, term, capacity, "
                       "length, free-flow time",
                       line_no);
    }
    const long long init = parse_int_token(tokens[0], line_no);
    const long long term = parse_int_token(tokens[1], line_no);
    if (init < 1 || init > nodes || term < 1 || term > nodes) {
      throw ParseError("node id out of range [1, " + std::to_string(nodes) +
                           "]",
                       line_no);
    }
    const double mean = parse_double_token(tokens[4], line_no);
    // Variance from (mean*1e-6, mean]; the positive lower bound keeps the
    // weight matrix strictly positive. Non-positive means (invalid anyway)
    // pass through for validate() to flag.
    double variance = mean;
    if (mean > 0) {
      const double low = mean * 1e-6;
      variance = low + (mean - low) * uniform_unit_positive(rng);
    }
    Edge edge;
    edge.tail = static_cast<VertexId>(init - 1);
    edge.head = static_cast<VertexId>(term - 1);
    edge.weights = {mean, variance};
    edges.push_back(std::move(edge));
  }

  if (static_cast<long long>(edges.size()) != links) {
    throw ParseError("expected " + std::to_string(links) +
                         " link records, found " +
                         std::to_string(edges.size()),
                     line_no + 1);
  }
  return Graph(static_cast<VertexId>(nodes), 2, false, std::move(edges));
}

Graph parse_tntp_file(const std::string& path, std::uint64_t variance_seed) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  return parse_tntp(in, variance_seed);
}

}  // namespace latroute
