#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "epibound/graph.hpp"

namespace epibound {

using ordered_json = nlohmann::ordered_json;

/// Edge-list text format: first line "n m", then m lines "u v" (ASCII
/// decimal, 0-indexed). Lines beginning with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Seed file: one vertex id per line; '#' lines and blanks are ignored.
std::vector<Vertex> read_seed_file(const std::string& path);

/// Doubles rendered with up to 17 significant digits ("%.17g"), enough
/// to round-trip exactly, so identical runs produce identical bytes.
std::string format_double(double x);

/// Serializer matching nlohmann's two-space pretty print except that
/// doubles go through format_double.
std::string dump_json(const ordered_json& value);

}  // namespace epibound
