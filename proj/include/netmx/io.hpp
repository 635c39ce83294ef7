#pragma once

#include "netmx/audit.hpp"
#include "netmx/catalogue.hpp"
#include "netmx/generators.hpp"
#include "netmx/graph.hpp"
#include "netmx/matrix.hpp"
#include "netmx/utilization.hpp"

#include "json.hpp"

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace netmx::io {

using json = nlohmann::json;

// Graph edge list:
//   # comment
//   nodes: a b c d      (optional, first non-comment line; fixes label order)
//   a b                 (edge a -> b)
// Labels not in the header are indexed by first appearance.
Graph read_graph(std::istream& in, const std::string& source);
Graph read_graph_file(const std::filesystem::path& path);
std::string write_graph(const Graph& g);

// Trajectory list: one trajectory per line as whitespace-separated labels.
// Unknown labels and invalid trajectories throw ParseError with the line.
std::vector<Trajectory> read_trajectories(std::istream& in, const std::string& source, const Graph& g);
std::vector<Trajectory> read_trajectories_file(const std::filesystem::path& path, const Graph& g);
std::string write_trajectories(const Dataset& d);

Dataset load_dataset(const std::filesystem::path& graph_path, const std::filesystem::path& traj_path);

/// Matrix with its node labels, as read back from CSV or JSON.
struct LabelledMatrix
{
    std::vector<std::string> labels;
    CountMatrix matrix;
};

// CSV: header row ",l1,...,ln", then one "li,c1,...,cn" row per node.
// INF cells are the literal token INF.
std::string matrix_to_csv(const CountMatrix& m, const std::vector<std::string>& labels);
LabelledMatrix matrix_from_csv(std::istream& in, const std::string& source);

// JSON: {"n": n, "labels": [...], "cells": [[...]]} with null for INF.
json matrix_to_json(const CountMatrix& m, const std::vector<std::string>& labels);
LabelledMatrix matrix_from_json(const json& j);

// Catalogue: [{id, class, lhs, relation, rhs, paper_section, quote}].
json catalogue_to_json(std::span<const IdentitySpec> catalogue);
std::vector<IdentitySpec> catalogue_from_json(const json& j);

json report_to_json(const AuditReport& r, const std::vector<std::string>& labels);
std::string report_table(const AuditReport& r, const std::vector<std::string>& labels);

json gen_config_to_json(const GenConfig& cfg);
/// Accepts keys with '_' or '-' (edge_prob / edge-prob); missing keys keep `base`.
GenConfig gen_config_from_json(const json& j, GenConfig base = {});

/// Writes text exactly as given (binary mode, no newline translation).
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

} // namespace netmx::io
