#pragma once

// JSON and DOT renderings of library values. Keys are lower camel case;
// lists are ascending.

#include <string>

#include <json.hpp>

#include "ndelta/classify.hpp"
#include "ndelta/delta.hpp"
#include "ndelta/graphs.hpp"
#include "ndelta/polyfam.hpp"
#include "ndelta/realize.hpp"

namespace ndelta::io {

using Json = nlohmann::ordered_json;

/// [x, y, z]
Json triple_json(const DeltaTriple& t);
Json divisor_diff_sets_json(const DivisorDiffSets& d);
Json decomposition_json(const PrimitiveDecomposition& d);
Json verdict_json(const ClassVerdict& v);
Json family_json(const PolyFamily& f);
Json realization_params_json(const RealizationParams& p);

/// kSize, iVertices, neighborhoods, degrees, sigma (upper triangle by pair).
Json split_graph_json(const SplitGraph& s);

enum class KStyle { Expanded, Collapsed };

/// Undirected DOT of S. I-vertices are circles labelled "name (degree)".
/// Collapsed K becomes one box per distinct set of I-neighbours.
std::string split_graph_dot(const SplitGraph& s, KStyle style, const std::string& name = "S");

/// DOT of Phi(S): edge attribute `label` is the multiplicity, `dir` marks
/// the flow arc from the lower to the higher degree (both on ties).
std::string factor_graph_dot(const SplitGraph& s, const std::string& name = "Phi");

}  // namespace ndelta::io
