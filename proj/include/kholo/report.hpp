#ifndef KHOLO_REPORT_HPP
#define KHOLO_REPORT_HPP

#include <json.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "kholo/branches.hpp"
#include "kholo/cartan.hpp"
#include "kholo/eliminate.hpp"
#include "kholo/simplicial.hpp"

namespace kholo {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
std::string toolkit_version();

struct PluriharmonicReport {
  SparsePoly u;
  PluriharmonicCheck check;
};

struct GReport {
  SparsePoly f;
  SparsePoly g;
  HolomorphyCheck holomorphy;
  RestrictionIdentities identities;
};

struct DiscriminantReport {
  SparsePoly p;
  std::string t;
  SparsePoly d;
};

struct RouteReport {
  PLPath path;
  AvoidanceCheck avoidance;
};

struct SelftestItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<SelftestItem> items;
};

using ReportPayload = std::variant<CartanReport, PluriharmonicReport, GReport, EliminationReport, DiscriminantReport,
                                   BranchReport, RouteReport, SelftestReport>;

/// Top-level document: schema version, toolkit version, the command, an echo
/// of its inputs and the result. Field order is fixed.
struct ReportDocument {
  std::string command;
  Json inputs = Json::object();
  ReportPayload result;
};

Json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const Json& j);

Json to_json(const ReportDocument& doc);
/// Inverse of to_json. Throws InvalidDocument.
ReportDocument from_json(const Json& j);

/// Two-space indented text.
std::string serialize(const ReportDocument& doc);
ReportDocument deserialize(const std::string& text);

/// Input document for routing: dimension, vertices (rows of rational
/// strings), top (index tuples), marked (index tuples), endpoints [from, to].
struct RouteInput {
  SimplicialComplex complex;
  std::vector<Simplex> marked;
  std::size_t from;
  std::size_t to;
};

RouteInput route_input_from_json(const Json& j);
Json route_input_to_json(const RouteInput& in);

}  // namespace kholo

#endif  // KHOLO_REPORT_HPP
