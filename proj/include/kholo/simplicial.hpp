#ifndef KHOLO_SIMPLICIAL_HPP
#define KHOLO_SIMPLICIAL_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "kholo/exact_lp.hpp"

namespace kholo {

/// Sorted vertex indices.
using Simplex = std::vector<std::size_t>;

/// Pure finite simplicial complex of dimension n in R^n with rational
/// vertices, given by its top simplices.
///
/// Construction validates that every top simplex is affinely independent
/// and that any two top simplices meet in a common face (or not at all).
class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t dimension, std::vector<RationalVector> vertices, std::vector<Simplex> top);

  std::size_t dimension() const { return dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Simplex>& top() const { return top_; }

  /// All faces with d + 1 vertices, sorted.
  std::vector<Simplex> faces(std::size_t d) const;
  bool is_face(const Simplex& s) const;

 private:
  std::size_t dim_;
  std::vector<RationalVector> vertices_;
  std::vector<Simplex> top_;
};

/// Marked subcomplex together with the two endpoint vertices. The marked
/// set is closed under faces and contains both endpoints; apart from the
/// endpoints every marked simplex has dimension <= n - 2.
class Subcomplex {
 public:
  Subcomplex(const SimplicialComplex& complex, const std::vector<Simplex>& marked, std::size_t from, std::size_t to);

  const std::set<Simplex>& marked() const { return marked_; }
  std::size_t from() const { return from_; }
  std::size_t to() const { return to_; }

 private:
  std::set<Simplex> marked_;
  std::size_t from_;
  std::size_t to_;
};

/// Barycenter (vertex average) of a simplex.
RationalVector barycenter(const SimplicialComplex& complex, const Simplex& s);

/// Dual graph: nodes are top simplices in input order, an edge joins two
/// top simplices sharing an (n-1)-face. Neighbour lists are ascending.
struct FacetGraph {
  std::vector<std::vector<std::size_t>> neighbours;
  std::size_t edge_count() const;
};

FacetGraph facet_adjacency(const SimplicialComplex& complex);

enum class WaypointKind { Endpoint, TopBarycenter, FacetBarycenter };

struct Waypoint {
  RationalVector position;
  WaypointKind kind;
  Simplex simplex;  // the vertex, top simplex or shared facet it comes from
};

struct PLPath {
  std::vector<Waypoint> waypoints;
};

/// sigma, b(tau_1), b(tau_1 ^ tau_2), b(tau_2), ..., b(tau_s), sigma' along a
/// shortest dual path (breadth-first, ties broken by input order). Throws
/// InvalidEndpoints or Disconnected.
PLPath route_path(const SimplicialComplex& complex, const Subcomplex& marked);

struct AvoidanceViolation {
  std::size_t segment;  // waypoints[segment] -> waypoints[segment + 1]
  Simplex face;
};

struct AvoidanceCheck {
  bool avoids = true;
  std::optional<AvoidanceViolation> violation;
};

/// Exact test that no closed segment of the path meets a marked simplex,
/// except at the path's first and last points.
AvoidanceCheck verify_avoidance(const PLPath& path, const SimplicialComplex& complex, const Subcomplex& marked);

}  // namespace kholo

#endif  // KHOLO_SIMPLICIAL_HPP
