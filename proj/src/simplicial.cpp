#include "kholo/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "kholo/error.hpp"

namespace kholo {

namespace {

std::string describe(const Simplex& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

bool contains(const Simplex& outer, const Simplex& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

Simplex intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool boxes_overlap(const std::vector<RationalVector>& v, const Simplex& a, const Simplex& b, std::size_t dim) {
  for (std::size_t c = 0; c < dim; ++c) {
    const auto idx = static_cast<Eigen::Index>(c);
    auto lo_hi = [&](const Simplex& s) {
      Rational lo = v[s.front()](idx), hi = lo;
      for (auto i : s) {
        lo = std::min(lo, v[i](idx));
        hi = std::max(hi, v[i](idx));
      }
      return std::pair{lo, hi};
    };
    const auto [alo, ahi] = lo_hi(a);
    const auto [blo, bhi] = lo_hi(b);
    if (ahi < blo || bhi < alo) return false;
  }
  return true;
}

// Two top simplices meet properly iff no common point has weight on a vertex
// outside their shared face.
bool meet_properly(const std::vector<RationalVector>& v, const Simplex& a, const Simplex& b, std::size_t dim) {
  const Simplex shared = intersection(a, b);
  const auto na = static_cast<Eigen::Index>(a.size());
  const auto nb = static_cast<Eigen::Index>(b.size());
  const auto rows = static_cast<Eigen::Index>(dim) + 2;
  RationalMatrix eq = RationalMatrix::Constant(rows, na + nb, Rational(0));
  RationalVector rhs = RationalVector::Constant(rows, Rational(0));
  RationalVector objective = RationalVector::Constant(na + nb, Rational(0));
  for (Eigen::Index i = 0; i < na; ++i) {
    const auto vi = a[static_cast<std::size_t>(i)];
    eq.col(i).head(static_cast<Eigen::Index>(dim)) = v[vi];
    eq(rows - 2, i) = Rational(1);
    if (!std::binary_search(shared.begin(), shared.end(), vi)) objective(i) = Rational(1);
  }
  for (Eigen::Index j = 0; j < nb; ++j) {
    eq.col(na + j).head(static_cast<Eigen::Index>(dim)) = -v[b[static_cast<std::size_t>(j)]];
    eq(rows - 1, na + j) = Rational(1);
  }
  rhs(rows - 2) = Rational(1);
  rhs(rows - 1) = Rational(1);
  const auto best = lp::maximize(eq, rhs, objective);
  return !best || best->is_zero();
}

// max s over s in [0,1] with p + s (q - p) in conv(face); nullopt if disjoint.
std::optional<Rational> segment_reach(const RationalVector& p, const RationalVector& q,
                                      const std::vector<RationalVector>& v, const Simplex& face) {
  const Eigen::Index dim = p.size();
  const auto k = static_cast<Eigen::Index>(face.size());
  const Eigen::Index cols = 2 + k;  // s, slack, lambdas
  const Eigen::Index rows = dim + 2;
  RationalMatrix eq = RationalMatrix::Constant(rows, cols, Rational(0));
  RationalVector rhs = RationalVector::Constant(rows, Rational(0));
  RationalVector objective = RationalVector::Constant(cols, Rational(0));
  eq.col(0).head(dim) = q - p;
  rhs.head(dim) = -p;
  for (Eigen::Index i = 0; i < k; ++i) {
    eq.col(2 + i).head(dim) = -v[face[static_cast<std::size_t>(i)]];
    eq(dim + 1, 2 + i) = Rational(1);
  }
  eq(dim, 0) = Rational(1);
  eq(dim, 1) = Rational(1);
  rhs(dim) = Rational(1);
  rhs(dim + 1) = Rational(1);
  objective(0) = Rational(1);
  return lp::maximize(eq, rhs, objective);
}

bool segment_hits(const RationalVector& p, const RationalVector& q, bool exempt_p, bool exempt_q,
                  const std::vector<RationalVector>& v, const Simplex& face) {
  if (exempt_p && exempt_q) {
    const RationalVector mid = (p + q) * Rational(1, 2);
    return segment_hits(p, mid, true, false, v, face) || segment_hits(q, mid, true, false, v, face);
  }
  if (exempt_q) return segment_hits(q, p, true, false, v, face);
  const auto reach = segment_reach(p, q, v, face);
  if (!reach) return false;
  return !exempt_p || reach->sign() > 0;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t dimension, std::vector<RationalVector> vertices, std::vector<Simplex> top)
    : dim_(dimension), vertices_(std::move(vertices)), top_(std::move(top)) {
  if (dim_ == 0) throw Error(ErrorKind::InvalidComplex, "dimension must be positive");
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (static_cast<std::size_t>(vertices_[k].size()) != dim_)
      throw Error(ErrorKind::InvalidComplex, "vertex " + std::to_string(k) + " has the wrong number of coordinates");
  std::set<Simplex> seen;
  for (std::size_t k = 0; k < top_.size(); ++k) {
    auto& s = top_[k];
    std::sort(s.begin(), s.end());
    if (s.size() != dim_ + 1 || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorKind::InvalidComplex, "top simplex " + std::to_string(k) + " needs " + std::to_string(dim_ + 1) + " distinct vertices");
    if (s.back() >= vertices_.size())
      throw Error(ErrorKind::InvalidComplex, "top simplex " + std::to_string(k) + " references a missing vertex");
    if (!seen.insert(s).second) throw Error(ErrorKind::InvalidComplex, "duplicate top simplex " + describe(s));
    RationalMatrix edges(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (std::size_t i = 1; i <= dim_; ++i) edges.col(static_cast<Eigen::Index>(i - 1)) = vertices_[s[i]] - vertices_[s[0]];
    if (lp::rank(edges) != static_cast<Eigen::Index>(dim_))
      throw Error(ErrorKind::InvalidComplex, "top simplex " + describe(s) + " is degenerate");
  }
  for (std::size_t a = 0; a < top_.size(); ++a)
    for (std::size_t b = a + 1; b < top_.size(); ++b)
      if (boxes_overlap(vertices_, top_[a], top_[b], dim_) && !meet_properly(vertices_, top_[a], top_[b], dim_))
        throw Error(ErrorKind::InvalidComplex,
                    "top simplices " + describe(top_[a]) + " and " + describe(top_[b]) + " do not meet in a common face");
}

std::vector<Simplex> SimplicialComplex::faces(std::size_t d) const {
  std::set<Simplex> out;
  const std::size_t size = d + 1;
  if (size > dim_ + 1) return {};
  for (const auto& s : top_) {
    std::vector<bool> pick(s.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (pick[i]) f.push_back(s[i]);
      out.insert(f);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {out.begin(), out.end()};
}

bool SimplicialComplex::is_face(const Simplex& s) const {
  return !s.empty() && std::any_of(top_.begin(), top_.end(), [&](const Simplex& t) { return contains(t, s); });
}

Subcomplex::Subcomplex(const SimplicialComplex& complex, const std::vector<Simplex>& marked, std::size_t from, std::size_t to)
    : from_(from), to_(to) {
  const auto nv = complex.vertices().size();
  if (from >= nv || to >= nv || from == to)
    throw Error(ErrorKind::InvalidEndpoints, "endpoints must be two distinct vertices");
  const std::size_t n = complex.dimension();
  for (auto s : marked) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!complex.is_face(s)) throw Error(ErrorKind::InvalidComplex, "marked simplex " + describe(s) + " is not a face");
    // closure under faces: every nonempty subset
    const std::size_t count = std::size_t{1} << s.size();
    for (std::size_t mask = 1; mask < count; ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (std::size_t{1} << i)) f.push_back(s[i]);
      marked_.insert(std::move(f));
    }
  }
  marked_.insert({from});
  marked_.insert({to});
  for (const auto& s : marked_) {
    if (s == Simplex{from} || s == Simplex{to}) continue;
    if (s.size() + 1 > n)  // dim = size - 1 must be <= n - 2
      throw Error(ErrorKind::InvalidComplex, "marked simplex " + describe(s) + " has dimension above n - 2");
  }
}

RationalVector barycenter(const SimplicialComplex& complex, const Simplex& s) {
  RationalVector sum = RationalVector::Constant(static_cast<Eigen::Index>(complex.dimension()), Rational(0));
  for (auto v : s) sum += complex.vertices()[v];
  return sum * Rational(1, static_cast<long>(s.size()));
}

std::size_t FacetGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& n : neighbours) twice += n.size();
  return twice / 2;
}

FacetGraph facet_adjacency(const SimplicialComplex& complex) {
  const auto& top = complex.top();
  std::map<Simplex, std::vector<std::size_t>> by_facet;
  for (std::size_t k = 0; k < top.size(); ++k)
    for (std::size_t drop = 0; drop < top[k].size(); ++drop) {
      Simplex facet = top[k];
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
      by_facet[facet].push_back(k);
    }
  FacetGraph g;
  g.neighbours.resize(top.size());
  for (const auto& [facet, owners] : by_facet)
    for (std::size_t i = 0; i < owners.size(); ++i)
      for (std::size_t j = i + 1; j < owners.size(); ++j) {
        g.neighbours[owners[i]].push_back(owners[j]);
        g.neighbours[owners[j]].push_back(owners[i]);
      }
  for (auto& n : g.neighbours) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  return g;
}

PLPath route_path(const SimplicialComplex& complex, const Subcomplex& marked) {
  const auto& top = complex.top();
  auto holds = [&](std::size_t k, std::size_t v) { return std::binary_search(top[k].begin(), top[k].end(), v); };

  const FacetGraph graph = facet_adjacency(complex);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(top.size(), kNone);
  std::vector<bool> visited(top.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t k = 0; k < top.size(); ++k)
    if (holds(k, marked.from())) {
      visited[k] = true;
      queue.push_back(k);
    }
  if (queue.empty()) throw Error(ErrorKind::InvalidEndpoints, "start vertex lies in no top simplex");
  if (std::none_of(top.begin(), top.end(), [&](const Simplex& s) { return std::binary_search(s.begin(), s.end(), marked.to()); }))
    throw Error(ErrorKind::InvalidEndpoints, "end vertex lies in no top simplex");

  std::size_t last = kNone;
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    if (holds(k, marked.to())) {
      last = k;
      break;
    }
    for (auto nb : graph.neighbours[k])
      if (!visited[nb]) {
        visited[nb] = true;
        parent[nb] = k;
        queue.push_back(nb);
      }
  }
  if (last == kNone) throw Error(ErrorKind::Disconnected, "no facet path joins the endpoints");

  std::vector<std::size_t> chain;
  for (std::size_t k = last; k != kNone; k = parent[k]) chain.push_back(k);
  std::reverse(chain.begin(), chain.end());

  const auto& verts = complex.vertices();
  PLPath path;
  path.waypoints.push_back({verts[marked.from()], WaypointKind::Endpoint, {marked.from()}});
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) {
      Simplex shared = intersection(top[chain[i - 1]], top[chain[i]]);
      path.waypoints.push_back({barycenter(complex, shared), WaypointKind::FacetBarycenter, std::move(shared)});
    }
    path.waypoints.push_back({barycenter(complex, top[chain[i]]), WaypointKind::TopBarycenter, top[chain[i]]});
  }
  path.waypoints.push_back({verts[marked.to()], WaypointKind::Endpoint, {marked.to()}});
  return path;
}

AvoidanceCheck verify_avoidance(const PLPath& path, const SimplicialComplex& complex, const Subcomplex& marked) {
  AvoidanceCheck out;
  const auto& wp = path.waypoints;
  if (wp.size() < 2) return out;
  for (std::size_t seg = 0; seg + 1 < wp.size(); ++seg) {
    const bool exempt_start = seg == 0;
    const bool exempt_end = seg + 2 == wp.size();
    for (const auto& face : marked.marked())
      if (segment_hits(wp[seg].position, wp[seg + 1].position, exempt_start, exempt_end, complex.vertices(), face)) {
        out.avoids = false;
        out.violation = AvoidanceViolation{seg, face};
        return out;
      }
  }
  return out;
}

}  // namespace kholo
