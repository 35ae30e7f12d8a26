#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wrnet/egraph.hpp"
#include "wrnet/errors.hpp"
#include "wrnet/rational.hpp"

namespace wrnet {

/// Source vertices of a planar classification span less than a 2D affine set.
class DegenerateHull : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

/// Source vertices span more than a 2D affine set; no boundary cycle exists.
class NotPlanar : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

/// Convex hull of a finite point set, kept as its generators.
struct NewtonPolytope
{
    std::vector<VertexId> generators;  // ids in the originating graph
    std::vector<RatVec> points;        // coordinates, aligned with generators
    std::size_t ambient_dim = 0;
    std::size_t affine_dim = 0;

    /// Hull of the source vertices of g.
    static NewtonPolytope of(const EGraph& g);
    /// Hull of the source vertices of g among `subset`.
    static NewtonPolytope of_sources(const EGraph& g, const std::vector<VertexId>& subset);
    /// Hull of bare points; generator ids are 0..n-1.
    static NewtonPolytope from_points(std::vector<RatVec> points);

    bool is_generator(const RatVec& y) const;
};

/// True iff y is not in the relative interior of P. y must be a generator.
bool on_boundary(const NewtonPolytope& p, const RatVec& y);

/// y in conv(points), exact.
bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& y);

/// True iff w is a strictly positive combination of {g - y : g in points},
/// i.e. w lies in the relative interior of the tangent cone of the hull at y.
/// For y in the relative interior this reduces to w lying in the hull's
/// direction space. y must lie in the hull; w = 0 is accepted and tested as is.
bool in_tangent_cone_relint(const std::vector<RatVec>& points, const RatVec& y, const RatVec& w);

/// y + eps*w in relint(P) for all small eps > 0. y must be a boundary point of P, w != 0.
bool points_into_relative_interior(const NewtonPolytope& p, const RatVec& y, const RatVec& w);

enum class ConeMembership { Interior, Boundary, Outside, ZeroCone };
std::string to_string(ConeMembership c);

/// Classifies w against cone{y' - y : y -> y'}. w must be nonzero.
ConeMembership cone_membership(const EGraph& g, VertexId y, const RatVec& w);

struct HullClassification2D
{
    std::vector<VertexId> boundary_cycle;  // clockwise, starting at the lowest-then-leftmost corner
    std::vector<VertexId> corners;         // in cycle order
    std::vector<VertexId> sides;           // in cycle order
    std::vector<VertexId> interior;        // ascending id
    /// Each side vertex maps to (previous corner, next corner) in clockwise order.
    std::map<VertexId, std::pair<VertexId, VertexId>> side_flanks;

    /// Affine frame used for orientation: origin plus two basis vectors of the
    /// source differences. For ambient dimension 2 this is the standard frame.
    RatVec origin;
    std::array<RatVec, 2> basis;

    bool is_corner(VertexId v) const;
    bool is_side(VertexId v) const;
    bool on_boundary(VertexId v) const { return is_corner(v) || is_side(v); }

    /// Frame coordinates of a direction vector; throws PreconditionError if the
    /// vector is not parallel to the plane.
    std::array<Rational, 2> plane_direction(const RatVec& d) const;
};

HullClassification2D classify_hull_2d(const EGraph& g);

/// z-component of a x b in the plane.
Rational cross2(const std::array<Rational, 2>& a, const std::array<Rational, 2>& b);

}  // namespace wrnet
