#pragma once

#include <cstdint>
#include <vector>

#include "ckpd/vec3.hpp"

namespace ckpd {

/// Tags applied by geometry builders to loading surfaces (curved bar ends).
enum class SurfaceTag : std::uint8_t { none = 0, left_end = 1, right_end = 2 };

/// A discretized body in its reference configuration: point positions,
/// the (uniform) volume represented by each point, and the neighborhood
/// fullness factor beta used to correct the nominal horizon volume near
/// free surfaces.
///
/// 2D clouds keep z = 0 for every point and carry dim = 2; point_volume is
/// then an area [m^2] and densities are per unit area.
struct PointCloud {
  std::vector<Vec3> positions;            // X^i [m]
  double point_volume = 0.0;              // dV [m^3] (3D) or [m^2] (2D)
  std::vector<double> fullness;           // beta^i in [0,1]; empty until computed
  std::vector<SurfaceTag> surface_tag;    // loading-surface tags; may be empty
  int body_id = 0;
  int dim = 3;

  std::size_t size() const { return positions.size(); }
};

/// A pre-crack. In 2D the segment a-b is the crack itself; in 3D it defines
/// a strip: the plane spanned by (b - a) and the thickness direction,
/// bounded along (b - a) by the endpoints and unbounded along thickness.
struct CrackSegment {
  Vec3 a;
  Vec3 b;
  Vec3 thickness_dir{0.0, 0.0, 1.0};  // 3D only
};

/// True if the reference segment p-q crosses the crack. Strict crossing of
/// the crack plane/line is required (bonds ending exactly on the crack do
/// not count) while the in-plane span test is inclusive.
bool crack_severs_bond(const CrackSegment& crack, const Vec3& p, const Vec3& q,
                       int dim);

/// Throws std::invalid_argument when a basic invariant is violated
/// (empty cloud, non-positive volume, duplicate points on small clouds).
void validate_cloud(const PointCloud& cloud);

}  // namespace ckpd
