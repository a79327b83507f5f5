#pragma once

#include "curve_complex.hpp"

namespace sd::fixtures {

/// Torus with two circles meeting at one point (one square region).
CurveComplex t2();

/// Torus carrying a single crossing-free circle.
CurveComplex t2_single();

/// Genus-3 surface with four circles in a cyclic chain, consecutive pairs
/// meeting exactly once, all other pairs disjoint.
CurveComplex g3();

/// Sphere with two circles crossing at two canceling points (four lunes).
CurveComplex sphere_bigon();

/// Genus-2 surface with one crossing-free separating circle.
CurveComplex separating();

/// Torus with two disjoint parallel copies of the same essential circle.
CurveComplex parallel_pair();

/// Replace the region list by one disk region per traced face.
void fill_regions_as_disks(CurveComplex& cx);

} // namespace sd::fixtures
