#pragma once

#include "json.hpp"

namespace matmor::fixtures {

// Bundled example instances: a two-to-one projection of the 14-point
// affine GF(2) matroid onto the Fano plane, a graph homomorphism from the
// crossed triangular prism onto a triangle, and the toroidal K7 embedding
// whose geometric dual is the Heawood graph.

nlohmann::json fano_projection();      // morphism descriptor
nlohmann::json graph_hom();            // morphism descriptor
nlohmann::json k7_graph();             // graph descriptor
nlohmann::json k7_rotation();          // rotation-system descriptor
nlohmann::json k7_torus();             // morphism descriptor, built by face tracing
nlohmann::json example56_setfunction();
nlohmann::json example56_golden();     // expected limit + derived witness p

}  // namespace matmor::fixtures
