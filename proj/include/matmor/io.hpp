#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "matmor/flag.hpp"
#include "matmor/lorentzian.hpp"
#include "matmor/morphism.hpp"
#include "matmor/polynomial.hpp"
#include "matmor/setfunction.hpp"

namespace matmor::io {

using json = nlohmann::json;

// Rationals travel as {"num": "...", "den": "..."} in lowest terms; the
// loader also accepts bare integers and "a/b" strings.
json rational_to_json(const Rat& r);
Rat rational_from_json(const json& j);

json subset_to_json(Subset s);  // sorted 1-based element array

// Matroid descriptors: kind in {bases, graph, linear, uniform, dual}.
Matroid matroid_from_json(const json& j);
Graph graph_from_json(const json& j);
RotationSystem rotation_from_json(const json& j, const Graph& g);
MatroidMorphism morphism_from_json(const json& j);
FlagMatroid flag_from_json(const json& j);
SetFunction setfunction_from_json(const json& j);

json polynomial_to_json(const Polynomial& p);       // terms sorted by exponent vector
Polynomial polynomial_from_json(const json& j);
json trivariate_to_json(const TrivariatePolynomial& t);

json morphism_verdict_to_json(const MorphismVerdict& v);
json delta_verdict_to_json(const DeltaMatroidVerdict& v);
json lorentzian_verdict_to_json(const LorentzianVerdict& v);
json ulc_verdict_to_json(const UlcVerdict& v);
json rank_axiom_report_to_json(const RankAxiomReport& r);
json ln_report_to_json(const LnProbeReport& r);
json mnat_verdict_to_json(const MnatVerdict& v);
json submodular_verdict_to_json(const SubmodularVerdict& v);

// Canonical form: sorted keys (nlohmann objects are ordered maps), 2-space
// indent, trailing newline. Golden files are byte-stable under this.
std::string canonical_dump(const json& j);
json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

std::uint64_t fnv1a(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

}  // namespace matmor::io
