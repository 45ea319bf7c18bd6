#pragma once

#include <json.hpp>

#include <string>

#include "extop/ball.hpp"
#include "extop/canonical.hpp"
#include "extop/chain.hpp"
#include "extop/combinat.hpp"
#include "extop/freeset.hpp"
#include "extop/kernel.hpp"

namespace extop {

using Json = nlohmann::json;

// Canonical JSON forms. Subset index lists are strictly increasing, rationals
// are decimal-free "p/q" strings, kernel entries follow (cardinality, lex)
// point order and measure atoms are sorted lexicographically, so serialized
// artifacts are bit-stable.

Json kernel_to_json(const ExtensionKernel& k);
ExtensionKernel kernel_from_json(const Json& j);

Json measure_to_json(const SignedMeasure& mu);
SignedMeasure measure_from_json(const Json& j);

Json order_family_to_json(const BetaOrderFamily& fam);
BetaOrderFamily order_family_from_json(const Json& j);

Json set_map_to_json(const SetValuedMap& s);
SetValuedMap set_map_from_json(const Json& j);

Json stub_to_json(const BallKernelStub& stub);
BallKernelStub stub_from_json(const Json& j);

Json identity_reports_to_json(const std::vector<IdentityReport>& reports);

Json naturality_to_json(const NaturalitySystem& sys);

Json certificate_to_json(const LowerBoundCertificate& cert);

Json chain_report_to_json(const ChainNormReport& rep);

Json ball_point_to_json(const BallPoint& z);
BallPoint ball_point_from_json(const Json& j, const Rational& lambda);

/// Parse -> serialize -> parse on a stored artifact (kernel, order family,
/// set map or stub, detected by shape); true iff the canonical form is a
/// fixed point of another round. The canonical text is returned through out.
bool roundtrip_file(const std::string& path, std::string& canonical_out);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace extop
