#pragma once

#include <json.hpp>

#include "resloc/cpn.hpp"
#include "resloc/groebner.hpp"
#include "resloc/invariant.hpp"
#include "resloc/residue.hpp"

namespace resloc {

using Json = nlohmann::ordered_json;

// Integers serialize as JSON numbers while they fit in 64 bits and as decimal
// strings beyond; rationals as [num, den]; readers accept numbers, strings,
// and (for rationals) "p/q" strings.
Json mpz_to_json(const mpz_class& v);
mpz_class mpz_from_json(const Json& j);
Json rational_to_json(const mpq_class& q);
mpq_class rational_from_json(const Json& j);

Json gaussian_to_json(const GaussianRational& v);
GaussianRational gaussian_from_json(const Json& j);

/// {"nvars": n, "terms": [{"exps": [...], "re": [n,d], "im": [n,d]}]}.
Json poly_to_json(const MultiPoly& p);
/// Accepts the object form or a grammar string (requires nvars for strings).
MultiPoly poly_from_json(const Json& j, std::size_t nvars_hint = 0);

Json certificate_to_json(const MembershipCertificate& cert);
MembershipCertificate certificate_from_json(const Json& j, std::size_t nvars);

Json invariant_spec_to_json(const InvariantPolySpec& spec);
InvariantPolySpec invariant_spec_from_json(const Json& j);

/// {"h": poly, "f": [poly...], "certificate": optional}.
struct ResidueJob {
    ResidueProblem problem;
    std::optional<MembershipCertificate> certificate;
};
ResidueJob residue_job_from_json(const Json& j);

/// {"A": [[rational]]} or
/// {"chart_fields": [{"chart": c, "components": [poly...], "zeros": [[rational]]}]}.
FieldWithZeros field_from_json(const Json& j);

}  // namespace resloc
