#pragma once

#include <string>
#include <vector>

#include "entwine/frobenius.hpp"
#include "entwine/galois.hpp"
#include "entwine/json_io.hpp"
#include "entwine/maschke.hpp"
#include "entwine/smash.hpp"

namespace entwine::cert {

using io::json;

// Certificates are self-contained: each carries the structures it speaks
// about, so `recheck` needs nothing else.

json frobenius(const Entwining& e, const FrobeniusOutcome& out);
json smash_integrals(const Entwining& e, const std::vector<Mat>& basis);
json entwining_integrals(const Entwining& e, const std::vector<Vec>& basis);
json map(const Entwining& e, MapKind kind, const MapSolution& sol);
json split(const SplitProblem& problem, const SplitCertificate& c);
json galois(const ComoduleAlgebra& ca, const GaloisResult& r);
json smash(const Entwining& e, const SmashAlgebra& x);
json entwining(const Entwining& e);

struct Recheck {
  bool accepted = false;
  std::string type;
  ValidationReport failures;
};

/// Re-verifies a certificate, a report holding one under "certificate", or a
/// bare entwining file, using only the diagram evaluators. Throws
/// io::ParseError when there is nothing to check.
Recheck recheck(const json& doc, const io::ParseContext& ctx);

}  // namespace entwine::cert
