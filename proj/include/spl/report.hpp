#pragma once

#include <json.hpp>

#include "spl/group.hpp"
#include "spl/lattice.hpp"
#include "spl/monoid.hpp"
#include "spl/structure.hpp"
#include "spl/verify.hpp"

namespace spl {

using Json = nlohmann::ordered_json;

/// Every top-level report carries `schema` and `kind`; fields are only ever
/// added.
inline constexpr int kSchemaVersion = 1;
Json envelope(const char* kind);

Json to_json(const BigInt& n);
Json to_json(const PathFamilyCardinality& c, const DirectedMultigraph& g);
Json to_json(const InvariantFactors& f);
Json to_json(const LatticeIsoReport& r);
Json to_json(const FiniteLattice& l);

Json validate_report(const SandpileGraph& g);
Json monoid_report(const MonoidTable& m);
Json idempotent_report(const MonoidTable& m);
Json lattice_report(const MonoidTable& m);
/// The monoid route runs when `m` is given, the Laplacian route when `snf` is
/// set; with both the report says whether they agree.
Json group_report(const MonoidTable* m, const SandpileGraph& g, bool snf, bool with_carrier);
Json archimedean_report(const MonoidTable& m);
Json structure_report(const SandpileGraph& g, const IdealChainReport& r);
Json two_idempotent_report(const TwoIdempotentReport& r);
/// Timings make the output run-dependent, so they are opt-in.
Json verify_report(const VerifyReport& r, bool with_timing);

}  // namespace spl
