#ifndef OPCHECK_SERIALIZE_HPP
#define OPCHECK_SERIALIZE_HPP

#include <json.hpp>

#include "opcheck/cpmaps.hpp"
#include "opcheck/hermitian.hpp"
#include "opcheck/matrix.hpp"

namespace opcheck {

using json = nlohmann::json;

// JSON wire formats.  Entries are [re, im] pairs in nested row arrays:
//   GeneralMatrix  {"rows": r, "cols": c, "entries": [[[re,im], ...], ...]}
//   Hermitian      {"dim": n, "entries": [[[re,im], ...], ...]}  (symmetrized on read)
//   CPMap          {"dim_in": n, "dim_out": m, "kraus": [<GeneralMatrix>, ...]}
// Readers validate shape/finiteness and throw ConfigError on malformed
// input.

json to_json(const GeneralMatrix& G);
json to_json(const HermitianMatrix& H);
json to_json(const CPMap& phi);

GeneralMatrix general_from_json(const json& j);
HermitianMatrix hermitian_from_json(const json& j);
CPMap cpmap_from_json(const json& j);

}  // namespace opcheck

#endif  // OPCHECK_SERIALIZE_HPP
