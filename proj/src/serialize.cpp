#include "opcheck/serialize.hpp"

#include <cmath>
#include <string>

#include "opcheck/errors.hpp"

namespace opcheck {
namespace {

json entries_to_json(const GeneralMatrix& G) {
  json rows = json::array();
  for (int i = 0; i < G.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < G.cols(); ++j)
      row.push_back(json::array({G(i, j).real(), G(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

GeneralMatrix entries_from_json(const json& entries, int rows, int cols, const char* what) {
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw ConfigError(std::string(what) + ": 'entries' must have " + std::to_string(rows) +
                      " rows");
  GeneralMatrix G(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ConfigError(std::string(what) + ": row " + std::to_string(i) + " must have " +
                        std::to_string(cols) + " entries");
    for (int j = 0; j < cols; ++j) {
      const json& e = row[static_cast<std::size_t>(j)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ConfigError(std::string(what) + ": entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") must be a [re, im] pair");
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw ConfigError(std::string(what) + ": non-finite entry");
      G(i, j) = cd(re, im);
    }
  }
  return G;
}

int get_dim(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ConfigError(std::string(what) + ": missing integer field '" + key + "'");
  const int v = j[key].get<int>();
  if (v < 1) throw ConfigError(std::string(what) + ": '" + key + "' must be >= 1");
  return v;
}

}  // namespace

json to_json(const GeneralMatrix& G) {
  return json{{"rows", G.rows()}, {"cols", G.cols()}, {"entries", entries_to_json(G)}};
}

json to_json(const HermitianMatrix& H) {
  return json{{"dim", H.dim()}, {"entries", entries_to_json(H.mat())}};
}

json to_json(const CPMap& phi) {
  json kraus = json::array();
  for (const auto& C : phi.kraus) kraus.push_back(to_json(C));
  return json{{"dim_in", phi.dim_in}, {"dim_out", phi.dim_out}, {"kraus", std::move(kraus)}};
}

GeneralMatrix general_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("matrix: expected an object");
  const int rows = get_dim(j, "rows", "matrix");
  const int cols = get_dim(j, "cols", "matrix");
  if (!j.contains("entries")) throw ConfigError("matrix: missing 'entries'");
  return entries_from_json(j["entries"], rows, cols, "matrix");
}

HermitianMatrix hermitian_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("hermitian matrix: expected an object");
  const int dim = get_dim(j, "dim", "hermitian matrix");
  if (!j.contains("entries")) throw ConfigError("hermitian matrix: missing 'entries'");
  return HermitianMatrix::from_general(
      entries_from_json(j["entries"], dim, dim, "hermitian matrix"));
}

CPMap cpmap_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("cp map: expected an object");
  const int din = get_dim(j, "dim_in", "cp map");
  const int dout = get_dim(j, "dim_out", "cp map");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
    throw ConfigError("cp map: missing nonempty 'kraus' array");
  std::vector<GeneralMatrix> kraus;
  for (const json& k : j["kraus"]) {
    GeneralMatrix C = general_from_json(k);
    if (C.rows() != din || C.cols() != dout)
      throw ConfigError("cp map: Kraus factor shape does not match dim_in x dim_out");
    kraus.push_back(std::move(C));
  }
  return make_cpmap(std::move(kraus));
}

}  // namespace opcheck
