#include "foulkes/json_io.hpp"

#include <cstdint>
#include <string>

namespace foulkes {

Json int_to_json(const Int& x) {
  if (fits_int64(x)) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Json to_json(const SchurVector& v) {
  Json coeffs = Json::object();
  for (const auto& [lambda, c] : v.coeffs) coeffs[lambda.to_string()] = int_to_json(c);
  Json out = Json::object();
  out["n"] = v.n;
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const BipartiteDecomposition& v) {
  Json coeffs = Json::array();
  for (const auto& [pair, c] : v.coeffs) {
    Json entry = Json::object();
    entry["mu"] = pair.first.to_string();
    entry["lambda"] = pair.second.to_string();
    entry["c"] = int_to_json(c);
    coeffs.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["k"] = v.k;
  out["m"] = v.m;
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const ClassFunction& f) {
  Json values = Json::object();
  const auto& classes = partitions_of(f.n);
  for (std::size_t i = 0; i < classes.size(); ++i)
    values[classes[i].to_string()] = int_to_json(f.values[i]);
  Json out = Json::object();
  out["n"] = f.n;
  out["values"] = std::move(values);
  return out;
}

Json to_json(const PairClassFunction& f) {
  Json values = Json::array();
  const auto& rows = partitions_of(f.k);
  const auto& cols = partitions_of(f.m);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Json entry = Json::object();
      entry["rho"] = rows[i].to_string();
      entry["sigma"] = cols[j].to_string();
      entry["value"] = int_to_json(f.values[i][j]);
      values.push_back(std::move(entry));
    }
  }
  Json out = Json::object();
  out["k"] = f.k;
  out["m"] = f.m;
  out["values"] = std::move(values);
  return out;
}

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  return Int(j.get<std::string>());
}

}  // namespace

SchurVector schur_vector_from_json(const Json& j) {
  SchurVector v(j.at("n").get<int>());
  for (const auto& [key, val] : j.at("coeffs").items())
    v.add(Partition::parse(key), int_from_json(val));
  return v;
}

}  // namespace foulkes
