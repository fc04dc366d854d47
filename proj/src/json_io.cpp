#include "cgp/json_io.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "cgp/errors.hpp"

namespace cgp::io {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw InputError(where + " must be a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw InputError(where + ": missing field '" + name + "'");
  return *it;
}

Eigen::Index positive_size(const json& j, const char* name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InputError(where + ": field '" + name + "' must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

Eigen::MatrixXd real_block(const json& j, const char* name, Eigen::Index rows,
                           Eigen::Index cols, const std::string& where) {
  const json& v = field(j, name, where);
  const std::string label = where + ": field '" + name + "'";
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != rows) {
    throw InputError(label + " must be an array of " + std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = v[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InputError(label + " row " + std::to_string(r) + " must have " +
                       std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& x = row[static_cast<std::size_t>(c)];
      if (!x.is_number() || !std::isfinite(x.get<double>())) {
        throw InputError(label + " entry [" + std::to_string(r) + "][" + std::to_string(c) +
                         "] is not a finite number");
      }
      out(r, c) = x.get<double>();
    }
  }
  return out;
}

}  // namespace

json matrix_to_json(const CMat& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array();
    json ii = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return json{{"d_rows", m.rows()}, {"d_cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

CMat matrix_from_json(const json& j) {
  const std::string where = "matrix";
  const Eigen::Index rows = positive_size(j, "d_rows", where);
  const Eigen::Index cols = positive_size(j, "d_cols", where);
  const Eigen::MatrixXd re = real_block(j, "re", rows, cols, where);
  const Eigen::MatrixXd im = real_block(j, "im", rows, cols, where);
  CMat m(rows, cols);
  m.real() = re;
  m.imag() = im;
  return m;
}

json kraus_to_json(const KrausChannel& e) {
  json ops = json::array();
  for (const auto& a : e.kraus()) ops.push_back(matrix_to_json(a));
  return json{{"d", e.dim()}, {"kraus", std::move(ops)}};
}

std::vector<CMat> kraus_operators_from_json(const json& j) {
  const std::string where = "kraus file";
  const Eigen::Index d = positive_size(j, "d", where);
  const json& list = field(j, "kraus", where);
  if (!list.is_array() || list.empty()) {
    throw InputError(where + ": field 'kraus' must be a non-empty array");
  }
  std::vector<CMat> ops;
  for (std::size_t k = 0; k < list.size(); ++k) {
    CMat a;
    try {
      a = matrix_from_json(list[k]);
    } catch (const InputError& err) {
      throw InputError("kraus[" + std::to_string(k) + "]: " + err.what());
    }
    if (a.rows() != d || a.cols() != d) {
      throw InputError("kraus[" + std::to_string(k) + "]: expected " + std::to_string(d) + "x" +
                       std::to_string(d) + " matrix (field 'd')");
    }
    ops.push_back(std::move(a));
  }
  return ops;
}

KrausChannel kraus_from_json(const json& j) { return KrausChannel(kraus_operators_from_json(j)); }

std::vector<CMat> unitaries_from_json(const json& j) {
  const json& list = j.is_array() ? j : field(j, "unitaries", "unitaries file");
  if (!list.is_array()) throw InputError("unitaries file: field 'unitaries' must be an array");
  std::vector<CMat> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    try {
      out.push_back(matrix_from_json(list[k]));
    } catch (const InputError& err) {
      throw InputError("unitaries[" + std::to_string(k) + "]: " + err.what());
    }
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw InputError("'" + path + "' is not valid JSON: " + err.what());
  }
}

}  // namespace cgp::io
