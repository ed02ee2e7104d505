#include "cohere/state_io.hpp"

#include <fstream>
#include <sstream>

namespace cohere {

namespace {

using nlohmann::json;

Eigen::MatrixXd real_block(const json& j, const char* key, int dim) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  const json& rows = j.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw Error(ErrorCode::ParseError, std::string("'") + key + "' must have dim rows");
  }
  Eigen::MatrixXd out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw Error(ErrorCode::ParseError, std::string("'") + key + "' rows must have dim entries");
    }
    for (int c = 0; c < dim; ++c) {
      if (!row[c].is_number()) {
        throw Error(ErrorCode::ParseError, std::string("'") + key + "' entries must be numbers");
      }
      out(r, c) = row[c].get<double>();
    }
  }
  return out;
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) {
    throw Error(ErrorCode::ParseError, "'dim' must be an integer");
  }
  const auto dim = j.at("dim").get<long long>();
  if (dim < 1 || dim > kMaxDim) {
    throw Error(ErrorCode::ParseError, "'dim' must be between 1 and 16");
  }
  const int d = static_cast<int>(dim);
  ComplexMatrix m(d, d);
  m.real() = real_block(j, "re", d);
  m.imag() = real_block(j, "im", d);
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << matrix_to_json(m).dump(2) << '\n';
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  return DensityMatrix::from_matrix(read_matrix_file(path));
}

MeasurementBasis read_basis_file(const std::filesystem::path& path) {
  return MeasurementBasis::from_matrix(read_matrix_file(path));
}

}  // namespace cohere
