#include "liesq/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace liesq {

namespace {

using nlohmann::json;

Int json_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

Rat json_rat(const json& num, const json& den) {
  Int d = json_int(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  return Rat(json_int(num), d);
}

json int_out(const Int& v) {
  // Emit as a JSON integer when it fits, else as a decimal string.
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

}  // namespace

MatrixRep load_matrix_rep(std::istream& in) {
  json j = json::parse(in);
  if (!j.is_object()) throw std::invalid_argument("top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("missing integer field \"dim\"");
  const int d = j["dim"].get<int>();
  if (d < 1) throw std::invalid_argument("\"dim\" must be positive");
  if (!j.contains("scalars") || !j["scalars"].is_string())
    throw std::invalid_argument("missing string field \"scalars\"");
  const std::string kind = j["scalars"].get<std::string>();
  const bool exact = kind == "gaussian-rational";
  if (!exact && kind != "float")
    throw std::invalid_argument("\"scalars\" must be \"gaussian-rational\" or \"float\"");
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw std::invalid_argument("\"generators\" must be a nonempty array");

  MatrixRep r;
  r.dim = d;
  for (const json& g : j["generators"]) {
    if (!g.is_array() || static_cast<int>(g.size()) != d)
      throw std::invalid_argument("each generator must have dim rows");
    GQMatrix em(d, d);
    Eigen::MatrixXcd fm(d, d);
    for (int i = 0; i < d; ++i) {
      const json& row = g[i];
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw std::invalid_argument("each row must have dim entries");
      for (int c = 0; c < d; ++c) {
        const json& e = row[c];
        if (!e.is_array())
          throw std::invalid_argument("each entry must be an array");
        if (exact) {
          if (e.size() != 4)
            throw std::invalid_argument(
                "gaussian-rational entries are [re_num, re_den, im_num, im_den]");
          em(i, c) = GQ(json_rat(e[0], e[1]), json_rat(e[2], e[3]));
        } else {
          if (e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw std::invalid_argument("float entries are [re, im]");
          fm(i, c) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
        }
      }
    }
    if (exact)
      r.exact.push_back(std::move(em));
    else
      r.flt.push_back(std::move(fm));
  }
  return r;
}

MatrixRep load_matrix_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return load_matrix_rep(in);
}

std::string save_matrix_rep(const MatrixRep& r) {
  json j;
  j["dim"] = r.dim;
  j["scalars"] = r.is_exact() ? "gaussian-rational" : "float";
  json gens = json::array();
  if (r.is_exact()) {
    for (const auto& g : r.exact) {
      json m = json::array();
      for (int i = 0; i < g.rows; ++i) {
        json row = json::array();
        for (int c = 0; c < g.cols; ++c) {
          const GQ& e = g(i, c);
          row.push_back(json::array({int_out(numerator(e.re)), int_out(denominator(e.re)),
                                     int_out(numerator(e.im)), int_out(denominator(e.im))}));
        }
        m.push_back(std::move(row));
      }
      gens.push_back(std::move(m));
    }
  } else {
    for (const auto& g : r.flt) {
      json m = json::array();
      for (int i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < g.cols(); ++c)
          row.push_back(json::array({g(i, c).real(), g(i, c).imag()}));
        m.push_back(std::move(row));
      }
      gens.push_back(std::move(m));
    }
  }
  j["generators"] = std::move(gens);
  return j.dump();
}

}  // namespace liesq
