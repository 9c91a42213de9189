#include "lauricella/serialize.hpp"

#include <sstream>

#include "json.hpp"
#include "lauricella/errors.hpp"

namespace lauricella {

using Json = nlohmann::ordered_json;

LabeledMatrix labeled(std::string name, const RepMatrix& m) {
  LabeledMatrix out{std::move(name), to_string(m.basis), m.m, {}, m.entries};
  for (const SubsetIndex& s : basis(m.m)) out.labels.push_back(s.to_string());
  return out;
}

LabeledMatrix labeled(std::string name, const LambdaMatrix& m) {
  LabeledMatrix out{std::move(name), "lambda", m.m, {}, m.entries};
  for (const SubsetIndex& s : m.index) out.labels.push_back(s.to_string());
  return out;
}

namespace {

Json matrix_object(const LabeledMatrix& m) {
  Json j;
  j["name"] = m.name;
  j["m"] = m.m;
  j["basis"] = m.basis;
  j["order"] = m.labels;
  j["rows"] = m.entries.rows();
  j["cols"] = m.entries.cols();
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(m.entries(r, c).to_string());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

std::string rational_latex(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  const bool neg = sgn(q) < 0;
  return std::string(neg ? "-" : "") + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" +
         q.get_den().get_str() + "}";
}

Json parse_or_throw(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Scalar scalar_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw ParseError(std::string("field \"") + key + "\" must be a string or an integer");
}

std::vector<Scalar> scalar_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("field \"") + key + "\" must be an array");
  }
  std::vector<Scalar> out;
  for (const auto& v : j.at(key)) {
    if (v.is_string()) {
      out.push_back(Scalar::parse(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      out.emplace_back(v.get<long>());
    } else {
      throw ParseError(std::string("entries of \"") + key + "\" must be strings or integers");
    }
  }
  return out;
}

}  // namespace

std::string matrix_json(const LabeledMatrix& m, int indent) { return matrix_object(m).dump(indent); }

std::string matrices_json(const std::vector<LabeledMatrix>& ms, int indent) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(matrix_object(m));
  return arr.dump(indent);
}

Matrix matrix_from_json(const std::string& text) {
  const Json j = parse_or_throw(text);
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw ParseError("matrix JSON needs an \"entries\" array");
  }
  const Json& rows = j.at("entries");
  const std::size_t n = rows.size();
  const std::size_t k = n == 0 ? 0 : rows[0].size();
  Matrix out(n, k);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != k) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < k; ++c) out(r, c) = Scalar::parse(rows[r][c].get<std::string>());
  }
  return out;
}

std::string scalar_latex(const Scalar& s) {
  if (!s.is_exact()) {
    std::string t = s.to_string();
    const auto at = t.find('@');
    if (at != std::string::npos) t.resize(at);
    return t;
  }
  const ExactComplex& z = s.exact();
  if (sgn(z.im) == 0) return rational_latex(z.re);
  std::string im;
  const mpq_class mag = abs(z.im);
  im = (mag == 1 ? std::string() : rational_latex(mag) + " ") + "i";
  if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + im;
  return rational_latex(z.re) + (sgn(z.im) < 0 ? " - " : " + ") + im;
}

std::string matrix_latex(const LabeledMatrix& m) {
  std::ostringstream os;
  os << "% basis " << m.basis << ", order";
  for (const auto& l : m.labels) os << ' ' << l;
  os << '\n' << m.name << " = \\begin{pmatrix}\n";
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    os << "  ";
    for (std::size_t c = 0; c < m.entries.cols(); ++c) {
      if (c) os << " & ";
      os << scalar_latex(m.entries(r, c));
    }
    os << (r + 1 < m.entries.rows() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

std::string matrix_csv(const LabeledMatrix& m, mpfr_prec_t precision) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    for (std::size_t c = 0; c < m.entries.cols(); ++c) {
      if (c) os << ',';
      const FloatComplex f = m.entries(r, c).to_float(precision);
      const std::string im = f.im.to_string();
      os << f.re.to_string() << (im.front() == '-' ? "" : "+") << im << "*i";
    }
    os << '\n';
  }
  return os.str();
}

std::string series_json(const TruncatedSeries& s, int indent) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < s.indices.size(); ++i) {
    Json j;
    j["multi_index"] = s.indices[i];
    j["coefficient"] = s.coefficients[i].to_string();
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

ParamPoint parse_param_point_json(const std::string& text) {
  const Json j = parse_or_throw(text);
  if (!j.is_object()) throw ParseError("parameter file must hold a JSON object");
  try {
    return ParamPoint(scalar_field(j, "alpha"), scalar_field(j, "beta"), scalar_list(j, "gamma"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SeriesParams parse_series_params_json(const std::string& text, std::vector<Scalar>* x) {
  const Json j = parse_or_throw(text);
  if (!j.is_object()) throw ParseError("parameter file must hold a JSON object");
  SeriesParams sp;
  try {
    sp = SeriesParams(scalar_field(j, "a"), scalar_field(j, "b"), scalar_list(j, "c"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (x != nullptr && j.contains("x")) {
    *x = scalar_list(j, "x");
    if (static_cast<int>(x->size()) != sp.m) throw ParseError("\"x\" must have as many entries as \"c\"");
  }
  return sp;
}

std::string param_point_json(const ParamPoint& p, int indent) {
  Json j;
  j["alpha"] = p.alpha.to_string();
  j["beta"] = p.beta.to_string();
  Json g = Json::array();
  for (const auto& v : p.gamma) g.push_back(v.to_string());
  j["gamma"] = std::move(g);
  return j.dump(indent);
}

}  // namespace lauricella
