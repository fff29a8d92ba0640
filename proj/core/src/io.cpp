#include "antilinear/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "antilinear/error.hpp"

namespace antilinear::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ValidationError(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::vector<double> numbers(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

std::vector<Complex> complexes(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

void write_string(std::ostream& os, const std::string& s) {
  os << Json(s).dump();
}

void write_value(std::ostream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        write_string(os, key);
        os << (indent > 0 ? ": " : ":");
        write_value(os, value, indent, depth + 1);
      }
      os << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line; nested containers break.
      bool flat = true;
      for (const auto& x : j) flat = flat && x.is_primitive();
      if (flat) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << (indent > 0 ? ", " : ",");
          write_value(os, j[i], indent, depth + 1);
        }
        os << ']';
        return;
      }
      os << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',' << nl;
        os << pad;
        write_value(os, j[i], indent, depth + 1);
      }
      os << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return std::signbit(x) ? "-0.0" : "0.0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError("complex numbers must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const ComplexPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

ComplexPolynomial polynomial_from_json(const Json& j) {
  return ComplexPolynomial(complexes(j, "polynomial"));
}

Json to_json(const std::vector<ComplexPolynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(to_json(p));
  return out;
}

std::vector<ComplexPolynomial> polynomials_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("polynomial batch: expected an array");
  std::vector<ComplexPolynomial> out;
  for (const auto& p : j) out.push_back(polynomial_from_json(p));
  return out;
}

Json to_json(const SpectralData& data) {
  Json out = Json::object();
  out["nodes"] = data.nodes;
  out["weights"] = data.weights;
  Json phases = Json::array();
  for (const auto& z : data.phases) phases.push_back(to_json(z));
  out["phases"] = std::move(phases);
  return out;
}

SpectralData spectral_data_from_json(const Json& j) {
  SpectralData d;
  d.nodes = numbers(field(j, "nodes"), "nodes");
  d.weights = numbers(field(j, "weights"), "weights");
  d.phases = complexes(field(j, "phases"), "phases");
  return d;
}

Json to_json(const AntiLinearOperator& op) {
  Json rows = Json::array();
  for (Index i = 0; i < op.dim(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < op.dim(); ++k) row.push_back(to_json(op.matrix()(i, k)));
    rows.push_back(std::move(row));
  }
  Json out = Json::object();
  out["matrix"] = std::move(rows);
  const CVector& c = op.cyclic();
  const bool is_e0 = c[0] == Complex{1.0, 0.0} && c.tail(c.size() - 1).isZero(0.0);
  if (!is_e0) {
    Json cyc = Json::array();
    for (Index i = 0; i < c.size(); ++i) cyc.push_back(to_json(c[i]));
    out["cyclic"] = std::move(cyc);
  }
  return out;
}

AntiLinearOperator operator_from_json(const Json& j) {
  const Json& rows = field(j, "matrix");
  if (!rows.is_array() || rows.empty()) throw ValidationError("matrix: expected a non-empty array of rows");
  const auto n = static_cast<Index>(rows.size());
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto row = complexes(rows[static_cast<std::size_t>(i)], "matrix row");
    if (static_cast<Index>(row.size()) != n) throw ValidationError("matrix: rows must have length n");
    for (Index k = 0; k < n; ++k) m(i, k) = row[static_cast<std::size_t>(k)];
  }
  if (!j.contains("cyclic")) return AntiLinearOperator(std::move(m));
  const auto c = complexes(j.at("cyclic"), "cyclic");
  return AntiLinearOperator(std::move(m), Eigen::Map<const CVector>(c.data(), static_cast<Index>(c.size())));
}

Json to_json(const JacobiParameters& params) {
  Json out = Json::object();
  out["a"] = params.a;
  Json b = Json::array();
  for (const auto& z : params.b) b.push_back(to_json(z));
  out["b"] = std::move(b);
  return out;
}

JacobiParameters jacobi_from_json(const Json& j) {
  JacobiParameters p;
  p.a = numbers(field(j, "a"), "a");
  p.b = complexes(field(j, "b"), "b");
  return p;
}

Json layout_to_json(const ModelSpace& space) {
  Json blocks = Json::array();
  for (const auto& blk : space.blocks) {
    Json b = Json::object();
    b["node"] = blk.node;
    b["size"] = blk.size;
    blocks.push_back(std::move(b));
  }
  Json out = Json::object();
  out["blocks"] = std::move(blocks);
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

void write(std::ostream& os, const Json& j, int indent) {
  write_value(os, j, indent, 0);
  os << '\n';
}

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent);
  return os.str();
}

void write_spectral_csv(std::ostream& os, const SpectralData& data, double tol_phase) {
  const auto classes = classify(data, tol_phase);
  os << "s,w,re_psi,im_psi,class\n";
  for (std::size_t j = 0; j < data.size(); ++j)
    os << format_double(data.nodes[j]) << ',' << format_double(data.weights[j]) << ','
       << format_double(data.phases[j].real()) << ',' << format_double(data.phases[j].imag()) << ','
       << to_string(classes[j]) << '\n';
}

void write_coefficient_csv(std::ostream& os, const JacobiParameters& params,
                           const JacobiParameters& reference) {
  const bool with_error = !reference.b.empty();
  os << "n,a,re_b,im_b" << (with_error ? ",error" : "") << '\n';
  for (std::size_t n = 0; n < params.b.size(); ++n) {
    const bool has_a = n < params.a.size();
    os << n << ',' << (has_a ? format_double(params.a[n]) : "") << ','
       << format_double(params.b[n].real()) << ',' << format_double(params.b[n].imag());
    if (with_error) {
      double err = n < reference.b.size() ? std::abs(params.b[n] - reference.b[n]) : 0.0;
      if (has_a && n < reference.a.size()) err = std::max(err, std::abs(params.a[n] - reference.a[n]));
      os << ',' << format_double(err);
    }
    os << '\n';
  }
}

void write_table_csv(std::ostream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

}  // namespace antilinear::io
