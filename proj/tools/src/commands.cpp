#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "antilinear/anti_orthogonal.hpp"
#include "antilinear/error.hpp"
#include "antilinear/functional_model.hpp"
#include "antilinear/io.hpp"

namespace antispec {

using namespace antilinear;
using io::Json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read input file " + path);
  return ss.str();
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

  void write(const std::string& text) const {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw IoError("cannot open output file " + path_);
    out << text;
    if (!out) throw IoError("cannot write output file " + path_);
  }

 private:
  std::string path_;
  std::ostream& fallback_;
};

// out.json -> out_<suffix>.csv next to it; nothing when writing to stdout.
std::string sibling(const std::string& output, const std::string& suffix) {
  if (output.empty()) return {};
  std::filesystem::path p(output);
  p.replace_filename(p.stem().string() + "_" + suffix + ".csv");
  return p.string();
}

void write_sibling(const std::string& output, const std::string& suffix, const std::string& text) {
  const std::string path = sibling(output, suffix);
  if (!path.empty()) Sink(path, std::cout).write(text);
}

Json load_json(const RunConfig& c) { return io::parse(read_file(c.input)); }

bool is_operator(const Json& j) { return j.is_object() && j.contains("matrix"); }
bool is_spectral_data(const Json& j) { return j.is_object() && j.contains("nodes"); }
bool is_jacobi(const Json& j) { return j.is_object() && j.contains("a") && j.contains("b"); }

double param_deviation(const JacobiParameters& x, const JacobiParameters& y) {
  double worst = 0.0;
  for (std::size_t k = 0; k < std::min(x.b.size(), y.b.size()); ++k)
    worst = std::max(worst, std::abs(x.b[k] - y.b[k]));
  for (std::size_t k = 0; k < std::min(x.a.size(), y.a.size()); ++k)
    worst = std::max(worst, std::abs(x.a[k] - y.a[k]));
  return worst;
}

std::string coefficient_csv(const JacobiParameters& p, const JacobiParameters& reference = {}) {
  std::ostringstream os;
  io::write_coefficient_csv(os, p, reference);
  return os.str();
}

std::string spectral_csv(const SpectralData& d) {
  std::ostringstream os;
  io::write_spectral_csv(os, d);
  return os.str();
}

Json model_report_json(const ModelReport& r) {
  Json j = Json::object();
  j["symmetry"] = r.symmetry;
  j["modulus"] = r.modulus;
  j["moments"] = r.moments;
  j["krylov_rank"] = r.krylov_rank;
  j["dimension"] = r.dimension;
  j["cyclic"] = r.cyclic();
  return j;
}

Json jacobi_result(const JacobiParameters& p, std::size_t count, const std::string& method,
                   const std::string& stop) {
  Json j = io::to_json(p);
  j["count"] = count;
  j["method"] = method;
  j["stop"] = stop;
  return j;
}

ExtractOptions extract_options(const RunConfig& c) {
  ExtractOptions opts;
  opts.tol_cluster = c.tol_cluster;
  return opts;
}

void cmd_extract(const RunConfig& c, std::ostream& out) {
  const AntiLinearOperator op = io::operator_from_json(load_json(c));
  const SpectralData data = extract_spectral_data(op, extract_options(c));
  if (c.format == Format::csv) {
    Sink(c.output, out).write(spectral_csv(data));
    return;
  }
  Sink(c.output, out).write(io::dump(io::to_json(data)));
  write_sibling(c.output, "classes", spectral_csv(data));
}

void cmd_tridiag(const RunConfig& c, std::ostream& out) {
  const Json input = load_json(c);
  Json result;
  JacobiParameters params;
  if (is_operator(input)) {
    const AntiLinearOperator op = io::operator_from_json(input);
    const auto steps = static_cast<std::size_t>(std::max(c.coeffs, 0));
    const LanczosResult lz = lanczos_tridiagonalize(op, steps);
    params = lz.params;
    result = jacobi_result(params, params.b.size(), "lanczos", lz.breakdown ? "krylov-exhausted" : "max-steps");
    const SpectralData data = extract_spectral_data(op, extract_options(c));
    const GramSchmidtResult gs = gram_schmidt(data, params.b.size(), c.tol_degeneracy);
    Json check = Json::object();
    check["count"] = gs.count;
    check["max_deviation"] = param_deviation(gs.params, params);
    result["gram_schmidt_check"] = std::move(check);
  } else if (is_spectral_data(input)) {
    const SpectralData data = io::spectral_data_from_json(input);
    const std::size_t n_max = c.coeffs > 0 ? static_cast<std::size_t>(c.coeffs) : model_dimension(data) + 1;
    const GramSchmidtResult gs = gram_schmidt(data, n_max, c.tol_degeneracy);
    params = gs.params;
    result = jacobi_result(params, gs.count, "gram-schmidt", gs.degenerate ? "degenerate-form" : "max-steps");
  } else {
    throw ValidationError("tridiag: input is neither an operator nor spectral data");
  }
  if (c.format == Format::csv) {
    Sink(c.output, out).write(coefficient_csv(params));
    return;
  }
  Sink(c.output, out).write(io::dump(result));
}

void cmd_model(const RunConfig& c, std::ostream& out) {
  const SpectralData data = io::spectral_data_from_json(load_json(c));
  const Model model = build_model(data);
  if (c.format == Format::csv) {
    const auto classes = classify(data);
    std::vector<std::vector<double>> rows;
    for (const auto& b : model.space.blocks)
      rows.push_back({static_cast<double>(b.node), data.nodes[b.node], data.weights[b.node],
                      static_cast<double>(b.offset), static_cast<double>(b.size)});
    std::ostringstream os;
    io::write_table_csv(os, {"node", "s", "w", "offset", "size"}, rows);
    Sink(c.output, out).write(os.str());
    return;
  }
  Json result = Json::object();
  result["operator"] = io::to_json(model.op);
  result["layout"] = io::layout_to_json(model.space);
  Json cyc = Json::array();
  for (Index i = 0; i < model.op.dim(); ++i) cyc.push_back(io::to_json(model.op.cyclic()[i]));
  result["cyclic"] = std::move(cyc);
  result["report"] = model_report_json(verify_model(data));
  Sink(c.output, out).write(io::dump(result));
}

void cmd_roundtrip(const RunConfig& c, std::ostream& out) {
  const AntiLinearOperator op = io::operator_from_json(load_json(c));
  const LanczosResult lz = lanczos_tridiagonalize(op);
  const SpectralData data = extract_spectral_data(op, extract_options(c));
  const GramSchmidtResult gs = gram_schmidt(data, model_dimension(data) + 1, c.tol_degeneracy);
  const LanczosResult via_model = lanczos_tridiagonalize(build_model(data).op);

  Json result = Json::object();
  result["dimension"] = op.dim();
  result["nodes"] = data.size();
  result["model_dimension"] = model_dimension(data);
  result["lanczos_count"] = lz.params.b.size();
  result["gram_schmidt_count"] = gs.count;
  result["model_lanczos_count"] = via_model.params.b.size();
  result["max_deviation_gram_schmidt"] = param_deviation(gs.params, lz.params);
  result["max_deviation_model"] = param_deviation(via_model.params, lz.params);
  result["operator_norm"] = operator_norm(op);
  result["symmetry_residual"] = check_symmetry(op);
  if (c.format == Format::csv) {
    Sink(c.output, out).write(coefficient_csv(gs.params, lz.params));
    return;
  }
  Sink(c.output, out).write(io::dump(result));
}

void cmd_example(const RunConfig& c, std::ostream& out) {
  const Complex w = c.omega;
  const auto disc = delta::discretize(w, c.quadrature, c.rule);
  const auto k = static_cast<std::size_t>(c.coeffs);
  const GramSchmidtResult gs = gram_schmidt(disc.data, k, c.tol_degeneracy);
  const JacobiParameters reference = delta::parameters(w, k);

  double a_err = 0.0, b_err = 0.0;
  for (double a : gs.params.a) a_err = std::max(a_err, std::abs(a - 1.0));
  for (std::size_t n = 1; n < gs.params.b.size(); ++n) b_err = std::max(b_err, std::abs(gs.params.b[n]));

  Complex first{};
  double second = 0.0;
  for (std::size_t j = 0; j < disc.data.size(); ++j) {
    first += disc.data.weights[j] * disc.data.nodes[j] * disc.data.phases[j];
    second += disc.data.weights[j] * disc.data.nodes[j] * disc.data.nodes[j];
  }

  Json result = Json::object();
  result["omega"] = io::to_json(w);
  result["quadrature_nodes"] = c.quadrature;
  result["rule"] = c.rule == delta::Quadrature::chebyshev ? "chebyshev" : "legendre";
  result["renormalization"] = disc.renormalization;
  if (const auto at = delta::atom(w)) {
    Json a = Json::object();
    a["location"] = at->location;
    a["weight"] = at->weight;
    a["phase"] = io::to_json(at->phase);
    result["atom"] = std::move(a);
  } else {
    result["atom"] = nullptr;
  }
  Json moments = Json::object();
  moments["first"] = io::to_json(first);
  moments["first_expected"] = io::to_json(w);
  moments["second"] = second;
  moments["second_expected"] = 1.0 + std::norm(w);
  result["moments"] = std::move(moments);
  result["coefficients"] = jacobi_result(gs.params, gs.count, "gram-schmidt",
                                         gs.degenerate ? "degenerate-form" : "max-steps");
  Json errors = Json::object();
  errors["b0"] = gs.params.b.empty() ? 0.0 : std::abs(gs.params.b[0] - w);
  errors["a"] = a_err;
  errors["b"] = b_err;
  result["errors"] = std::move(errors);

  Json resolvent = Json::array();
  for (const Complex xi : {Complex(0.3, 0.0), Complex(0.6, 0.0), Complex(0.0, 0.6)}) {
    Json entry = Json::object();
    entry["xi"] = io::to_json(xi);
    try {
      entry["closed_00"] = io::to_json(delta::resolvent_00(xi, w));
      entry["closed_01"] = io::to_json(delta::resolvent_01(xi, w));
    } catch (const NumericError&) {
      entry["closed_00"] = nullptr;
      entry["closed_01"] = nullptr;
    }
    entry["truncated_00"] = io::to_json(delta::truncated_resolvent(xi, w, c.size, 0, 0));
    entry["truncated_01"] = io::to_json(delta::truncated_resolvent(xi, w, c.size, 0, 1));
    resolvent.push_back(std::move(entry));
  }
  result["resolvent"] = std::move(resolvent);
  result["truncation_size"] = c.size;

  if (c.format == Format::csv) {
    Sink(c.output, out).write(coefficient_csv(gs.params, reference));
  } else {
    Sink(c.output, out).write(io::dump(result));
  }

  constexpr int kGrid = 200;
  std::vector<std::vector<double>> density_rows, phase_rows;
  for (int i = 0; i <= kGrid; ++i) {
    const double s = 2.0 * i / kGrid;
    density_rows.push_back({s, delta::density(s, w)});
    const Complex psi = delta::phase(s, w);
    phase_rows.push_back({s, psi.real(), psi.imag()});
  }
  std::ostringstream density_csv, phase_csv;
  io::write_table_csv(density_csv, {"s", "density"}, density_rows);
  io::write_table_csv(phase_csv, {"s", "re_psi", "im_psi"}, phase_rows);
  write_sibling(c.output, "density", density_csv.str());
  write_sibling(c.output, "phase", phase_csv.str());
  if (c.format == Format::json) write_sibling(c.output, "coefficients", coefficient_csv(gs.params, reference));
}

void cmd_polys(const RunConfig& c, std::ostream& out) {
  const Json input = load_json(c);
  std::vector<ComplexPolynomial> polys;
  Json result = Json::object();
  if (is_spectral_data(input)) {
    const SpectralData data = io::spectral_data_from_json(input);
    const std::size_t n_max = c.coeffs > 0 ? static_cast<std::size_t>(c.coeffs) : model_dimension(data);
    const GramSchmidtResult gs = gram_schmidt(data, n_max, c.tol_degeneracy);
    polys = gs.polys;
    result["source"] = "gram-schmidt";
    result["count"] = gs.count;
    result["orthonormality_residual"] = verify_anti_orthogonality(polys, data);
  } else if (is_jacobi(input)) {
    const JacobiParameters params = io::jacobi_from_json(input);
    const std::size_t n_max = c.coeffs > 0 ? static_cast<std::size_t>(c.coeffs) : params.a.size();
    polys = recurrence_generate(params, n_max);
    result["source"] = "recurrence";
    result["count"] = polys.size();
  } else {
    throw ValidationError("polys: input is neither spectral data nor Jacobi parameters");
  }
  if (c.format == Format::csv) {
    std::vector<std::vector<double>> rows;
    for (std::size_t n = 0; n < polys.size(); ++n)
      for (std::size_t k = 0; k < polys[n].coeffs().size(); ++k)
        rows.push_back({static_cast<double>(n), static_cast<double>(k), polys[n][k].real(), polys[n][k].imag()});
    std::ostringstream os;
    io::write_table_csv(os, {"n", "k", "re", "im"}, rows);
    Sink(c.output, out).write(os.str());
    return;
  }
  result["polynomials"] = io::to_json(polys);
  Sink(c.output, out).write(io::dump(result));
}

bool needs_input(const std::string& command) { return command != "example"; }

}  // namespace

Complex parse_omega(const std::string& text) {
  const auto comma = text.find(',');
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v))
      throw ValidationError("omega: cannot parse \"" + text + "\"; expected re or re,im");
    return v;
  };
  if (comma == std::string::npos) return {number(text), 0.0};
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

void check_config(const RunConfig& c) {
  static const std::vector<std::string> commands{"extract", "tridiag", "model", "roundtrip", "example", "polys"};
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
    throw ValidationError("unknown command \"" + c.command + "\"");
  if (needs_input(c.command) && c.input.empty()) throw ValidationError(c.command + ": --input is required");
  if (!c.input.empty() && !c.output.empty()) {
    std::error_code ec;
    const bool same = std::filesystem::weakly_canonical(c.input, ec) == std::filesystem::weakly_canonical(c.output, ec);
    if (same || c.input == c.output) throw ValidationError("input and output paths must differ");
  }
  if (c.size < 1 || c.size > kMaxSize)
    throw ValidationError("--size must lie in [1, " + std::to_string(kMaxSize) + "]");
  if (c.quadrature < 2 || c.quadrature > kMaxQuadrature)
    throw ValidationError("--quadrature must lie in [2, " + std::to_string(kMaxQuadrature) + "]");
  if (c.coeffs < 0 || (c.command == "example" && c.coeffs < 1))
    throw ValidationError("--coeffs must be positive");
  if (!(c.tol_cluster > 0.0)) throw ValidationError("--tol-cluster must be positive");
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    check_config(c);
    if (c.command == "extract") cmd_extract(c, out);
    else if (c.command == "tridiag") cmd_tridiag(c, out);
    else if (c.command == "model") cmd_model(c, out);
    else if (c.command == "roundtrip") cmd_roundtrip(c, out);
    else if (c.command == "example") cmd_example(c, out);
    else cmd_polys(c, out);
    return kSuccess;
  } catch (const ValidationError& e) {
    err << "antispec: invalid input: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const NumericError& e) {
    err << "antispec: numerical failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const IoError& e) {
    err << "antispec: I/O error: " << e.what() << '\n';
    return kIoFailure;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Spectral data, functional models and anti-orthogonal polynomials of symmetric anti-linear operators"};
  app.require_subcommand(1);

  RunConfig c;
  std::string omega = "0";
  std::string format = "json";
  std::string rule = "chebyshev";

  auto common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("--input,-i", c.input, "Input JSON file")->required();
    sub->add_option("--output,-o", c.output, "Output file (stdout when omitted)");
    sub->add_option("--format", format, "Primary output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--tol-cluster", c.tol_cluster, "Relative gap separating |B| eigenvalue clusters")
        ->capture_default_str();
    sub->add_option("--tol-degeneracy", c.tol_degeneracy,
                    "Gram-Schmidt stops once [r, r] falls below this; negative selects 1e-12 * (max node)^2")
        ->capture_default_str();
    sub->add_option("--coeffs", c.coeffs, "Number of coefficients or polynomials; 0 selects all")
        ->capture_default_str();
  };

  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {"extract", "Operator JSON -> spectral data JSON and classification CSV"},
      {"tridiag", "Operator (Lanczos) or spectral data (Gram-Schmidt) -> Jacobi parameters"},
      {"model", "Spectral data -> model operator, layout and verification report"},
      {"roundtrip", "Operator -> spectral data -> parameters, compared with direct Lanczos"},
      {"example", "Delta-potential example: quadrature pipeline against closed forms"},
      {"polys", "Spectral data or Jacobi parameters -> anti-orthogonal polynomials"},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    const bool example = std::string(e.name) == "example";
    common(sub, !example);
    if (example) {
      sub->add_option("--omega", omega, "Coupling as re or re,im")->capture_default_str();
      sub->add_option("--quadrature", c.quadrature, "Quadrature nodes M")->capture_default_str();
      sub->add_option("--size", c.size, "Truncation N for the resolvent check")->capture_default_str();
      sub->add_option("--rule", rule, "Quadrature rule")
          ->check(CLI::IsMember({"chebyshev", "legendre"}))
          ->capture_default_str();
    }
  }
  // tridiag and polys default to every available coefficient.
  c.coeffs = -1;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kValidationFailure;
  }

  for (CLI::App* sub : app.get_subcommands()) c.command = sub->get_name();
  if (c.coeffs < 0) c.coeffs = c.command == "example" ? 20 : 0;
  c.format = format == "csv" ? Format::csv : Format::json;
  c.rule = rule == "legendre" ? delta::Quadrature::legendre : delta::Quadrature::chebyshev;
  try {
    c.omega = parse_omega(omega);
  } catch (const ValidationError& e) {
    std::cerr << "antispec: invalid input: " << e.what() << '\n';
    return kValidationFailure;
  }
  return run(c, std::cout, std::cerr);
}

}  // namespace antispec
