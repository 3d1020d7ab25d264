#include "nrdl/model_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nrdl {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void write_matrix_rows(std::ostream& out, const Matrix& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << format_real(m(r, c));
    }
    out << '\n';
  }
}

double parse_double(const std::string& tok, const std::string& what) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (tok.empty() || end != begin + tok.size()) {
    throw data_error("model file: bad " + what + " value '" + tok + "'");
  }
  return v;
}

Matrix read_matrix_rows(std::istream& in, Index rows, Index cols,
                        const std::string& what) {
  Matrix m(rows, cols);
  std::string line;
  for (Index r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) {
      throw data_error("model file: truncated " + what + " at row " +
                       std::to_string(r));
    }
    std::stringstream ss(line);
    std::string tok;
    for (Index c = 0; c < cols; ++c) {
      if (!(ss >> tok)) {
        throw data_error("model file: short " + what + " row " +
                         std::to_string(r));
      }
      m(r, c) = parse_double(tok, what);
    }
  }
  return m;
}

}  // namespace

std::string model_to_string(const TrainedModel& model) {
  std::ostringstream out;
  out << "NRDL 1 " << model.dim() << ' ' << model.atoms() << ' '
      << model.classes() << '\n';
  write_matrix_rows(out, model.D);
  write_matrix_rows(out, model.W);
  const HyperParams& p = model.params;
  out << "lambda=" << format_real(p.lambda) << '\n';
  out << "alpha=" << format_real(p.alpha) << '\n';
  out << "beta=" << format_real(p.beta) << '\n';
  out << "gamma=" << format_real(p.gamma) << '\n';
  out << "mu=" << format_real(p.mu) << '\n';
  out << "tol=" << format_real(p.tol) << '\n';
  out << "max_iter=" << p.max_iter << '\n';
  out << "init_seed=" << p.init_seed << '\n';
  out << "jitter=" << format_real(p.jitter) << '\n';
  out << "legacy_p_update=" << (p.legacy_p_update ? 1 : 0) << '\n';
  out << "dict_size=" << p.dict_size << '\n';
  out << "iterations=" << model.iterations << '\n';
  out << "residual_p=" << format_real(model.residual_p) << '\n';
  out << "residual_j=" << format_real(model.residual_j) << '\n';
  out << "converged=" << (model.converged ? 1 : 0) << '\n';
  return out.str();
}

TrainedModel model_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  int version = 0;
  Index d = 0, k = 0, c = 0;
  in >> magic >> version >> d >> k >> c;
  if (!in || magic != "NRDL") {
    throw data_error("model file: bad header, expected 'NRDL 1 d K C'");
  }
  if (version != 1) {
    throw data_error("model file: unsupported version " +
                     std::to_string(version));
  }
  if (d < 1 || k < 1 || c < 1) {
    throw data_error("model file: bad dimensions in header");
  }
  std::string rest;
  std::getline(in, rest);  // finish the header line

  TrainedModel model;
  model.D = read_matrix_rows(in, d, k, "dictionary");
  model.W = read_matrix_rows(in, c, k, "classifier");

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw data_error("model file: bad metadata line '" + line + "'");
    }
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "lambda") model.params.lambda = parse_double(val, key);
    else if (key == "alpha") model.params.alpha = parse_double(val, key);
    else if (key == "beta") model.params.beta = parse_double(val, key);
    else if (key == "gamma") model.params.gamma = parse_double(val, key);
    else if (key == "mu") model.params.mu = parse_double(val, key);
    else if (key == "tol") model.params.tol = parse_double(val, key);
    else if (key == "max_iter") model.params.max_iter = std::stoi(val);
    else if (key == "init_seed") model.params.init_seed = std::stoull(val);
    else if (key == "jitter") model.params.jitter = parse_double(val, key);
    else if (key == "legacy_p_update") model.params.legacy_p_update = val != "0";
    else if (key == "dict_size") model.params.dict_size = std::stoll(val);
    else if (key == "iterations") model.iterations = std::stoi(val);
    else if (key == "residual_p") model.residual_p = parse_double(val, key);
    else if (key == "residual_j") model.residual_j = parse_double(val, key);
    else if (key == "converged") model.converged = val != "0";
    // Unknown keys are ignored for forward compatibility.
  }
  if (!all_finite(model.D) || !all_finite(model.W)) {
    throw data_error("model file: non-finite matrix entries");
  }
  return model;
}

void save_model(const TrainedModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write model file: " + path);
  out << model_to_string(model);
}

TrainedModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_string(buf.str());
}

void write_trace_csv(const ConvergenceTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write trace file: " + path);
  out << "iter,objective,residual_P,residual_J\n";
  for (const auto& rec : trace) {
    out << rec.iteration << ',' << format_real(rec.objective) << ','
        << format_real(rec.residual_p) << ',' << format_real(rec.residual_j)
        << '\n';
  }
}

ConvergenceTrace read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open trace file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw data_error("empty file: " + path);
  ConvergenceTrace trace;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string tok;
    IterationRecord rec;
    std::getline(ss, tok, ',');
    rec.iteration = std::stoi(tok);
    std::getline(ss, tok, ',');
    rec.objective = parse_double(tok, "objective");
    std::getline(ss, tok, ',');
    rec.residual_p = parse_double(tok, "residual_P");
    std::getline(ss, tok, ',');
    rec.residual_j = parse_double(tok, "residual_J");
    trace.push_back(rec);
  }
  return trace;
}

}  // namespace nrdl
