#include "cxho/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cxho/cli/complex_literal.hpp"
#include "cxho/dynamics.hpp"
#include "cxho/maxprin.hpp"
#include "cxho/position.hpp"

namespace cxho::cli {

namespace {

std::string fr(double x) { return std::isfinite(x) ? format_real(x) : std::string("nan"); }

class Csv {
 public:
  explicit Csv(std::initializer_list<std::string> header) {
    bool first = true;
    for (const auto& h : header) {
      ss_ << (first ? "" : ",") << h;
      first = false;
    }
    ss_ << '\n';
  }
  Csv& cell(const std::string& s) {
    ss_ << (row_started_ ? "," : "") << s;
    row_started_ = true;
    return *this;
  }
  Csv& cell(double x) { return cell(fr(x)); }
  Csv& cell(int x) { return cell(std::to_string(x)); }
  Csv& cell(bool b) { return cell(std::string(b ? "true" : "false")); }
  Csv& cell(cplx z) { return cell(z.real()).cell(z.imag()); }
  void end_row() {
    ss_ << '\n';
    row_started_ = false;
  }
  std::string str() const { return ss_.str(); }

 private:
  std::ostringstream ss_;
  bool row_started_ = false;
};

ModelParams model(const RunConfig& c) { return validate(c.m, c.omega, c.hbar, c.eps, c.eps_prime); }

Json params_json(const RunConfig& c) {
  Json p = Json::object();
  p.set("m", Json::complex(c.m));
  p.set("omega", Json::complex(c.omega));
  p.set("hbar", c.hbar);
  p.set("eps", c.eps);
  p.set("eps_prime", c.eps_prime);
  return p;
}

Json vec_json(const StateVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push(Json::complex(v(i)));
  return a;
}

CommandOutput phase_diagram(const RunConfig& c) {
  const auto grid = phase_grid(c.grid);
  if (c.format == Format::Csv) {
    Csv csv({"theta_m", "theta_omega", "theory", "region", "potential", "normalizable",
             "excluded_corner"});
    for (const auto& p : grid) {
      csv.cell(p.theta_m).cell(p.theta_omega).cell(std::string(to_string(p.cls.theory)));
      csv.cell(p.cls.region).cell(std::string(to_string(p.cls.potential)));
      csv.cell(p.cls.normalizable).cell(p.cls.excluded_corner);
      csv.end_row();
    }
    return {csv.str(), kOk};
  }
  Json doc = Json::object();
  doc.set("command", "phase-diagram");
  doc.set("grid", c.grid);
  Json recs = Json::array();
  for (const auto& p : grid) {
    Json r = Json::object();
    r.set("theta_m", p.theta_m);
    r.set("theta_omega", p.theta_omega);
    r.set("theory", to_string(p.cls.theory));
    r.set("region", p.cls.region);
    r.set("potential", to_string(p.cls.potential));
    r.set("normalizable", p.cls.normalizable);
    r.set("excluded_corner", p.cls.excluded_corner);
    recs.push(std::move(r));
  }
  doc.set("records", std::move(recs));
  return {doc.dump(), kOk};
}

CommandOutput verify(const RunConfig& c) {
  const ModelParams p = model(c);
  VerifyOptions o;
  o.nmax = c.nmax;
  o.tol = c.tol;
  o.T = c.T;
  o.seed = c.seed;
  const auto checks = run_verify(p, o);
  bool all = true;
  for (const auto& k : checks) all = all && k.pass;

  if (c.format == Format::Csv) {
    Csv csv({"name", "defect", "tolerance", "pass", "skipped", "note"});
    for (const auto& k : checks) {
      csv.cell(k.name).cell(k.defect).cell(k.tolerance).cell(k.pass).cell(k.skipped);
      std::string note = k.note;
      for (char& ch : note)
        if (ch == ',' || ch == '\n') ch = ';';
      csv.cell(note);
      csv.end_row();
    }
    return {csv.str(), all ? kOk : kVerifyFailed};
  }
  Json doc = Json::object();
  doc.set("command", "verify");
  doc.set("params", params_json(c));
  doc.set("nmax", c.nmax);
  doc.set("tol", c.tol);
  doc.set("T", c.T);
  doc.set("seed", c.seed);
  Json arr = Json::array();
  for (const auto& k : checks) {
    Json r = Json::object();
    r.set("name", k.name);
    r.set("defect", k.defect);
    r.set("tolerance", k.tolerance);
    r.set("pass", k.pass);
    r.set("skipped", k.skipped);
    if (!k.note.empty()) r.set("note", k.note);
    arr.push(std::move(r));
  }
  doc.set("checks", std::move(arr));
  doc.set("all_pass", all);
  return {doc.dump(), all ? kOk : kVerifyFailed};
}

CommandOutput evolve(const RunConfig& c) {
  const ModelParams p = model(c);
  const FockRep rep = build(p, c.nmax);
  const auto sys = TwoStateSystem::make(coherent_coeffs(c.lambda_a, c.nmax),
                                        coherent_coeffs(c.lambda_b, c.nmax), c.T_A, c.T_B, rep);
  std::vector<double> times(c.steps + 1);
  for (int i = 0; i <= c.steps; ++i)
    times[i] = i == c.steps ? c.T_B : c.T_A + (c.T_B - c.T_A) * i / c.steps;
  std::vector<double> skipped;
  const auto samples = trajectory(sys, times, &skipped);

  Csv csv({"t", "amplitude_re", "amplitude_im", "q_new_re", "q_new_im", "p_new_re", "p_new_im",
           "q_Q_re", "q_Q_im", "p_Q_re", "p_Q_im", "h_Qh_re", "h_Qh_im", "status"});
  Json doc = Json::object();
  doc.set("command", "evolve");
  doc.set("params", params_json(c));
  doc.set("nmax", c.nmax);
  doc.set("lambda_a", Json::complex(c.lambda_a));
  doc.set("lambda_b", Json::complex(c.lambda_b));
  doc.set("T_A", c.T_A);
  doc.set("T_B", c.T_B);
  Json rows = Json::array();

  std::size_t k = 0;
  for (double t : times) {
    const bool ok = k < samples.size() && samples[k].t == t;
    Json r = Json::object();
    r.set("t", t);
    csv.cell(t);
    if (ok) {
      const auto& s = samples[k++];
      csv.cell(s.amplitude).cell(s.q_new).cell(s.p_new).cell(s.q_Q).cell(s.p_Q).cell(s.h_Qh);
      csv.cell(std::string("ok"));
      r.set("amplitude", Json::complex(s.amplitude));
      r.set("q_new", Json::complex(s.q_new));
      r.set("p_new", Json::complex(s.p_new));
      r.set("q_Q", Json::complex(s.q_Q));
      r.set("p_Q", Json::complex(s.p_Q));
      r.set("h_Qh", Json::complex(s.h_Qh));
      r.set("status", "ok");
    } else {
      const cplx amp = sys.amplitude_at(t);
      csv.cell(amp);
      for (int i = 0; i < 10; ++i) csv.cell(std::string(""));
      csv.cell(std::string("vanishing_overlap"));
      r.set("amplitude", Json::complex(amp));
      r.set("status", "vanishing_overlap");
    }
    csv.end_row();
    rows.push(std::move(r));
  }
  doc.set("samples", std::move(rows));
  return {c.format == Format::Csv ? csv.str() : doc.dump(), kOk};
}

CommandOutput maximize_cmd(const RunConfig& c) {
  if (!(c.T > 0)) throw ConfigError("--T must be positive");
  const ModelParams p = model(c);
  MaximizeOptions o;
  o.tol = c.tol;
  o.max_iters = c.max_iters;
  o.seed = c.seed;
  const auto r = maximize(c.T, p, c.nmax, o);

  if (c.format == Format::Csv) {
    Csv csv({"n", "a_re", "a_im", "b_re", "b_im"});
    for (int n = 0; n < c.nmax; ++n) {
      csv.cell(n).cell(r.a(n)).cell(r.b(n));
      csv.end_row();
    }
    return {csv.str(), kOk};
  }
  Json doc = Json::object();
  doc.set("command", "maximize");
  doc.set("params", params_json(c));
  doc.set("T", c.T);
  doc.set("nmax", c.nmax);
  doc.set("tol", c.tol);
  doc.set("seed", r.seed);
  doc.set("amplitude", Json::complex(r.amplitude));
  doc.set("amplitude_abs", r.amplitude_abs);
  doc.set("analytic_max", r.analytic_max);
  doc.set("ground_overlap", r.ground_overlap);
  doc.set("degenerate", r.degenerate);
  doc.set("iterations", r.iterations);
  doc.set("converged", r.converged);
  if (p.normalizable()) {
    const auto wv = max_weak_values(r, build(p, c.nmax), 0.0);
    Json w = Json::object();
    w.set("q_Q", Json::complex(wv.q_Q));
    w.set("p_Q", Json::complex(wv.p_Q));
    w.set("h_Qh", Json::complex(wv.h_Qh));
    doc.set("weak_values", std::move(w));
  }
  doc.set("a", vec_json(r.a));
  doc.set("b", vec_json(r.b));
  return {doc.dump(), kOk};
}

CommandOutput wavefunction(const RunConfig& c) {
  const ModelParams p = model(c);
  const cplx dir = std::polar(1.0, c.angle);
  std::optional<GaussPoly> gp;
  if (c.kind == "finite-eps") gp = excited_eps(c.basis, c.n, p);

  Csv csv({"q_re", "q_im", "psi_re", "psi_im"});
  Json doc = Json::object();
  doc.set("command", "wavefunction");
  doc.set("params", params_json(c));
  doc.set("kind", c.kind);
  doc.set("basis", c.basis);
  doc.set("n", c.n);
  doc.set("angle", c.angle);
  Json rows = Json::array();
  for (int i = 0; i < c.points; ++i) {
    const double s = c.points == 1 ? 0.0 : -c.q_max + 2.0 * c.q_max * i / (c.points - 1);
    const cplx q = s * dir;
    cplx psi;
    if (c.kind == "eigen")
      psi = eigenfunction(c.basis, c.n, q, p);
    else if (c.kind == "coherent")
      psi = coherent_wavefunction(c.basis, c.lambda, q, p);
    else
      psi = (*gp)(q);
    csv.cell(q).cell(psi);
    csv.end_row();
    Json r = Json::object();
    r.set("q", Json::complex(q));
    r.set("psi", Json::complex(psi));
    rows.push(std::move(r));
  }
  doc.set("samples", std::move(rows));
  return {c.format == Format::Csv ? csv.str() : doc.dump(), kOk};
}

}  // namespace

CommandOutput execute(const RunConfig& c) {
  if (c.command == "phase-diagram") return phase_diagram(c);
  if (c.command == "verify") return verify(c);
  if (c.command == "evolve") return evolve(c);
  if (c.command == "maximize") return maximize_cmd(c);
  if (c.command == "wavefunction") return wavefunction(c);
  throw ConfigError("unknown command '" + c.command + "'");
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CommandOutput res;
  try {
    res = execute(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  if (config.output == "-") {
    out << res.text;
    out.flush();
    if (!out) {
      err << "error: failed writing output\n";
      return kIoError;
    }
  } else {
    std::ofstream f(config.output, std::ios::binary | std::ios::trunc);
    if (!f) {
      err << "error: cannot open output file '" << config.output << "'\n";
      return kIoError;
    }
    f << res.text;
    f.close();
    if (!f) {
      err << "error: failed writing '" << config.output << "'\n";
      return kIoError;
    }
  }
  if (res.exit_code == kVerifyFailed) err << "verify: one or more properties failed\n";
  return res.exit_code;
}

}  // namespace cxho::cli
