// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "smaxdg/errors.hpp"
#include "smaxdg/lab.hpp"
#include "smaxdg/parallel.hpp"
#include "smaxdg/qwiener.hpp"

namespace smaxdg::cli
{

namespace
{

using json = nlohmann::json;

// Raised for invalid configuration values; reported with exit code 1.
class ConfigError : public std::runtime_error
{
public:
  explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

enum class Type
{
  INT,
  UINT64,
  DOUBLE,
  BOOL,
  STRING,
  INT_LIST,
  DOUBLE_LIST
};

struct Key
{
  std::string name;
  Type type;
  json fallback;
  std::string help;
};

struct Command
{
  std::string name;
  std::string description;
  std::vector<Key> keys;
};

std::vector<Key> CommonKeys(std::uint64_t seed = 7)
{
  return {{"seed", Type::UINT64, seed, "base seed; path i uses stream (seed, i)"},
          {"threads", Type::INT, 0, "worker threads (0: SMAXDG_THREADS or hardware)"},
          {"out", Type::STRING, ".", "output directory"}};
}

std::vector<Command> Commands()
{
  std::vector<Command> cmds;
  auto add = [&](Command c)
  {
    for (auto &k : CommonKeys())
    {
      c.keys.push_back(k);
    }
    cmds.push_back(std::move(c));
  };
  add({"convergence-1d",
       "L2 errors and orders of the 1D scheme against the exact solution",
       {{"k", Type::INT, 1, "polynomial degree"},
        {"alpha", Type::DOUBLE, 0.5, "flux parameter"},
        {"nx", Type::INT_LIST, json::array({20, 40, 80, 160}), "mesh sizes"},
        {"nt_ratio", Type::DOUBLE, 30.0, "Nt / Nx"},
        {"t_final", Type::DOUBLE, 3.0, "final time"},
        {"stepper", Type::STRING, "prk2", "prk2 | symplectic-euler | taylor2"},
        {"deterministic", Type::BOOL, false, "drop the noise (lambda = 0, B = 0)"},
        {"projection", Type::STRING, "radau", "initial projection: radau | l2"}}});
  add({"convergence-2d",
       "L2 errors and orders of the 2D scheme against the exact solution",
       {{"k", Type::INT, 1, "polynomial degree"},
        {"alpha1", Type::DOUBLE, 0.5, "x flux parameter"},
        {"alpha2", Type::DOUBLE, 0.5, "y flux parameter"},
        {"nx", Type::INT_LIST, json::array({20, 40, 80}), "mesh sizes (Nx = Ny)"},
        {"nt_ratio", Type::DOUBLE, 10.0, "Nt / Nx"},
        {"t_final", Type::DOUBLE, 1.0, "final time"},
        {"stepper", Type::STRING, "prk2", "prk2 | symplectic-euler | taylor2"},
        {"deterministic", Type::BOOL, false, "drop the noise (lambda = 0, B = 0)"},
        {"projection", Type::STRING, "radau", "initial projection: radau | l2"}}});
  add({"energy-1d",
       "averaged discrete energy of the 1D scheme and its least-squares slope",
       {{"k", Type::INT, 1, "polynomial degree"},
        {"alpha", Type::DOUBLE, 0.5, "flux parameter"},
        {"nx", Type::INT, 80, "mesh size"},
        {"t_final", Type::DOUBLE, 3.0, "final time"},
        {"dt", Type::DOUBLE, 0.0075, "time step (must divide t_final)"},
        {"lambda", Type::DOUBLE_LIST, json::array({1.0, 1.0}), "lambda1[,lambda2]"},
        {"noise", Type::STRING, "standard", "standard | sine:<M>"},
        {"stepper", Type::STRING, "prk2", "prk2 | symplectic-euler | taylor2"},
        {"samples", Type::INT, 1000, "number of sample paths"},
        {"max_points", Type::INT, 4000, "maximum recorded time points"}}});
  add({"energy-2d",
       "averaged discrete energy of the 2D scheme and its least-squares slope",
       {{"k", Type::INT, 1, "polynomial degree"},
        {"alpha1", Type::DOUBLE, 0.5, "x flux parameter"},
        {"alpha2", Type::DOUBLE, 0.5, "y flux parameter"},
        {"nx", Type::INT, 80, "mesh size in x"},
        {"ny", Type::INT, 80, "mesh size in y"},
        {"t_final", Type::DOUBLE, 1.0, "final time"},
        {"dt", Type::DOUBLE, 0.0025, "time step (must divide t_final)"},
        {"lambda", Type::DOUBLE_LIST, json::array({0.5, 0.5}), "lambda1[,lambda2]"},
        {"noise", Type::STRING, "standard", "standard | sine-product:<M>"},
        {"stepper", Type::STRING, "prk2", "prk2 | symplectic-euler | taylor2"},
        {"samples", Type::INT, 500, "number of sample paths"},
        {"max_points", Type::INT, 4000, "maximum recorded time points"}}});
  add({"temporal-order",
       "mean-square order in time against a fine second-order reference",
       {{"k", Type::INT, 1, "polynomial degree"},
        {"alpha", Type::DOUBLE, 0.5, "flux parameter"},
        {"nx", Type::INT, 16, "mesh size"},
        {"lambda", Type::DOUBLE_LIST, json::array({1.0, 1.0}), "lambda1[,lambda2]"},
        {"noise", Type::STRING, "sine:4", "standard | sine:<M>"},
        {"t_final", Type::DOUBLE, 1.0, "final time"},
        {"nt", Type::INT_LIST, json::array({20, 40, 80, 160, 320}), "step counts"},
        {"ref_factor", Type::INT, 8, "reference refinement over the finest step"},
        {"stepper", Type::STRING, "prk2", "prk2 | symplectic-euler | taylor2"},
        {"paths", Type::INT, 200, "number of coupled sample paths"}}});
  add({"msp-check",
       "multi-symplectic identities on random closed states",
       {{"alpha", Type::DOUBLE, 0.5, "n - m"},
        {"trials", Type::INT, 100, "random trials"},
        {"nx", Type::INT, 8, "mesh size"},
        {"k", Type::INT, 2, "polynomial degree"},
        {"random_split", Type::BOOL, true, "draw m at random per trial"}}});
  add({"showcase-2d",
       "colored-noise runs on [0,2/3]x[0,1/2]; S and T sampled on a grid",
       {{"k", Type::INT, 1, "polynomial degree"},
        {"nx", Type::INT, 80, "mesh size in x"},
        {"ny", Type::INT, 80, "mesh size in y"},
        {"m_max", Type::INT, 50, "sine modes per direction"},
        {"t_final", Type::DOUBLE, 1.0, "final time"},
        {"nt", Type::INT, 1200, "time steps"},
        {"lambdas", Type::DOUBLE_LIST, json::array({0.1, 0.2, 0.3, 0.5, 0.7, 1.0}),
         "noise sizes"},
        {"grid_x", Type::INT, 81, "output grid points in x"},
        {"grid_y", Type::INT, 61, "output grid points in y"},
        {"stepper", Type::STRING, "prk2", "prk2 | symplectic-euler | taylor2"}}});
  add({"noise-moments",
       "sample moments of (dB, J) against their exact values",
       {{"tau", Type::DOUBLE, 0.01, "step size"},
        {"samples", Type::INT, 1000000, "number of draws"}}});
  return cmds;
}

std::string TypeName(Type t)
{
  switch (t)
  {
    case Type::INT:
      return "integer";
    case Type::UINT64:
      return "non-negative integer";
    case Type::DOUBLE:
      return "number";
    case Type::BOOL:
      return "boolean";
    case Type::STRING:
      return "string";
    case Type::INT_LIST:
      return "list of integers";
    case Type::DOUBLE_LIST:
      return "list of numbers";
  }
  return "value";
}

std::vector<std::string> SplitList(const std::string &s)
{
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
  {
    parts.push_back(item);
  }
  return parts;
}

// Converts a command-line string to the key's JSON type.
json FromString(const Key &key, const std::string &text)
{
  auto fail = [&]() -> json
  { throw ConfigError("field '" + key.name + "': expected " + TypeName(key.type) + ", got '" +
                      text + "'"); };
  try
  {
    std::size_t used = 0;
    switch (key.type)
    {
      case Type::INT:
      {
        const int v = std::stoi(text, &used);
        return (used == text.size()) ? json(v) : fail();
      }
      case Type::UINT64:
      {
        if (!text.empty() && text[0] == '-')
        {
          return fail();
        }
        const unsigned long long v = std::stoull(text, &used);
        return (used == text.size()) ? json(std::uint64_t(v)) : fail();
      }
      case Type::DOUBLE:
      {
        const double v = std::stod(text, &used);
        return (used == text.size()) ? json(v) : fail();
      }
      case Type::BOOL:
        if (text == "true" || text == "1")
        {
          return true;
        }
        if (text == "false" || text == "0")
        {
          return false;
        }
        return fail();
      case Type::STRING:
        return text;
      case Type::INT_LIST:
      case Type::DOUBLE_LIST:
      {
        json arr = json::array();
        for (const auto &p : SplitList(text))
        {
          const Key scalar{key.name, key.type == Type::INT_LIST ? Type::INT : Type::DOUBLE,
                           nullptr, ""};
          arr.push_back(FromString(scalar, p));
        }
        return arr.empty() ? fail() : arr;
      }
    }
  }
  catch (const ConfigError &)
  {
    throw;
  }
  catch (const std::exception &)
  {
    return fail();
  }
  return fail();
}

// Checks (and normalizes) a JSON value from a config file against the key's type.
json Normalize(const Key &key, const json &v)
{
  auto fail = [&]() -> json
  { throw ConfigError("field '" + key.name + "': expected " + TypeName(key.type) + ", got " +
                      v.dump()); };
  switch (key.type)
  {
    case Type::INT:
      return v.is_number_integer() ? v : fail();
    case Type::UINT64:
      return v.is_number_unsigned() ? v : fail();
    case Type::DOUBLE:
      return v.is_number() ? json(v.get<double>()) : fail();
    case Type::BOOL:
      return v.is_boolean() ? v : fail();
    case Type::STRING:
      return v.is_string() ? v : fail();
    case Type::INT_LIST:
    case Type::DOUBLE_LIST:
    {
      const json arr = v.is_array() ? v : json::array({v});
      json out = json::array();
      const Key scalar{key.name, key.type == Type::INT_LIST ? Type::INT : Type::DOUBLE, nullptr,
                       ""};
      for (const auto &e : arr)
      {
        out.push_back(Normalize(scalar, e));
      }
      return out.empty() ? fail() : out;
    }
  }
  return fail();
}

//
// Resolved configuration: defaults, then the JSON file, then command-line flags.
//
class Config
{
public:
  explicit Config(json values) : values_(std::move(values)) {}

  const json &Values() const { return values_; }
  int Int(const std::string &k) const { return values_.at(k).get<int>(); }
  std::uint64_t UInt64(const std::string &k) const { return values_.at(k).get<std::uint64_t>(); }
  double Double(const std::string &k) const { return values_.at(k).get<double>(); }
  bool Bool(const std::string &k) const { return values_.at(k).get<bool>(); }
  std::string String(const std::string &k) const { return values_.at(k).get<std::string>(); }
  std::vector<int> IntList(const std::string &k) const
  {
    return values_.at(k).get<std::vector<int>>();
  }
  std::vector<double> DoubleList(const std::string &k) const
  {
    return values_.at(k).get<std::vector<double>>();
  }

  int Positive(const std::string &k) const
  {
    const int v = Int(k);
    if (v < 1)
    {
      throw ConfigError("field '" + k + "': must be positive, got " + std::to_string(v));
    }
    return v;
  }

  StepperKind Stepper() const
  {
    try
    {
      return ParseStepperKind(String("stepper"));
    }
    catch (const std::invalid_argument &e)
    {
      throw ConfigError("field 'stepper': " + std::string(e.what()));
    }
  }

  NoiseSpec Noise() const
  {
    try
    {
      return NoiseSpec::Parse(String("noise"));
    }
    catch (const std::invalid_argument &e)
    {
      throw ConfigError("field 'noise': " + std::string(e.what()));
    }
  }

  std::pair<double, double> Lambdas() const
  {
    const auto l = DoubleList("lambda");
    if (l.size() > 2)
    {
      throw ConfigError("field 'lambda': expected one or two values");
    }
    return {l[0], l.size() == 2 ? l[1] : l[0]};
  }

  // Number of steps T / dt, which must be an integer.
  int Steps(const std::string &t_key, const std::string &dt_key) const
  {
    const double t = Double(t_key), dt = Double(dt_key);
    if (!(t > 0.0) || !(dt > 0.0))
    {
      throw ConfigError("fields '" + t_key + "', '" + dt_key + "': must be positive");
    }
    const double n = t / dt;
    if (std::abs(n - std::round(n)) > 1e-8 * n)
    {
      throw ConfigError("field '" + dt_key + "': must divide " + t_key);
    }
    return static_cast<int>(std::lround(n));
  }

private:
  json values_;
};

std::string Format(double v)
{
  if (std::isnan(v))
  {
    return "nan";
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvFile
{
public:
  CsvFile(const std::filesystem::path &path, const std::string &command, const Config &config)
    : path_(path), os_(path)
  {
    if (!os_)
    {
      throw std::runtime_error("cannot write " + path.string());
    }
    os_ << "# smaxdg " << command << "\n";
    os_ << "# config: " << config.Values().dump() << "\n";
    os_ << "# seed: " << config.UInt64("seed") << "\n";
  }

  void Comment(const std::string &text) { os_ << "# " << text << "\n"; }
  void Header(const std::vector<std::string> &cols) { Row(cols); }
  void Row(const std::vector<std::string> &cols)
  {
    for (std::size_t i = 0; i < cols.size(); i++)
    {
      os_ << (i ? "," : "") << cols[i];
    }
    os_ << "\n";
  }
  const std::filesystem::path &Path() const { return path_; }

private:
  std::filesystem::path path_;
  std::ofstream os_;
};

std::filesystem::path OutputDir(const Config &c)
{
  std::filesystem::path dir = c.String("out");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
  {
    throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                             ec.message());
  }
  return dir;
}

std::string JoinOrders(const std::vector<std::string> &fields, const std::vector<double> &o)
{
  std::ostringstream ss;
  for (std::size_t i = 0; i < fields.size(); i++)
  {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s%s=%.4f", i ? " " : "", fields[i].c_str(), o[i]);
    ss << buf;
  }
  return ss.str();
}

int RunConvergence(const std::string &cmd, const Config &c, std::ostream &out)
{
  ConvergenceConfig cc;
  cc.dim = (cmd == "convergence-1d") ? 1 : 2;
  cc.k = c.Int("k");
  if (cc.k < 0)
  {
    throw ConfigError("field 'k': must be non-negative");
  }
  if (cc.dim == 1)
  {
    cc.alpha1 = c.Double("alpha");
  }
  else
  {
    cc.alpha1 = c.Double("alpha1");
    cc.alpha2 = c.Double("alpha2");
  }
  cc.nx = c.IntList("nx");
  cc.nt_ratio = c.Double("nt_ratio");
  cc.t_final = c.Double("t_final");
  cc.stepper = c.Stepper();
  cc.seed = c.UInt64("seed");
  cc.deterministic = c.Bool("deterministic");
  const std::string proj = c.String("projection");
  if (proj != "radau" && proj != "l2")
  {
    throw ConfigError("field 'projection': expected radau or l2, got '" + proj + "'");
  }
  cc.radau_initial = (proj == "radau");
  cc.threads = ResolveThreads(c.Int("threads"));

  const auto result = ConvergenceStudy(cc);
  CsvFile csv(OutputDir(c) / (cmd + ".csv"), cmd, c);
  csv.Comment("brownian_final: " + Format(result.brownian_final));
  std::vector<std::string> header = {"nx", "ny", "nt"};
  for (const auto &f : result.fields)
  {
    header.push_back("err_" + f);
  }
  for (const auto &f : result.fields)
  {
    header.push_back("order_" + f);
  }
  csv.Header(header);
  for (const auto &row : result.rows)
  {
    std::vector<std::string> cols = {std::to_string(row.nx), std::to_string(row.ny),
                                     std::to_string(row.nt)};
    for (double e : row.errors)
    {
      cols.push_back(Format(e));
    }
    for (double o : row.orders)
    {
      cols.push_back(Format(o));
    }
    csv.Row(cols);
  }
  out << cmd << ": finest orders "
      << JoinOrders(result.fields, result.rows.back().orders) << " -> "
      << csv.Path().string() << "\n";
  return kExitOk;
}

int RunEnergy(const std::string &cmd, const Config &c, std::ostream &out)
{
  EnergyConfig ec;
  ec.dim = (cmd == "energy-1d") ? 1 : 2;
  ec.k = c.Int("k");
  if (ec.k < 0)
  {
    throw ConfigError("field 'k': must be non-negative");
  }
  ec.nx = c.Positive("nx");
  if (ec.dim == 1)
  {
    ec.alpha1 = c.Double("alpha");
  }
  else
  {
    ec.ny = c.Positive("ny");
    ec.alpha1 = c.Double("alpha1");
    ec.alpha2 = c.Double("alpha2");
  }
  ec.t_final = c.Double("t_final");
  ec.nt = c.Steps("t_final", "dt");
  std::tie(ec.lambda1, ec.lambda2) = c.Lambdas();
  ec.noise = c.Noise();
  ec.stepper = c.Stepper();
  ec.n_samples = c.Positive("samples");
  ec.max_points = c.Int("max_points");
  ec.seed = c.UInt64("seed");
  ec.threads = ResolveThreads(c.Int("threads"));

  const auto series = EnergyGrowthStudy(ec);
  CsvFile csv(OutputDir(c) / (cmd + ".csv"), cmd, c);
  csv.Comment("samples_used: " + std::to_string(series.n_samples));
  csv.Comment("slope: " + Format(series.slope));
  csv.Comment("intercept: " + Format(series.intercept));
  csv.Comment("theory_slope: " + Format(series.theory_slope));
  csv.Comment("K: " + Format(series.k_constant));
  csv.Comment("max_relative_drift: " + Format(series.max_relative_drift));
  csv.Header({"t", "mean_energy", "stderr"});
  for (std::size_t i = 0; i < series.times.size(); i++)
  {
    csv.Row({Format(series.times[i]), Format(series.mean[i]), Format(series.stderr_[i])});
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s: slope %.6g (theory %.6g, K %.6g, %d paths)", cmd.c_str(),
                series.slope, series.theory_slope, series.k_constant, series.n_samples);
  out << buf << " -> " << csv.Path().string() << "\n";
  return kExitOk;
}

int RunTemporalOrder(const Config &c, std::ostream &out)
{
  TemporalOrderConfig tc;
  tc.k = c.Int("k");
  tc.nx = c.Positive("nx");
  tc.alpha = c.Double("alpha");
  std::tie(tc.lambda1, tc.lambda2) = c.Lambdas();
  tc.noise = c.Noise();
  tc.t_final = c.Double("t_final");
  tc.nt = c.IntList("nt");
  tc.ref_factor = c.Positive("ref_factor");
  tc.stepper = c.Stepper();
  tc.n_paths = c.Positive("paths");
  tc.seed = c.UInt64("seed");
  tc.threads = ResolveThreads(c.Int("threads"));

  const auto r = TemporalOrderStudy(tc);
  CsvFile csv(OutputDir(c) / "temporal-order.csv", "temporal-order", c);
  csv.Comment("slope: " + Format(r.slope));
  csv.Header({"tau", "rms_error"});
  for (std::size_t i = 0; i < r.taus.size(); i++)
  {
    csv.Row({Format(r.taus[i]), Format(r.rms_errors[i])});
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "temporal-order: %s slope %.4f over %d paths",
                ToString(tc.stepper).c_str(), r.slope, r.n_paths);
  out << buf << " -> " << csv.Path().string() << "\n";
  return kExitOk;
}

int RunMspCheck(const Config &c, std::ostream &out)
{
  MspCheckConfig mc;
  mc.alpha = c.Double("alpha");
  mc.trials = c.Positive("trials");
  mc.nx = c.Positive("nx");
  mc.k = c.Int("k");
  mc.random_split = c.Bool("random_split");
  mc.seed = c.UInt64("seed");
  const auto r = MspCheck(mc);
  CsvFile csv(OutputDir(c) / "msp-check.csv", "msp-check", c);
  csv.Header({"trials", "max_interface_gap", "max_residual", "max_elimination"});
  csv.Row({std::to_string(r.trials), Format(r.max_interface_gap), Format(r.max_residual),
           Format(r.max_elimination)});
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "msp-check: max residual %.3e, max interface gap %.3e, elimination %.3e (%d trials)",
                r.max_residual, r.max_interface_gap, r.max_elimination, r.trials);
  out << buf << " -> " << csv.Path().string() << "\n";
  return kExitOk;
}

void WriteGrid(const std::filesystem::path &path, const Config &c, const std::string &what,
               const FieldGrid &g)
{
  CsvFile csv(path, "showcase-2d", c);
  csv.Comment(what);
  csv.Header({"x", "y", "value"});
  for (int j = 0; j < g.ny; j++)
  {
    for (int i = 0; i < g.nx; i++)
    {
      csv.Row({Format(g.x[i]), Format(g.y[j]), Format(g.values[i + std::size_t(g.nx) * j])});
    }
  }
}

int RunShowcase(const Config &c, std::ostream &out)
{
  ShowcaseConfig sc;
  sc.k = c.Int("k");
  sc.nx = c.Positive("nx");
  sc.ny = c.Positive("ny");
  sc.m_max = c.Positive("m_max");
  sc.t_final = c.Double("t_final");
  sc.nt = c.Positive("nt");
  sc.lambdas = c.DoubleList("lambdas");
  sc.grid_x = c.Int("grid_x");
  sc.grid_y = c.Int("grid_y");
  sc.stepper = c.Stepper();
  sc.seed = c.UInt64("seed");
  sc.threads = ResolveThreads(c.Int("threads"));
  const auto r = ShowcaseColored2D(sc);
  const auto dir = OutputDir(c);
  std::vector<const ShowcaseRun *> all = {&r.deterministic};
  for (const auto &run : r.runs)
  {
    all.push_back(&run);
  }
  CsvFile summary(dir / "showcase-2d.csv", "showcase-2d", c);
  summary.Header({"lambda", "initial_energy", "final_energy", "var_S", "var_T"});
  for (const auto *run : all)
  {
    char tag[64];
    std::snprintf(tag, sizeof(tag), "%g", run->lambda);
    WriteGrid(dir / ("showcase_S_lambda" + std::string(tag) + ".csv"), c,
              "field: S, lambda: " + std::string(tag), run->s);
    WriteGrid(dir / ("showcase_T_lambda" + std::string(tag) + ".csv"), c,
              "field: T, lambda: " + std::string(tag), run->t);
    summary.Row({Format(run->lambda), Format(run->initial_energy), Format(run->final_energy), Format(run->s.Variance()),
                 Format(run->t.Variance())});
  }
  out << "showcase-2d: " << all.size() << " runs on a " << sc.grid_x << "x" << sc.grid_y
      << " grid -> " << summary.Path().string() << "\n";
  return kExitOk;
}

int RunNoiseMoments(const Config &c, std::ostream &out)
{
  const double tau = c.Double("tau");
  if (!(tau > 0.0))
  {
    throw ConfigError("field 'tau': must be positive");
  }
  const int n = c.Positive("samples");
  NoiseSampler sampler(c.UInt64("seed"), 0, 1);
  NoiseIncrement inc;
  // Sums of x and x^2 for dB^2, J^2, dB J.
  double s[3] = {0, 0, 0}, s2[3] = {0, 0, 0};
  for (int i = 0; i < n; i++)
  {
    sampler.Sample(tau, true, inc);
    const double v[3] = {inc.dB[0] * inc.dB[0], inc.J[0] * inc.J[0], inc.dB[0] * inc.J[0]};
    for (int m = 0; m < 3; m++)
    {
      s[m] += v[m];
      s2[m] += v[m] * v[m];
    }
  }
  const char *names[3] = {"E[dB^2]", "E[J^2]", "E[dB*J]"};
  const double exact[3] = {tau, tau / 3.0, tau / 2.0};
  CsvFile csv(OutputDir(c) / "noise-moments.csv", "noise-moments", c);
  csv.Header({"moment", "estimate", "expected", "stderr", "z"});
  double max_z = 0.0;
  for (int m = 0; m < 3; m++)
  {
    const double mean = s[m] / n;
    const double var = (s2[m] / n - mean * mean) * n / std::max(n - 1, 1);
    const double se = std::sqrt(var / n);
    const double z = (mean - exact[m]) / se;
    max_z = std::max(max_z, std::abs(z));
    csv.Row({names[m], Format(mean), Format(exact[m]), Format(se), Format(z)});
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "noise-moments: max |z| %.3f over %d draws", max_z, n);
  out << buf << " -> " << csv.Path().string() << "\n";
  return kExitOk;
}

std::string Usage(const std::vector<Command> &cmds)
{
  std::ostringstream ss;
  ss << "usage: smaxdg <command> [--config file.json] [--key value ...]\n\ncommands:\n";
  for (const auto &c : cmds)
  {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-16s %s\n", c.name.c_str(), c.description.c_str());
    ss << buf;
  }
  ss << "\nrun 'smaxdg <command> --help' for the keys of a command\n";
  return ss.str();
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  const auto cmds = Commands();
  if (args.empty() || args[0] == "-h" || args[0] == "--help")
  {
    (args.empty() ? err : out) << Usage(cmds);
    return args.empty() ? kExitUsage : kExitOk;
  }
  const Command *cmd = nullptr;
  for (const auto &c : cmds)
  {
    if (c.name == args[0])
    {
      cmd = &c;
    }
  }
  if (!cmd)
  {
    err << "unknown command '" << args[0] << "'\n" << Usage(cmds);
    return kExitUsage;
  }

  CLI::App app(cmd->description, "smaxdg " + cmd->name);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with flat keys; flags override it");
  std::map<std::string, std::string> text;
  std::map<std::string, CLI::Option *> options;
  for (const auto &key : cmd->keys)
  {
    const std::string flag = "--" + key.name;
    std::string dashed = key.name;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    std::string names = flag;
    if (dashed != key.name)
    {
      names += ",--" + dashed;
    }
    auto *opt = app.add_option(names, text[key.name], key.help + " [" + key.fallback.dump() + "]");
    if (key.type == Type::BOOL)
    {
      opt->expected(0, 1)->default_str("true");
    }
    options[key.name] = opt;
  }

  try
  {
    std::vector<std::string> rest(args.begin() + 1, args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  }
  catch (const CLI::CallForHelp &)
  {
    out << app.help();
    return kExitOk;
  }
  catch (const CLI::ParseError &e)
  {
    err << "smaxdg " << cmd->name << ": " << e.what() << "\n";
    return kExitConfig;
  }

  try
  {
    json values = json::object();
    for (const auto &key : cmd->keys)
    {
      values[key.name] = key.fallback;
    }
    if (!config_path.empty())
    {
      std::ifstream is(config_path);
      if (!is)
      {
        throw ConfigError("cannot read config file '" + config_path + "'");
      }
      json file;
      try
      {
        file = json::parse(is);
      }
      catch (const json::parse_error &e)
      {
        throw ConfigError("config file '" + config_path + "': " + e.what());
      }
      if (!file.is_object())
      {
        throw ConfigError("config file '" + config_path + "': expected a JSON object");
      }
      for (const auto &[k, v] : file.items())
      {
        auto it = std::find_if(cmd->keys.begin(), cmd->keys.end(),
                               [&](const Key &key) { return key.name == k; });
        if (it == cmd->keys.end())
        {
          throw ConfigError("field '" + k + "': unknown key for " + cmd->name);
        }
        values[k] = Normalize(*it, v);
      }
    }
    for (const auto &key : cmd->keys)
    {
      if (options[key.name]->count() > 0)
      {
        const std::string &t = text[key.name];
        values[key.name] = FromString(key, (key.type == Type::BOOL && t.empty()) ? "true" : t);
      }
    }
    const Config config(values);
    const std::string &name = cmd->name;
    if (name == "convergence-1d" || name == "convergence-2d")
    {
      return RunConvergence(name, config, out);
    }
    if (name == "energy-1d" || name == "energy-2d")
    {
      return RunEnergy(name, config, out);
    }
    if (name == "temporal-order")
    {
      return RunTemporalOrder(config, out);
    }
    if (name == "msp-check")
    {
      return RunMspCheck(config, out);
    }
    if (name == "showcase-2d")
    {
      return RunShowcase(config, out);
    }
    return RunNoiseMoments(config, out);
  }
  catch (const ConfigError &e)
  {
    err << "smaxdg " << cmd->name << ": invalid config: " << e.what() << "\n";
    return kExitConfig;
  }
  catch (const NumericalError &e)
  {
    err << "smaxdg " << cmd->name << ": numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  catch (const std::invalid_argument &e)
  {
    err << "smaxdg " << cmd->name << ": invalid config: " << e.what() << "\n";
    return kExitConfig;
  }
  catch (const std::exception &e)
  {
    err << "smaxdg " << cmd->name << ": " << e.what() << "\n";
    return kExitConfig;
  }
}

int Run(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace smaxdg::cli
