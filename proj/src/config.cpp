#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace icm {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string fmt_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, p);  // shortest form that parses back exactly
}

double to_double(const std::string& key, const std::string& s) {
  try {
    size_t pos = 0;
    double d = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return d;
  } catch (const std::exception&) {
    throw ParseError("config: bad number for " + key + ": '" + s + "'");
  }
}

long long to_int(const std::string& key, const std::string& s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError("config: bad integer for " + key + ": '" + s + "'");
  return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError("config: bad integer for " + key + ": '" + s + "'");
  return v;
}

bool to_bool(const std::string& key, const std::string& s) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  throw ParseError("config: bad boolean for " + key + ": '" + s + "'");
}

}  // namespace

std::string ExperimentConfig::to_kv() const {
  std::ostringstream os;
  os << "mode=" << mode << '\n';
  os << "input=" << input << '\n';
  os << "gen=" << gen << '\n';
  os << "gen_n=" << gen_n << '\n';
  os << "gen_m0=" << gen_m0 << '\n';
  os << "gen_k_ring=" << gen_k_ring << '\n';
  os << "gen_p=" << fmt_double(gen_p) << '\n';
  os << "algorithm=" << algorithm << '\n';
  os << "k=" << k << '\n';
  os << "targets=" << targets << '\n';
  os << "eps=" << fmt_double(eps) << '\n';
  os << "alpha=" << fmt_double(alpha) << '\n';
  os << "gamma=" << fmt_double(gamma) << '\n';
  os << "lambda=" << fmt_double(lambda) << '\n';
  os << "c=" << fmt_double(c) << '\n';
  os << "phi=" << fmt_double(phi) << '\n';
  os << "l_cap=" << l_cap << '\n';
  os << "resample_every=" << resample_every << '\n';
  os << "seed=" << seed << '\n';
  os << "output=" << output << '\n';
  os << "recompute_cap=" << recompute_cap << '\n';
  os << "zero_elapsed=" << (zero_elapsed ? 1 : 0) << '\n';
  os << "static_scoring=" << (static_scoring ? 1 : 0) << '\n';
  os << "budget=" << budget << '\n';
  os << "sweep_param=" << sweep_param << '\n';
  os << "sweep_values=" << sweep_values << '\n';
  return os.str();
}

ExperimentConfig config_from_kv(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) +
                       ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key == "mode") c.mode = val;
    else if (key == "input") c.input = val;
    else if (key == "gen") c.gen = val;
    else if (key == "gen_n") c.gen_n = static_cast<int>(to_int(key, val));
    else if (key == "gen_m0") c.gen_m0 = static_cast<int>(to_int(key, val));
    else if (key == "gen_k_ring") c.gen_k_ring = static_cast<int>(to_int(key, val));
    else if (key == "gen_p") c.gen_p = to_double(key, val);
    else if (key == "algorithm") c.algorithm = val;
    else if (key == "k") c.k = static_cast<int>(to_int(key, val));
    else if (key == "targets") c.targets = val;
    else if (key == "eps") c.eps = to_double(key, val);
    else if (key == "alpha") c.alpha = to_double(key, val);
    else if (key == "gamma") c.gamma = to_double(key, val);
    else if (key == "lambda") c.lambda = to_double(key, val);
    else if (key == "c") c.c = to_double(key, val);
    else if (key == "phi") c.phi = to_double(key, val);
    else if (key == "l_cap") c.l_cap = static_cast<int>(to_int(key, val));
    else if (key == "resample_every")
      c.resample_every = static_cast<int>(to_int(key, val));
    else if (key == "seed") c.seed = to_u64(key, val);
    else if (key == "output") c.output = val;
    else if (key == "recompute_cap")
      c.recompute_cap = static_cast<int>(to_int(key, val));
    else if (key == "zero_elapsed") c.zero_elapsed = to_bool(key, val);
    else if (key == "static_scoring") c.static_scoring = to_bool(key, val);
    else if (key == "budget") c.budget = to_u64(key, val);
    else if (key == "sweep_param") c.sweep_param = val;
    else if (key == "sweep_values") c.sweep_values = val;
    else throw ParseError("config: unknown key '" + key + "'");
  }
  return c;
}

ExperimentConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_kv(buf.str());
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    out.push_back(to_double("sweep_values", tok));
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (mode != "minimize" && mode != "brute" && mode != "baseline" &&
      mode != "compare" && mode != "sweep")
    throw GraphError("config: unknown mode '" + mode + "'");
  if (input.empty() == gen.empty())
    throw GraphError("config: exactly one of input or gen required");
  if (!gen.empty() && gen != "ba" && gen != "ws")
    throw GraphError("config: gen must be ba or ws");
  if (mode == "minimize" && algorithm != "exact" && algorithm != "approx" &&
      algorithm != "fast")
    throw GraphError("config: minimize algorithm must be exact, approx or fast");
  if (mode == "baseline" && algorithm != "random" &&
      algorithm != "betweenness" && algorithm != "spanning")
    throw GraphError(
        "config: baseline algorithm must be random, betweenness or spanning");
  if (k < 1) throw GraphError("config: k >= 1");
  if (eps <= 0.0 || eps >= 1.0) throw GraphError("config: eps in (0,1)");
  if (alpha <= 0.0 || alpha >= 1.0) throw GraphError("config: alpha in (0,1)");
  if (gamma <= 0.0 || gamma >= 1.0) throw GraphError("config: gamma in (0,1)");
  if (lambda <= 0.0 || lambda >= 1.0) throw GraphError("config: lambda in (0,1)");
  if (c <= 0.0) throw GraphError("config: c > 0");
  if (phi < 0.0) throw GraphError("config: phi >= 0");
  if (l_cap < 1) throw GraphError("config: l_cap >= 1");
  if (mode == "sweep" && sweep_param != "eps" && sweep_param != "alpha")
    throw GraphError("config: sweep_param must be eps or alpha");
  if (mode == "sweep" && parse_double_list(sweep_values).empty())
    throw GraphError("config: sweep_values required for sweep");
}

}  // namespace icm
