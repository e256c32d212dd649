#include "inchilb/cli.hpp"

#include <cctype>
#include <fstream>
#include <ostream>

namespace inchilb {

namespace {

std::string trim(const std::string& s) {
  size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
    --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t begin = 0;
  while (true) {
    size_t pos = s.find(sep, begin);
    if (pos == std::string::npos) {
      out.push_back(s.substr(begin));
      return out;
    }
    out.push_back(s.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

// Generators are comma separated, but monomials carry commas inside their
// x[i,j] brackets; only depth-0 commas separate list entries.
std::vector<std::string> split_gens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& text, const std::string& flag) {
  const std::string t = trim(text);
  if (t.empty() || t.size() > 7)
    throw CliError(flag + ": expected a small nonnegative integer, got '" +
                   text + "'");
  long value = 0;
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw CliError(flag + ": expected a nonnegative integer, got '" + text +
                     "'");
    value = value * 10 + (c - '0');
  }
  return static_cast<int>(value);
}

std::vector<std::vector<int>> parse_weights(const std::string& text) {
  std::vector<std::vector<int>> weights;
  for (const std::string& piece : split(text, ';')) {
    std::vector<int> row;
    for (const std::string& entry : split(piece, ','))
      row.push_back(parse_int(entry, "--weights"));
    bool nonzero = false;
    for (int e : row) nonzero = nonzero || e > 0;
    if (!nonzero)
      throw CliError("--weights: zero weight vector for row " +
                     std::to_string(weights.size() + 1));
    weights.push_back(std::move(row));
  }
  for (const auto& row : weights)
    if (row.size() != weights[0].size())
      throw CliError("--weights: weight vectors have inconsistent lengths");
  return weights;
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig cfg;
  std::string gens_text;
  bool gens_seen = false;
  std::optional<std::string> weights_text;

  size_t i = 0;
  auto value = [&](const std::string& flag) -> std::string {
    if (i + 1 >= args.size())
      throw CliError(flag + " requires a value");
    return args[++i];
  };

  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--rows") {
      cfg.rows = parse_int(value(a), a);
      if (cfg.rows < 1) throw CliError("--rows must be >= 1");
    } else if (a == "--gens") {
      gens_text = value(a);
      gens_seen = true;
    } else if (a == "--weights") {
      weights_text = value(a);
    } else if (a == "--expand") {
      int n = parse_int(value(a), a);
      int d = parse_int(value(a), a);
      cfg.expand = {n, d};
    } else if (a == "--verify") {
      int n = parse_int(value(a), a);
      int d = parse_int(value(a), a);
      cfg.verify_bounds = {n, d};
    } else if (a == "--dot") {
      cfg.dot_path = value(a);
    } else if (a == "--latex") {
      cfg.latex = true;
    } else if (a == "--no-minimize") {
      cfg.minimize_dfa = false;
    } else if (a.rfind("--", 0) == 0) {
      throw CliError("unknown flag '" + a + "'");
    } else {
      throw CliError("unexpected argument '" + a + "'");
    }
  }
  if (!gens_seen) throw CliError("--gens is required (may be empty)");

  if (trim(gens_text).empty()) {
    // no generators: the zero ideal
  } else {
    for (const std::string& piece : split_gens(gens_text)) {
      const std::string text = trim(piece);
      if (text.empty())
        throw CliError("--gens: empty generator in list");
      cfg.gen_strings.push_back(text);
      try {
        cfg.gens.push_back(Monomial::parse(text, cfg.rows));
      } catch (const std::invalid_argument& e) {
        throw CliError("--gens: " + std::string(e.what()) + " in '" + text +
                       "'");
      }
    }
  }

  if (weights_text) {
    auto weights = parse_weights(*weights_text);
    if (static_cast<int>(weights.size()) != cfg.rows)
      throw CliError("--weights: expected " + std::to_string(cfg.rows) +
                     " vectors, got " + std::to_string(weights.size()));
    cfg.weights = std::move(weights);
  }
  return cfg;
}

int run(const CliConfig& cfg, std::ostream& out) {
  Problem p;
  p.rows = cfg.rows;
  p.gens = cfg.gens;
  if (cfg.weights)
    p.grading = Grading{static_cast<int>((*cfg.weights)[0].size()),
                        *cfg.weights};
  else
    p.grading = Grading::standard_total(cfg.rows);

  SeriesResult result = hilbert_series(p, cfg.minimize_dfa);

  const int k = p.grading.k;
  const std::vector<std::string> names = series_var_names(k);
  const std::vector<std::string> tnames = t_var_names(k);
  std::string head = "H(s";
  for (const std::string& t : tnames) head += "," + t;
  head += ")";
  out << head << " = "
      << (cfg.latex ? result.series.latex(names) : result.series.str(names))
      << "\n";

  if (cfg.expand) {
    const auto [nmax, dmax] = *cfg.expand;
    CoeffTable table = taylor(result.series, nmax, dmax);
    for (int n = 0; n <= nmax; ++n) {
      MultiPoly row(k);
      for (auto it = table.entries.lower_bound({n, {}});
           it != table.entries.end() && it->first.first == n; ++it)
        row += MultiPoly::monomial(k, it->first.second, it->second);
      out << "s^" << n << ": " << row.str(tnames) << "\n";
    }
  }

  bool verified = true;
  if (cfg.verify_bounds) {
    const auto [nmax, dmax] = *cfg.verify_bounds;
    verified = verify(p, nmax, dmax);
    out << "verify(" << nmax << "," << dmax
        << "): " << (verified ? "PASS" : "FAIL") << "\n";
  }

  if (!cfg.dot_path.empty()) {
    std::ofstream file(cfg.dot_path);
    if (!file)
      throw std::runtime_error("cannot open dot output file: " + cfg.dot_path);
    file << to_dot(ideal_dfa(p, cfg.minimize_dfa));
  }

  return verified ? 0 : 1;
}

std::string usage() {
  return
      "usage: inchilb --gens \"<monomials>\" [options]\n"
      "\n"
      "Computes the exact rational Hilbert series of the ideal spanned by\n"
      "all shifted copies of the generator monomials, as a function of the\n"
      "column variable s and the degree variable(s) t.\n"
      "\n"
      "  --rows N          number of variable rows (default 1)\n"
      "  --gens LIST       comma-separated monomials like x[1,0]^2*x[2,3];\n"
      "                    '1' is the unit monomial, an empty list gives 0\n"
      "  --weights VECS    semicolon-separated weight vector per row, e.g.\n"
      "                    \"1,0;0,1\"; entries comma-separated, none all-zero\n"
      "  --expand N D      print series coefficients for s-degree <= N and\n"
      "                    total t-degree <= D\n"
      "  --verify N D      cross-check the series against brute-force counts\n"
      "                    on the same box; prints PASS or FAIL\n"
      "  --dot PATH        write the ideal's automaton in Graphviz format\n"
      "  --latex           print the series as a LaTeX fraction\n"
      "  --no-minimize     skip DFA minimization\n";
}

}  // namespace inchilb
