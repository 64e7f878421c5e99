#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "homomesy/chain_dynamics.hpp"
#include "homomesy/engine.hpp"
#include "homomesy/gallery/lyness.hpp"
#include "homomesy/gallery/permutations.hpp"
#include "homomesy/gallery/sandpile.hpp"
#include "homomesy/gallery/ssyt.hpp"
#include "homomesy/gallery/suter.hpp"
#include "homomesy/gallery/word_systems.hpp"
#include "homomesy/grid_systems.hpp"
#include "homomesy/linalg.hpp"
#include "homomesy/report_json.hpp"

namespace homomesy::cli {

namespace {

using namespace homomesy::gallery;

const std::vector<std::string> kSystems = {
    "grid-rowmotion-ideals", "grid-rowmotion-antichains", "grid-promotion-ideals", "grid-promotion-antichains",
    "ballot", "cyclic-inversions", "reversal-inversions", "lyness", "sandpile", "suter", "ssyt"};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string command;
  std::string system;
  std::optional<int> a, b, n, k, m;
  std::string stat;
  std::string seed;
  std::string expect_c;
  std::string format = "table";
  std::string graph;
  std::size_t guard = kDefaultEnumerationGuard;
};

int require(const std::optional<int>& v, const char* flag, const std::string& system) {
  if (!v) throw UsageError(system + " needs " + flag);
  return *v;
}

std::vector<long long> parse_integers(const std::string& text) {
  static const std::regex number(R"(-?\d+)");
  std::vector<long long> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stoll(it->str()));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string vector_text(const RationalVector& v) {
  if (v.size() == 1) return v(0).to_string();
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < v.size(); ++i) parts.push_back(v(i).to_string());
  return "(" + join(parts, ", ") + ")";
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

RationalVector parse_expected(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c) || c == '(' || c == ')'; }),
                token.end());
    values.push_back(Rational::parse(token));
  }
  RationalVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

// How states of one type are printed, serialized and read back.
template <class State>
struct Codec {
  std::function<Json(const State&)> to_json;
  std::function<std::string(const State&)> to_text;
  std::function<State(const std::string&)> parse;
};

// Grid states -----------------------------------------------------------------

Json element_list_json(const GridPoset& p, const ElementSet& s) {
  Json out = Json::array();
  s.for_each([&](std::size_t x) {
    const GridElement e = p.coords(x);
    out.push_back({e.k, e.l});
  });
  return out;
}

std::string element_list_text(const GridPoset& p, const ElementSet& s) {
  std::vector<std::string> parts;
  s.for_each([&](std::size_t x) {
    const GridElement e = p.coords(x);
    parts.push_back("(" + std::to_string(e.k) + "," + std::to_string(e.l) + ")");
  });
  return "{" + join(parts, ",") + "}";
}

bool looks_like_element_list(const std::string& s) {
  return s.find_first_of("([{,") != std::string::npos || s.empty();
}

ElementSet parse_element_list(const GridPoset& p, const std::string& text) {
  const auto ints = parse_integers(text);
  if (ints.size() % 2 != 0) throw UsageError("seed '" + text + "' is not a list of (k,l) pairs");
  ElementSet s(p.size());
  for (std::size_t i = 0; i < ints.size(); i += 2) {
    try {
      s.set(p.index(static_cast<int>(ints[i]), static_cast<int>(ints[i + 1])));
    } catch (const std::out_of_range&) {
      throw UsageError("seed element (" + std::to_string(ints[i]) + "," + std::to_string(ints[i + 1]) +
                       ") is outside " + grid_label(p));
    }
  }
  return s;
}

Codec<OrderIdeal> ideal_codec(const GridPoset& p) {
  return {[p](const OrderIdeal& i) { return element_list_json(p, i.members()); },
          [p](const OrderIdeal& i) { return element_list_text(p, i.members()) + " " + sign_word(p, i).to_string(); },
          [p](const std::string& text) {
            // An element list is read as generators of the ideal.
            if (looks_like_element_list(text)) return down_closure(p, parse_element_list(p, text));
            return ideal_from_sign_word(p, SignWord::parse(text));
          }};
}

Codec<Antichain> antichain_codec(const GridPoset& p) {
  return {[p](const Antichain& a) { return element_list_json(p, a.members()); },
          [p](const Antichain& a) {
            return element_list_text(p, a.members()) + " " + stanley_thomas_word(p, a).to_string();
          },
          [p](const std::string& text) {
            if (!looks_like_element_list(text)) return antichain_from_st_word(p, StanleyThomasWord::parse(text));
            ElementSet s = parse_element_list(p, text);
            if (!is_antichain(p, s)) throw UsageError("seed '" + text + "' is not an antichain");
            return Antichain(std::move(s));
          }};
}

// Other states ----------------------------------------------------------------

Codec<SignWord> word_codec(int a, int b) {
  return {[](const SignWord& w) { return Json(w.to_string()); }, [](const SignWord& w) { return w.to_string(); },
          [a, b](const std::string& text) {
            SignWord w = SignWord::parse(text);
            if (w.count_minus() != static_cast<std::size_t>(a) || w.count_plus() != static_cast<std::size_t>(b)) {
              throw UsageError("seed must have " + std::to_string(a) + " minus and " + std::to_string(b) + " plus letters");
            }
            return w;
          }};
}

Codec<Permutation> permutation_codec(int n) {
  return {[](const Permutation& p) { return Json(p); },
          [](const Permutation& p) {
            std::string s;
            for (int v : p) s += (s.empty() ? "" : " ") + std::to_string(v);
            return s;
          },
          [n](const std::string& text) {
            Permutation p;
            for (long long v : parse_integers(text)) p.push_back(static_cast<int>(v));
            Permutation sorted = p;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
              if (sorted[static_cast<std::size_t>(i)] != i + 1) throw UsageError("seed is not a permutation");
            }
            if (static_cast<int>(p.size()) != n) throw UsageError("seed must be a permutation of [n]");
            return p;
          }};
}

Codec<YoungDiagram> diagram_codec(int n) {
  return {[](const YoungDiagram& d) { return Json(d.parts); },
          [](const YoungDiagram& d) {
            std::vector<std::string> parts;
            for (int v : d.parts) parts.push_back(std::to_string(v));
            return "(" + join(parts, ",") + ")";
          },
          [n](const std::string& text) {
            YoungDiagram d;
            for (long long v : parse_integers(text)) {
              if (v != 0) d.parts.push_back(static_cast<int>(v));
            }
            if (!in_Yn(n, d)) throw UsageError("seed is not a diagram in Y_" + std::to_string(n));
            return d;
          }};
}

Codec<RectTableau> tableau_codec(int rows, int cols, int ceiling) {
  return {[](const RectTableau& t) { return Json(t.as_rows()); },
          [](const RectTableau& t) {
            std::vector<std::string> rows;
            for (const auto& r : t.as_rows()) {
              std::vector<std::string> entries;
              for (int v : r) entries.push_back(std::to_string(v));
              rows.push_back(join(entries, ","));
            }
            return join(rows, "/");
          },
          [rows, cols, ceiling](const std::string& text) {
            std::vector<int> entries;
            for (long long v : parse_integers(text)) entries.push_back(static_cast<int>(v));
            try {
              return RectTableau(rows, cols, ceiling, std::move(entries));
            } catch (const std::invalid_argument& e) {
              throw UsageError(std::string("seed: ") + e.what());
            }
          }};
}

Codec<SandpileConfig> sandpile_codec(const SandpileGraph& g) {
  return {[](const SandpileConfig& c) { return Json(c.grains); },
          [](const SandpileConfig& c) {
            std::vector<std::string> parts;
            for (long long v : c.grains) parts.push_back(std::to_string(v));
            return "(" + join(parts, ",") + ")";
          },
          [g](const std::string& text) {
            SandpileConfig c{parse_integers(text)};
            if (c.grains.size() != g.nonsink_count()) throw UsageError("seed needs one entry per non-sink vertex");
            if (!is_stable(g, c)) throw UsageError("seed must be a stable configuration");
            return c;
          }};
}

// Generic commands ------------------------------------------------------------

template <class State>
Statistic<State> pick_statistic(const DynamicalSystem<State>& system, const Options& opt) {
  if (opt.stat.empty()) return system.statistics.front();
  try {
    return system.statistic(opt.stat);
  } catch (const std::invalid_argument& e) {
    std::vector<std::string> names;
    for (const auto& s : system.statistics) names.push_back(s.name);
    throw UsageError(std::string(e.what()) + "; available: " + join(names, ", "));
  }
}

template <class State>
int emit_report(const HomomesyReport<State>& report, const DynamicalSystem<State>& system, const Codec<State>& codec,
                const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    out << report_to_json(report, system.map_name, system.space, codec.to_json).dump(2) << "\n";
  } else if (opt.format == "csv") {
    out << "rep,period,average\n";
    for (const auto& o : report.orbits) {
      out << csv_quote(codec.to_text(o.representative)) << "," << o.period << "," << csv_quote(vector_text(o.average))
          << "\n";
    }
  } else {
    out << "map: " << system.map_name << "\nspace: " << system.space << "\nstatistic: " << report.statistic << "\n";
    out << "orbits: " << report.orbits.size() << "\n";
    for (const auto& o : report.orbits) {
      out << "  " << std::left << std::setw(28) << codec.to_text(o.representative) << " period " << std::setw(4)
          << o.period << " average " << vector_text(o.average) << "\n";
    }
    if (report.global_average) out << "global average: " << vector_text(*report.global_average) << "\n";
    if (report.homomesic) {
      out << "verdict: homomesic, c = " << vector_text(*report.c) << "\n";
    } else {
      out << "verdict: not homomesic\n";
    }
  }
  if (opt.expect_c.empty()) return kOk;
  const RationalVector expected = parse_expected(opt.expect_c);
  const bool match = report.homomesic && report.c->size() == expected.size() && *report.c == expected;
  return match ? kOk : kMismatch;
}

template <class State>
int run_check(const DynamicalSystem<State>& system, const Codec<State>& codec, const Options& opt, std::ostream& out) {
  const Statistic<State> f = pick_statistic(system, opt);
  const auto orbits = orbit_partition(system.map, system.states, opt.guard);
  return emit_report(summarize_orbits(orbits, f, true), system, codec, opt, out);
}

template <class State>
int run_orbits(const DynamicalSystem<State>& system, const Codec<State>& codec, const Options& opt, std::ostream& out) {
  std::vector<Statistic<State>> stats;
  if (!opt.stat.empty()) {
    stats.push_back(pick_statistic(system, opt));
  } else {
    for (const auto& s : system.statistics) {
      if (s.name.rfind("indicator:", 0) != 0) stats.push_back(s);
    }
  }

  std::vector<Orbit<State>> orbits;
  if (!opt.seed.empty()) {
    const State seed = codec.parse(opt.seed);
    if (!std::binary_search(system.states.begin(), system.states.end(), seed)) {
      throw UsageError("seed is not in " + system.space);
    }
    orbits.push_back(iterate_orbit(system.map, seed, opt.guard));
  } else {
    orbits = orbit_partition(system.map, system.states, opt.guard);
  }

  // A seeded listing starts at the seed; the representative stays canonical.
  auto listed_states = [&](const Orbit<State>& o) {
    std::vector<State> states = o.states;
    if (!opt.seed.empty()) {
      const State seed = codec.parse(opt.seed);
      std::rotate(states.begin(), std::find(states.begin(), states.end(), seed), states.end());
    }
    return states;
  };

  if (opt.format == "json") {
    Json j;
    j["map"] = system.map_name;
    j["space"] = system.space;
    Json list = Json::array();
    for (const auto& o : orbits) {
      Json entry;
      entry["rep"] = codec.to_json(o.representative());
      entry["period"] = o.period();
      Json states = Json::array();
      for (const auto& s : listed_states(o)) states.push_back(codec.to_json(s));
      entry["states"] = std::move(states);
      Json averages = Json::object();
      for (const auto& f : stats) averages[f.name] = rational_vector_to_json(orbit_average(f, o));
      entry["averages"] = std::move(averages);
      list.push_back(std::move(entry));
    }
    j["orbits"] = std::move(list);
    out << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    out << "orbit,position,state";
    for (const auto& f : stats) out << "," << csv_quote(f.name);
    out << "\n";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const auto states = listed_states(orbits[i]);
      for (std::size_t pos = 0; pos < states.size(); ++pos) {
        out << i << "," << pos << "," << csv_quote(codec.to_text(states[pos]));
        for (const auto& f : stats) out << "," << csv_quote(vector_text(f(states[pos])));
        out << "\n";
      }
    }
  } else {
    out << "map: " << system.map_name << "\nspace: " << system.space << "\norbits: " << orbits.size() << "\n";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const auto& o = orbits[i];
      out << "orbit " << i << ": rep " << codec.to_text(o.representative()) << ", period " << o.period() << "\n";
      for (const auto& s : listed_states(o)) out << "    " << codec.to_text(s) << "\n";
      for (const auto& f : stats) out << "  average " << f.name << " = " << vector_text(orbit_average(f, o)) << "\n";
    }
  }
  return kOk;
}

template <class State>
int run_subspace(const DynamicalSystem<State>& system, const std::vector<Statistic<State>>& basis,
                 const std::vector<NamedGenerator>& generators, const Options& opt, std::ostream& out) {
  const auto orbits = orbit_partition(system.map, system.states, opt.guard);
  const auto kernel = homomesic_subspace(orbits, basis);
  std::vector<std::pair<std::string, bool>> presence;
  for (const auto& g : generators) presence.emplace_back(g.name, in_span(kernel, g.coefficients));

  std::vector<std::string> basis_names;
  for (const auto& f : basis) basis_names.push_back(f.name);

  if (opt.format == "json") {
    Json j;
    j["map"] = system.map_name;
    j["space"] = system.space;
    j["basis"] = basis_names;
    j["dimension"] = kernel.size();
    Json vectors = Json::array();
    for (const auto& v : kernel) {
      Json row = Json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i).to_string());
      vectors.push_back(std::move(row));
    }
    j["vectors"] = std::move(vectors);
    Json gens = Json::array();
    for (const auto& [name, present] : presence) gens.push_back({{"name", name}, {"present", present}});
    j["generators"] = std::move(gens);
    out << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    out << "generator,present\n";
    for (const auto& [name, present] : presence) out << csv_quote(name) << "," << (present ? "yes" : "no") << "\n";
  } else {
    out << "map: " << system.map_name << "\nspace: " << system.space << "\nbasis: " << join(basis_names, " ") << "\n";
    out << "dimension: " << kernel.size() << "\n";
    for (const auto& v : kernel) {
      std::vector<std::string> entries;
      for (Eigen::Index i = 0; i < v.size(); ++i) entries.push_back(v(i).to_string());
      out << "  [" << join(entries, " ") << "]\n";
    }
    for (const auto& [name, present] : presence) out << (present ? "present " : "absent  ") << name << "\n";
  }
  return kOk;
}

template <class State>
int dispatch(const DynamicalSystem<State>& system, const Codec<State>& codec, const Options& opt, std::ostream& out) {
  if (opt.command == "check") return run_check(system, codec, opt, out);
  if (opt.command == "orbits") return run_orbits(system, codec, opt, out);
  throw UsageError("subspace is only available for the grid systems");
}

// Lyness has an infinite state space and an irrational statistic, so it gets
// its own path: the orbit through the seed and the exact product of |h|.
int run_lyness(const Options& opt, std::ostream& out) {
  if (opt.command == "subspace") throw UsageError("subspace is only available for the grid systems");
  LynessState seed{1, 3};
  if (!opt.seed.empty()) {
    std::vector<Rational> values;
    std::stringstream ss(opt.seed);
    std::string token;
    while (std::getline(ss, token, ',')) {
      token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c) || c == '(' || c == ')'; }),
                  token.end());
      values.push_back(Rational::parse(token));
    }
    if (values.size() != 2) throw UsageError("lyness seed is 'x,y'");
    seed = {values[0], values[1]};
  }
  if (!in_lyness_domain(seed)) throw UsageError("lyness seed is outside the domain");
  const auto sequence = lyness_sequence(seed);
  const Rational product = lyness_orbit_product(seed);
  const bool zero_mesic = product == Rational(1);

  if (opt.format == "json") {
    Json j;
    j["map"] = "lyness";
    j["space"] = "orbit of (" + seed.x.to_string() + "," + seed.y.to_string() + ")";
    j["statistic"] = "log|h(x)|";
    Json xs = Json::array();
    for (const auto& x : sequence) xs.push_back(x.to_string());
    j["orbits"] = Json::array({{{"rep", Json::array({seed.x.to_string(), seed.y.to_string()})},
                                {"period", 5},
                                {"sequence", xs},
                                {"product", product.to_string()}}});
    j["homomesic"] = zero_mesic;
    j["c"] = zero_mesic ? Json("0") : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    std::vector<std::string> xs;
    for (const auto& x : sequence) xs.push_back(x.to_string());
    if (opt.format == "csv") {
      out << "sequence,product\n" << csv_quote(join(xs, ",")) << "," << product.to_string() << "\n";
    } else {
      out << "map: lyness\nsequence: " << join(xs, ", ") << "\nproduct of |h(x_i)|: " << product.to_string() << "\n";
      out << (zero_mesic ? "verdict: log|h| is 0-mesic\n" : "verdict: log|h| is not 0-mesic\n");
    }
  }
  if (!opt.expect_c.empty()) {
    const RationalVector expected = parse_expected(opt.expect_c);
    if (!zero_mesic || expected.size() != 1 || !expected(0).is_zero()) return kMismatch;
  }
  return kOk;
}

GridMap grid_map(const std::string& system) {
  return system.find("rowmotion") != std::string::npos ? GridMap::Rowmotion : GridMap::Promotion;
}

int execute(const Options& opt, std::ostream& out) {
  const std::string& sys = opt.system;
  if (sys.rfind("grid-", 0) == 0) {
    const GridPoset p = build_grid_poset(require(opt.a, "--a", sys), require(opt.b, "--b", sys));
    if (sys.find("ideals") != std::string::npos) {
      const auto system = grid_ideal_system(p, grid_map(sys), opt.guard);
      if (opt.command == "subspace") {
        return run_subspace(system, indicator_basis<OrderIdealTag>(p), ideal_generators(p), opt, out);
      }
      return dispatch(system, ideal_codec(p), opt, out);
    }
    const auto system = grid_antichain_system(p, grid_map(sys), opt.guard);
    if (opt.command == "subspace") {
      return run_subspace(system, indicator_basis<AntichainTag>(p), antichain_generators(p), opt, out);
    }
    return dispatch(system, antichain_codec(p), opt, out);
  }
  if (sys == "ballot" || sys == "cyclic-inversions") {
    const int a = require(opt.a, "--a", sys);
    const int b = require(opt.b, "--b", sys);
    const auto system = sys == "ballot" ? ballot_space(a, b, opt.guard) : cyclic_inversions_space(a, b, opt.guard);
    return dispatch(system, word_codec(a, b), opt, out);
  }
  if (sys == "reversal-inversions") {
    const int n = require(opt.n, "--n", sys);
    return dispatch(reversal_inversions_space(n, opt.guard), permutation_codec(n), opt, out);
  }
  if (sys == "suter") {
    const int n = require(opt.n, "--n", sys);
    return dispatch(suter_space(n, opt.guard), diagram_codec(n), opt, out);
  }
  if (sys == "ssyt") {
    const int rows = opt.m.value_or(2);
    const int cols = require(opt.n, "--n", sys);
    const int ceiling = require(opt.k, "--k", sys);
    auto system = ssyt_space(rows, cols, ceiling, opt.guard);
    Options local = opt;
    if (opt.stat.rfind("sigma:", 0) == 0) {
      const auto ints = parse_integers(opt.stat.substr(6));
      if (ints.size() % 2 != 0) throw UsageError("sigma statistic takes row,col pairs, e.g. sigma:1,1;2,3");
      std::vector<Cell> cells;
      for (std::size_t i = 0; i < ints.size(); i += 2) {
        const Cell c{static_cast<int>(ints[i]), static_cast<int>(ints[i + 1])};
        if (c.row < 1 || c.row > rows || c.col < 1 || c.col > cols) throw UsageError("sigma cell outside the shape");
        cells.push_back(c);
      }
      auto f = sigma_statistic(std::move(cells));
      local.stat = f.name;
      system.statistics.push_back(std::move(f));
    }
    return dispatch(system, tableau_codec(rows, cols, ceiling), local, out);
  }
  if (sys == "sandpile") {
    if (opt.graph.empty()) throw UsageError("sandpile needs --graph");
    const SandpileGraph g = SandpileGraph::load(opt.graph);
    return dispatch(sandpile_space(g, opt.guard), sandpile_codec(g), opt, out);
  }
  if (sys == "lyness") return run_lyness(opt, out);
  throw UsageError("unknown system '" + sys + "'");
}

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("system", opt.system, "Dynamical system")->required()->check(CLI::IsMember(kSystems));
  cmd->add_option("--a", opt.a, "Length of the first chain, or number of minus letters");
  cmd->add_option("--b", opt.b, "Length of the second chain, or number of plus letters");
  cmd->add_option("--n", opt.n, "Size parameter (permutations, Suter, tableau columns)");
  cmd->add_option("--k", opt.k, "Tableau ceiling");
  cmd->add_option("--m", opt.m, "Tableau rows (default 2)");
  cmd->add_option("--stat", opt.stat, "Statistic name");
  cmd->add_option("--seed", opt.seed, "Serialized starting state");
  cmd->add_option("--expect-c", opt.expect_c, "Expected constant p/q (comma separated for vectors)");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--guard", opt.guard, "Enumeration and orbit guard")->check(CLI::PositiveNumber);
  cmd->add_option("--graph", opt.graph, "Sandpile edge-list file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homomesy experiments on finite dynamical systems"};
  app.require_subcommand(1);
  Options opt;
  for (const char* name : {"check", "orbits", "subspace"}) {
    const char* help = std::string(name) == "check"    ? "Decide homomesy of one statistic"
                       : std::string(name) == "orbits" ? "List orbits and their averages"
                                                       : "Homomesic subspace of the indicator basis";
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common_options(cmd, opt);
    cmd->callback([&opt, name] { opt.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return execute(opt, out);
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const ClosureViolation& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace homomesy::cli
