#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mtt/mtt.hpp>

namespace {

using namespace mtt;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int k = 0;
  std::optional<std::string> sinks;
  std::optional<std::string> isolated;
  std::optional<std::string> minor;
  std::optional<std::string> q;
  std::optional<std::string> v;
  std::optional<int> vertex;
  std::optional<int> m;
  std::string cls;
  bool undirected = false;
  bool laplacian = false;
  bool shaved = false;
  unsigned jobs = 1;
  std::optional<std::uint64_t> cap;
  std::string json_path;
  std::string input = "-";
  std::string output = "-";
  std::string check;
  int max_n = 3;
  int max_k = 4;

  ExecPolicy policy() const { return {jobs, cap ? *cap : cap_from_environment()}; }
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// "1,3" -> {1,3}; "" or "none" -> {}
VertexSet parse_vertex_set(const std::string& text, int n) {
  VertexSet out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("bad vertex '" + tok + "'");
    }
    if (used != tok.size() || v < 1 || v > n) throw UsageError("vertex '" + tok + "' outside 1.." + std::to_string(n));
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw UsageError("repeated vertex in '" + text + "'");
  return out;
}

std::pair<Vertex, Vertex> parse_minor(const std::string& text, int n) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw UsageError("--minor expects i/j");
  const VertexSet i = parse_vertex_set(text.substr(0, slash), n);
  const VertexSet j = parse_vertex_set(text.substr(slash + 1), n);
  if (i.size() != 1 || j.size() != 1) throw UsageError("--minor expects i/j");
  return {i.front(), j.front()};
}

Coefficient parse_value(const std::string& text) {
  try {
    return parse_coefficient(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::string set_string(const VertexSet& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

void require_shape(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.n > kMaxVertices) throw UsageError("--n must be at most " + std::to_string(kMaxVertices));
  if (o.k < 0) throw UsageError("--k must be nonnegative");
}

// ---- object commands ----

int cmd_classify(const Options& o) {
  const AnyGraph any = parse_graph(slurp(o.input));
  Json j;
  if (const auto* g = std::get_if<DirectedGraph>(&any)) {
    const GraphClassification c = classify(*g);
    j["beta0"] = c.beta0;
    j["beta1"] = c.beta1;
    j["strongly_connected"] = c.strongly_connected;
    j["strongly_semiconnected"] = c.strongly_semiconnected;
    j["acyclic"] = c.acyclic;
    j["sinks"] = detail::vertex_set_json(c.sinks);
    j["isolated"] = detail::vertex_set_json(c.isolated);
    j["loop_count"] = c.loop_count;
  } else {
    const auto& u = std::get<UndirectedGraph>(any);
    j["beta0"] = beta0(u);
    j["beta1"] = beta1(u);
    j["loop_count"] = loop_count(u);
  }
  if (!o.json_path.empty()) {
    emit(o.json_path, j.dump(2) + "\n");
    return 0;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ' ';
    if (value.is_boolean())
      std::cout << (value.get<bool>() ? "yes" : "no");
    else if (value.is_array())
      std::cout << set_string(value.get<VertexSet>());
    else
      std::cout << value.dump();
    std::cout << '\n';
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  require_shape(o);
  const ExecPolicy policy = o.policy();
  std::ostringstream out;
  if (o.undirected) {
    if (!o.cls.empty() || o.sinks || o.isolated) throw UsageError("classes apply to directed graphs only");
    UndirectedSpace(o.n, o.k, policy.cap).for_each([&](const UndirectedGraph& u) { out << edges_to_string(u.edges()) << '\n'; });
  } else if (o.cls.empty()) {
    if (o.sinks || o.isolated) throw UsageError("--sinks/--isolated need --class");
    DirectedSpace(o.n, o.k, policy.cap).for_each([&](const DirectedGraph& g) { out << edges_to_string(g.edges()) << '\n'; });
  } else {
    GraphClass cls{};
    std::optional<VertexSet> marked;
    if (o.cls == "ssc") {
      cls = GraphClass::StronglySemiconnected;
      if (o.sinks) throw UsageError("--sinks goes with --class ac");
      if (o.isolated) marked = parse_vertex_set(*o.isolated, o.n);
    } else if (o.cls == "ac") {
      cls = GraphClass::Acyclic;
      if (o.isolated) throw UsageError("--isolated goes with --class ssc");
      if (o.sinks) marked = parse_vertex_set(*o.sinks, o.n);
    } else {
      throw UsageError("--class must be ssc or ac");
    }
    for (const DirectedGraph& g : enumerate_class(o.n, o.k, cls, marked, policy)) out << edges_to_string(g.edges()) << '\n';
  }
  emit(o.output, out.str());
  return 0;
}

int cmd_det(const Options& o) {
  require_shape(o);
  if (o.minor && o.isolated) throw UsageError("--minor and --isolated are exclusive");
  FormalSum s(o.n, o.k);
  if (o.minor) {
    const auto [i, j] = parse_minor(*o.minor, o.n);
    s = universal_codim1(o.n, o.k, i, j, o.policy());
  } else {
    s = universal_det(o.n, o.k, o.isolated ? parse_vertex_set(*o.isolated, o.n) : VertexSet{}, o.policy());
  }
  emit(o.output, to_text(s));
  return 0;
}

int cmd_laplace(const Options& o) {
  const AnySum any = parse_formal_sum(slurp(o.input));
  std::visit([&](const auto& s) { emit(o.output, to_text(laplace(s))); }, any);
  return 0;
}

FormalSum directed_sum(const AnySum& any, const char* what) {
  if (const auto* s = std::get_if<FormalSum>(&any)) return *s;
  throw UsageError(std::string(what) + " needs a directed formal sum (FS header)");
}

int cmd_pair(const Options& o) {
  const FormalSum s = directed_sum(parse_formal_sum(slurp(o.input)), "pair");
  WeightMatrix w = WeightMatrix::symbolic(s.vertex_count());
  if (o.laplacian) w = laplace_matrix(w);
  emit(o.output, pairing(w, s).to_string() + "\n");
  return 0;
}

UndirectedGraph undirected_input(const std::string& text) {
  const AnyGraph any = parse_graph(text);
  if (const auto* g = std::get_if<DirectedGraph>(&any)) return forget(*g);
  return std::get<UndirectedGraph>(any);
}

int cmd_potts(const Options& o) {
  const ExecPolicy policy = o.policy();
  if (o.n > 0) {
    require_shape(o);
    if (!o.q || !o.v) throw UsageError("universal Potts element needs --q and --v");
    emit(o.output, to_text(universal_potts(o.n, o.k, parse_value(*o.q), parse_value(*o.v), o.shaved, policy)));
    return 0;
  }
  UndirectedGraph u = undirected_input(slurp(o.input));
  if (o.shaved) u = shave(u);
  if (o.q || o.v) {
    if (!o.q || !o.v) throw UsageError("--q and --v go together");
    emit(o.output, to_fraction_string(potts_value(u, parse_value(*o.q), parse_value(*o.v), policy.cap)) + "\n");
  } else {
    emit(o.output, potts(u, policy.cap).to_string() + "\n");
  }
  return 0;
}

int cmd_tutte(const Options& o) {
  emit(o.output, tutte(undirected_input(slurp(o.input)), o.policy().cap).to_string() + "\n");
  return 0;
}

int cmd_theta(const Options& o) {
  if (o.n < 2) throw UsageError("theta needs --n of at least 2");
  const GradedElement th = theta(o.n, o.policy());
  std::string text;
  for (const auto& [degree, part] : th.components()) text += to_text(part);
  emit(o.output, text);
  return 0;
}

// ---- verification ----

using Cell = std::pair<Json, std::function<VerificationReport()>>;

std::vector<Cell> expand_check(const Options& o) {
  const ExecPolicy policy = o.policy();
  const std::string& c = o.check;
  const int n = o.n;
  const int k = o.k;
  std::vector<Cell> cells;
  auto add = [&](Json params, std::function<VerificationReport()> f) { cells.emplace_back(std::move(params), std::move(f)); };

  auto subsets = [&](const std::optional<std::string>& given, bool nonempty) {
    if (given) return std::vector<VertexSet>{parse_vertex_set(*given, n)};
    std::vector<VertexSet> all;
    for (const VertexSet& I : detail::all_subsets(n))
      if (!nonempty || !I.empty()) all.push_back(I);
    return all;
  };
  auto pairs = [&](bool distinct) {
    std::vector<std::pair<Vertex, Vertex>> all;
    if (o.minor) {
      all.push_back(parse_minor(*o.minor, n));
      return all;
    }
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = 1; j <= n; ++j)
        if (!distinct || i != j) all.emplace_back(i, j);
    return all;
  };
  const Json nk = {{"n", n}, {"k", k}};

  if (c == "direct") add(nk, [=] { return verify_direct(n, k, policy); });
  else if (c == "direct-prime") add(nk, [=] { return verify_direct_prime(n, k, policy); });
  else if (c == "mobius") add(nk, [=] { return verify_mobius_equiv(n, k, policy); });
  else if (c == "diag") {
    for (const VertexSet& I : subsets(o.sinks, false))
      add({{"n", n}, {"k", k}, {"I", detail::vertex_set_json(I)}}, [=] { return verify_diag(n, k, I, policy); });
  } else if (c == "codim1") {
    for (const auto& [i, j] : pairs(false))
      add({{"n", n}, {"k", k}, {"i", i}, {"j", j}}, [=] { return verify_codim1(n, k, i, j, policy); });
  } else if (c == "expansion") add(nk, [=] { return verify_expansion(n, k, policy); });
  else if (c == "derivative") {
    std::vector<Vertex> vertices;
    for (Vertex i = 1; i <= n; ++i)
      if (!o.vertex || *o.vertex == i) vertices.push_back(i);
    if (o.vertex && vertices.empty()) throw UsageError("--vertex outside 1.." + std::to_string(n));
    for (Vertex i : vertices)
      for (int m = 1; m <= k; ++m)
        if (!o.m || *o.m == m) add({{"n", n}, {"k", k}, {"i", i}, {"m", m}}, [=] { return verify_derivative(n, k, i, m, policy); });
    if (o.m && (*o.m < 1 || *o.m > k)) throw UsageError("--m must lie in 1..k");
  } else if (c == "minor-pairing") add({{"n", n}}, [=] { return verify_minor_pairing(n, policy); });
  else if (c == "kirchhoff-diag") {
    for (const VertexSet& I : subsets(o.sinks, true))
      add({{"n", n}, {"I", detail::vertex_set_json(I)}}, [=] { return verify_kirchhoff_diag(n, I, policy); });
  } else if (c == "kirchhoff-codim1") {
    for (const auto& [i, j] : pairs(true))
      add({{"n", n}, {"i", i}, {"j", j}}, [=] { return verify_kirchhoff_codim1(n, i, j, policy); });
  } else if (c == "cayley") add({{"n", n}}, [=] { return verify_cayley(n, policy); });
  else if (c == "specval") add(nk, [=] { return verify_specval(n, k, policy); });
  else if (c == "tutte") add(nk, [=] { return verify_tutte(n, k, policy); });
  else if (c == "lapl-tutte") add(nk, [=] { return verify_lapl_tutte(n, k, policy); });
  else if (c == "theta") add({{"n", n}}, [=] { return verify_theta(n, policy); });
  else if (c == "theta-derived") add({{"n", n}}, [=] { return verify_theta_derived(n, policy); });
  else if (c == "operator-laws") add(nk, [=] { return verify_operator_laws(n, k, policy); });
  else if (c == "det-recovery") add({{"n", n}}, [=] { return verify_det_recovery(n, policy); });
  else throw UsageError("unknown check '" + c + "'");
  return cells;
}

std::string summary_line(const VerificationReport& r) {
  std::string line = r.check + ' ' + r.params.dump() + ' ' + to_string(r.status);
  if (r.sign) line += " sign " + std::to_string(*r.sign);
  if (r.literal_holds) line += std::string(" literal ") + (*r.literal_holds ? "holds" : "fails");
  line += " cases " + std::to_string(r.total_cases) + " (" + std::to_string(r.elapsed_ms) + " ms)";
  if (!r.note.empty()) line += " : " + r.note;
  return line;
}

int finish_reports(const Options& o, const std::vector<VerificationReport>& reports) {
  Json all = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    all.push_back(r.to_json());
    ok = ok && meets_expectation(r);
  }
  if (!o.json_path.empty()) emit(o.json_path, all.dump(2) + "\n");
  if (o.json_path != "-")
    for (const auto& r : reports)
      if (r.status == Status::Fail)
        for (const Failure& f : r.failures)
          std::cerr << "  " << r.check << " failure " << edges_to_string(f.graph) << (f.term.empty() ? "" : " [" + f.term + "]")
                    << " expected " << f.expected << " actual " << f.actual << '\n';
  return ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.k < 0) throw UsageError("--k must be nonnegative");
  std::vector<VerificationReport> reports;
  for (auto& [params, run] : expand_check(o)) {
    reports.push_back(run());
    if (o.json_path != "-") std::cout << summary_line(reports.back()) << std::endl;
  }
  return finish_reports(o, reports);
}

int cmd_suite(const Options& o) {
  SuiteConfig config;
  config.max_n = o.max_n;
  config.max_k = o.max_k;
  config.jobs = o.jobs;
  config.cap = o.policy().cap;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool quiet = o.json_path == "-";
  const auto reports = run_suite(config, [&](const VerificationReport& r) {
    if (!quiet) std::cout << summary_line(r) << std::endl;
  });
  return finish_reports(o, reports);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact graph-algebra toolkit: universal minors, the Laplace operator, Potts/Tutte elements, identity checks."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cap", o.cap, "largest enumeration allowed (default 10^7, or MTT_CAP)")->check(CLI::PositiveNumber);

  auto shape = [&](CLI::App* sub, bool need_n) {
    auto* opt = sub->add_option("--n", o.n, "vertex count");
    if (need_n) opt->required();
    sub->add_option("--k", o.k, "edge count");
  };
  auto io = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) sub->add_option("input", o.input, "input file, '-' for stdin");
    sub->add_option("-o,--output", o.output, "output file, '-' for stdout");
  };

  auto* classify_cmd = app.add_subcommand("classify", "topology and class membership of a graph file");
  io(classify_cmd, true);
  classify_cmd->add_option("--json", o.json_path, "write JSON to this path ('-' for stdout)");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list Gamma_{n,k}, Upsilon_{n,k} or a class SSC^I / AC^I");
  shape(enumerate_cmd, true);
  io(enumerate_cmd, false);
  enumerate_cmd->add_option("--class", o.cls, "ssc or ac");
  enumerate_cmd->add_option("--sinks", o.sinks, "exact sink set for --class ac, e.g. 1,3");
  enumerate_cmd->add_option("--isolated", o.isolated, "exact isolated set for --class ssc");
  enumerate_cmd->add_flag("--undirected", o.undirected, "undirected multigraphs");

  auto* det_cmd = app.add_subcommand("det", "universal diagonal or codimension-one minor as a formal sum");
  shape(det_cmd, true);
  io(det_cmd, false);
  det_cmd->add_option("--isolated", o.isolated, "the set I of det^I, e.g. 1,2");
  det_cmd->add_option("--minor", o.minor, "codimension-one minor i/j");

  auto* laplace_cmd = app.add_subcommand("laplace", "apply the Laplace operator to a formal sum file");
  io(laplace_cmd, true);

  auto* pair_cmd = app.add_subcommand("pair", "pair a formal sum with the symbolic weight matrix");
  io(pair_cmd, true);
  pair_cmd->add_flag("--laplacian", o.laplacian, "pair with the Laplace matrix instead");

  auto* potts_cmd = app.add_subcommand("potts", "Potts polynomial of a graph file, or the universal Potts element with --n --k");
  shape(potts_cmd, false);
  io(potts_cmd, true);
  potts_cmd->add_option("--q", o.q, "value of q, p/q allowed");
  potts_cmd->add_option("--v", o.v, "value of v, p/q allowed");
  potts_cmd->add_flag("--shaved", o.shaved, "drop loops first");

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial of a graph file");
  io(tutte_cmd, true);

  auto* theta_cmd = app.add_subcommand("theta", "the graded element Theta_n");
  theta_cmd->add_option("--n", o.n, "vertex count")->required();
  io(theta_cmd, false);

  const std::vector<std::string> checks{"direct",        "direct-prime",     "mobius", "diag",    "codim1",     "expansion",
                                        "derivative",    "minor-pairing",    "kirchhoff-diag",   "kirchhoff-codim1",
                                        "cayley",        "specval",          "tutte",  "lapl-tutte", "theta", "theta-derived",
                                        "operator-laws", "det-recovery"};
  auto* verify_cmd = app.add_subcommand("verify", "run one identity check");
  verify_cmd->add_option("check", o.check, "check name")->required()->check(CLI::IsMember(checks));
  shape(verify_cmd, true);
  verify_cmd->add_option("--sinks", o.sinks, "the set I (all sets when omitted)");
  verify_cmd->add_option("--minor", o.minor, "the pair i/j (all pairs when omitted)");
  verify_cmd->add_option("--vertex", o.vertex, "derivative vertex i (all when omitted)");
  verify_cmd->add_option("--m", o.m, "derivative order (all 1..k when omitted)");
  verify_cmd->add_option("--json", o.json_path, "write the JSON report array here ('-' for stdout)");

  auto* suite_cmd = app.add_subcommand("suite", "every check over the grid n <= max-n, k <= max-k");
  suite_cmd->add_option("--max-n", o.max_n, "largest n");
  suite_cmd->add_option("--max-k", o.max_k, "largest k");
  suite_cmd->add_option("--json", o.json_path, "write the JSON report array here ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::map<CLI::App*, std::function<int(const Options&)>> handlers{
      {classify_cmd, cmd_classify}, {enumerate_cmd, cmd_enumerate}, {det_cmd, cmd_det},     {laplace_cmd, cmd_laplace},
      {pair_cmd, cmd_pair},         {potts_cmd, cmd_potts},         {tutte_cmd, cmd_tutte}, {theta_cmd, cmd_theta},
      {verify_cmd, cmd_verify},     {suite_cmd, cmd_suite}};
  try {
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(o);
  } catch (const ScaleCapExceeded& e) {
    std::cerr << "scale cap: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
