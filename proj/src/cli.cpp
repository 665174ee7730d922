#include "tlbasis/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "tlbasis/bijection.hpp"
#include "tlbasis/errors.hpp"
#include "tlbasis/json_io.hpp"
#include "tlbasis/render.hpp"
#include "tlbasis/verify.hpp"
#include "tlbasis/xbasis.hpp"
#include "tlbasis/zinno.hpp"

namespace tlbasis::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// --in accepts inline JSON, a path, or "-" / nothing for standard input.
std::string read_input(const std::string& in) {
  const auto first = in.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (in[first] == '{' || in[first] == '[')) return in;
  if (in.empty() || in == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return read_file(in);
}

enum class Shape { object, array, lines };

// A single object, an array of objects, or one object per line.
std::vector<json> parse_records(const std::string& text, Shape& shape) {
  try {
    json j = json_io::parse(text);
    if (j.is_array()) {
      shape = Shape::array;
      return {j.begin(), j.end()};
    }
    shape = Shape::object;
    return {j};
  } catch (const FormatError&) {
    std::istringstream lines(text);
    std::vector<json> out;
    for (std::string line; std::getline(lines, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(json_io::parse(line));
    if (out.size() < 2) throw;
    shape = Shape::lines;
    return out;
  }
}

std::string dump_records(const std::vector<json>& records, Shape shape) {
  std::string s;
  if (shape == Shape::object) return records.front().dump() + "\n";
  if (shape == Shape::lines) {
    for (const auto& r : records) s += r.dump() + "\n";
    return s;
  }
  s = "[";
  for (std::size_t k = 0; k < records.size(); ++k) s += (k ? ",\n " : "\n ") + records[k].dump();
  return s + (records.empty() ? "]\n" : "\n]\n");
}

json fc_record(const FullyCommutative& w, std::optional<std::size_t> index) {
  json r = json_io::to_json(w);
  if (index) {
    r["index"] = *index;
    r["lS"] = w.length();
    r["lT"] = reflection_length(w.perm());
  }
  return r;
}

json nc_record(const NoncrossingPartition& x, std::optional<std::size_t> index) {
  json r = json_io::to_json(x);
  if (index) {
    r["index"] = *index;
    r["lS"] = x.length();
    r["lT"] = x.reflection_length();
  }
  return r;
}

std::optional<std::size_t> index_of(const json& record) {
  if (record.is_object() && record.contains("index")) {
    if (!record["index"].is_number_unsigned()) throw FormatError("index must be a nonnegative integer");
    return record["index"].get<std::size_t>();
  }
  return std::nullopt;
}

struct Session {
  Config cfg;
  std::ostream& out;

  void emit(const std::string& content) const {
    if (cfg.out.empty())
      out << content;
    else
      write_atomically(cfg.out, content);
  }

  int rank() const {
    if (cfg.n == 0) throw FormatError("--n is required");
    check_rank(cfg.n);
    return cfg.n;
  }

  void check_rank(int n) const {
    if (n < 1 || n > cfg.max_n) throw PreconditionError("rank must lie in 1.." + std::to_string(cfg.max_n));
  }

  MatrixOptions matrix_options() const {
    MatrixOptions o;
    o.max_n = cfg.max_n;
    return o;
  }
};

// ---- enumerate / map ----

int cmd_enumerate(const Session& s, const std::string& kind) {
  const int n = s.rank();
  const auto& order = BasisOrder::get(n);
  std::vector<json> records;
  for (std::size_t k = 0; k < order.size(); ++k)
    records.push_back(kind == "fc" ? fc_record(order.fully_commutative()[k], k) : nc_record(order.partitions()[k], k));
  const std::string& f = s.cfg.format;
  if (!f.empty() && f != "json" && f != "jsonl") throw PreconditionError("enumerate formats: json, jsonl");
  s.emit(dump_records(records, f == "jsonl" ? Shape::lines : Shape::array));
  return kOk;
}

int cmd_map(const Session& s, const std::string& dir, const std::string& in) {
  Shape shape{};
  auto records = parse_records(read_input(in), shape);
  for (auto& r : records) {
    const auto index = index_of(r);
    if (dir == "phi") {
      const auto x = json_io::nc_from_json(r);
      s.check_rank(x.rank());
      r = fc_record(phi(x), index);
    } else {
      const auto w = json_io::fc_from_json(r);
      s.check_rank(w.rank());
      r = nc_record(psi(w), index);
    }
  }
  s.emit(dump_records(records, shape));
  return kOk;
}

// ---- expand ----

std::vector<LaurentPoly> column(const LaurentMatrix& m, std::size_t col) {
  std::vector<LaurentPoly> v(m.dim());
  for (std::size_t row = 0; row < m.dim(); ++row) v[row] = m.at(row, col);
  return v;
}

std::vector<LaurentPoly> from_element(const TLElement& t, const BasisOrder& order) {
  std::vector<LaurentPoly> v(order.size());
  for (const auto& [idx, c] : t.indexed_terms()) v[order.position_of_table_index(idx)] = c;
  return v;
}

json coefficient_terms(const std::vector<LaurentPoly>& v, const BasisOrder& order, bool by_partition) {
  json terms = json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    json t = by_partition ? json{{"blocks", order.partitions()[k].blocks()}}
                          : json{{"J", order.fully_commutative()[k].J()}, {"I", order.fully_commutative()[k].I()}};
    t["coeff"] = json_io::to_json(v[k]);
    terms.push_back(std::move(t));
  }
  return terms;
}

int cmd_expand(const Session& s, const std::string& what, const std::string& in, const std::string& basis) {
  const json j = json_io::parse(read_input(in));
  std::optional<NoncrossingPartition> x;
  std::optional<FullyCommutative> w;
  if (what == "Zx")
    x = json_io::nc_from_json(j);
  else
    w = json_io::fc_from_json(j);
  const int n = x ? x->rank() : w->rank();
  s.check_rank(n);
  const auto& order = BasisOrder::get(n);
  const std::size_t pos = x ? order.position(*x) : order.position(*w);

  std::vector<LaurentPoly> v;
  auto unit = [&] {
    std::vector<LaurentPoly> e(order.size());
    e[pos] = LaurentPoly::constant(1);
    return e;
  };
  auto xz = [&] { return x_in_zinno_matrix(n).entries; };
  auto h = [&] { return invert_triangular(z_matrix(n, s.matrix_options())).entries; };
  if (what == "Zx") {
    if (basis == "diagram") v = from_element(zinno_element(*x), order);
    if (basis == "zinno") v = unit();
    if (basis == "x") v = column(invert_upper_triangular(xz()), pos);
  } else if (what == "bw") {
    if (basis == "diagram") v = unit();
    if (basis == "zinno") v = column(h(), pos);
    if (basis == "x") v = column(invert_upper_triangular(xz()) * h(), pos);
  } else {
    if (basis == "diagram") v = from_element(x_element(*w).value, order);
    if (basis == "zinno") v = column(xz(), pos);
    if (basis == "x") v = unit();
  }
  json result{{"n", n}, {"basis", basis}, {"terms", coefficient_terms(v, order, basis == "zinno")}};
  s.emit(result.dump() + "\n");
  return kOk;
}

// ---- matrix ----

std::string latex_entry(const std::string& text) {
  static const std::regex exponent(R"(v\^(-?[0-9]+))");
  return std::regex_replace(text, exponent, "v^{$1}");
}

std::string latex_label(const std::string& text) {
  static const std::regex generator(R"(s([0-9]+))");
  return std::regex_replace(text, generator, "s_{$1}");
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string q = "\"";
  for (char ch : text) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

int cmd_matrix(const Session& s, const std::string& which) {
  const int n = s.rank();
  const auto& order = BasisOrder::get(n);
  auto m = z_matrix(n, s.matrix_options());
  if (which == "H") m = invert_triangular(m);
  // M: rows b_w, columns Z_x. H: rows Z_x, columns b_w.
  std::vector<std::string> fc_labels, nc_labels;
  for (const auto& w : order.fully_commutative()) fc_labels.push_back(to_string(w));
  for (const auto& x : order.partitions()) nc_labels.push_back(to_string(x));
  const auto& rows = which == "M" ? fc_labels : nc_labels;
  const auto& cols = which == "M" ? nc_labels : fc_labels;
  const LaurentMatrix& e = m.entries;

  const std::string f = s.cfg.format.empty() ? "json" : s.cfg.format;
  std::ostringstream o;
  if (f == "json") {
    o << '[';
    for (std::size_t i = 0; i < e.dim(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < e.dim(); ++k) row.push_back(json_io::to_json(e.at(i, k)));
      o << (i ? ",\n " : "\n ") << row.dump();
    }
    o << "\n]\n";
  } else if (f == "csv") {
    for (const auto& c : cols) o << ',' << csv_field(c);
    o << '\n';
    for (std::size_t i = 0; i < e.dim(); ++i) {
      o << csv_field(rows[i]);
      for (std::size_t k = 0; k < e.dim(); ++k) o << ',' << csv_field(to_string(e.at(i, k)));
      o << '\n';
    }
  } else if (f == "latex") {
    o << "\\begin{tabular}{c|" << std::string(e.dim(), 'c') << "}\n";
    for (const auto& c : cols) o << " & $" << latex_label(c) << '$';
    o << " \\\\\n\\hline\n";
    for (std::size_t i = 0; i < e.dim(); ++i) {
      o << '$' << latex_label(rows[i]) << '$';
      for (std::size_t k = 0; k < e.dim(); ++k) o << " & $" << latex_entry(to_string(e.at(i, k))) << '$';
      o << " \\\\\n";
    }
    o << "\\end{tabular}\n";
  } else {
    throw PreconditionError("matrix formats: json, csv, latex");
  }
  s.emit(o.str());
  return kOk;
}

// ---- verify / render ----

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::istringstream in(list);
  for (std::string name; std::getline(in, name, ',');)
    if (!name.empty()) out.push_back(name);
  return out;
}

int cmd_verify(const Session& s, const std::string& only, const std::string& report_path) {
  const int n = s.rank();
  const auto reports = run_all(n, split_names(only));
  std::size_t passed = 0;
  std::ostringstream o;
  for (const auto& r : reports) {
    passed += r.passed();
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3fs", r.elapsed.count());
    o << (r.passed() ? "PASS " : "FAIL ") << r.name << "  n=" << r.n << " cases=" << r.cases << "  " << elapsed << '\n';
    if (!r.passed()) o << "     " << r.failure_count << " failure(s); first: " << r.failures.front().dump() << '\n';
  }
  o << passed << '/' << reports.size() << " checks passed\n";
  s.out << o.str();
  if (!report_path.empty()) write_atomically(report_path, to_json(reports).dump(2) + "\n");
  return all_passed(reports) ? kOk : kCheckFailed;
}

int cmd_render(const Session& s, const std::string& in) {
  const json j = json_io::parse(read_input(in));
  std::string svg;
  if (j.is_object() && j.contains("blocks")) {
    const auto x = json_io::nc_from_json(j);
    s.check_rank(x.rank());
    svg = render_svg(x);
  } else if (j.is_object() && j.contains("pairs")) {
    const auto d = json_io::diagram_from_json(j);
    s.check_rank(d.rank());
    svg = render_svg(d);
  } else {
    const auto w = json_io::fc_from_json(j);
    s.check_rank(w.rank());
    svg = render_svg(fc_to_diagram(w));
  }
  s.emit(svg);
  return kOk;
}

}  // namespace

void write_atomically(const std::string& path, const std::string& content) {
  const fs::path target(path);
  std::random_device rd;
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    f.close();
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot replace " + path + ": " + ec.message());
  }
}

Config load_config(const std::string& path) {
  const json j = json_io::parse(read_file(path));
  if (!j.is_object()) throw FormatError("config must be a JSON object");
  Config c;
  auto get_int = [&](const char* key, int& dst) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer()) throw FormatError(std::string(key) + " must be an integer");
    dst = j[key].get<int>();
  };
  auto get_str = [&](const char* key, std::string& dst) {
    if (!j.contains(key)) return;
    if (!j[key].is_string()) throw FormatError(std::string(key) + " must be a string");
    dst = j[key].get<std::string>();
  };
  get_int("n", c.n);
  get_int("max_n", c.max_n);
  get_str("out", c.out);
  get_str("format", c.format);
  get_str("order_tiebreak", c.order_tiebreak);
  return c;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Temperley-Lieb bases: diagram, Zinno and X", "tlbasis"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  int n = 0;
  std::string out_path, format, config_path;
  app.add_option("--n", n, "Rank n: TL_n, permutations of 1..n+1");
  app.add_option("--out", out_path, "Output file, written atomically (default: standard output)");
  app.add_option("--format", format, "enumerate: json|jsonl; matrix: json|csv|latex");
  app.add_option("--config", config_path, "JSON config; flags override it")->check(CLI::ExistingFile);

  std::string kind, dir, in, what, basis = "diagram", which = "M", only, report;
  auto* enumerate = app.add_subcommand("enumerate", "List W_f or P_c in matrix order");
  enumerate->add_option("--kind", kind, "fc or nc")->required()->check(CLI::IsMember({"fc", "nc"}));
  auto* map = app.add_subcommand("map", "Apply phi (P_c -> W_f) or psi (W_f -> P_c)");
  map->add_option("--dir", dir, "phi or psi")->required()->check(CLI::IsMember({"phi", "psi"}));
  map->add_option("--in", in, "JSON text, file, or - for standard input");
  auto* expand = app.add_subcommand("expand", "Expand Z_x, b_w or X_w in a basis");
  expand->add_option("--what", what, "Zx, bw or Xw")->required()->check(CLI::IsMember({"Zx", "bw", "Xw"}));
  expand->add_option("--in", in, "JSON text, file, or - for standard input");
  expand->add_option("--basis", basis, "diagram, zinno or x")->check(CLI::IsMember({"diagram", "zinno", "x"}));
  auto* matrix = app.add_subcommand("matrix", "Export M (Z in diagram basis) or H = M^-1");
  matrix->add_option("--which", which, "M or H")->check(CLI::IsMember({"M", "H"}));
  auto* verify = app.add_subcommand("verify", "Run the statement checks");
  verify->add_option("--only", only, "Comma-separated check names");
  verify->add_option("--report", report, "Write the JSON report here");
  auto* render = app.add_subcommand("render", "SVG of a noncrossing partition or TL diagram");
  render->add_option("--in", in, "JSON text, file, or - for standard input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    Config cfg = config_path.empty() ? Config{} : load_config(config_path);
    if (app.count("--n")) {
      if (n < 1) throw PreconditionError("rank must be at least 1");
      cfg.n = n;
    }
    if (app.count("--out")) cfg.out = out_path;
    if (app.count("--format")) cfg.format = format;
    if (cfg.order_tiebreak != "lexicographic") throw PreconditionError("order_tiebreak supports only lexicographic");
    if (cfg.max_n < 1 || cfg.max_n > 8) throw PreconditionError("max_n must lie in 1..8");
    const Session s{cfg, out};
    if (*enumerate) return cmd_enumerate(s, kind);
    if (*map) return cmd_map(s, dir, in);
    if (*expand) return cmd_expand(s, what, in, basis);
    if (*matrix) return cmd_matrix(s, which);
    if (*verify) return cmd_verify(s, only, report);
    return cmd_render(s, in);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace tlbasis::cli
