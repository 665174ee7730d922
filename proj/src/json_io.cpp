#include "tlbasis/json_io.hpp"

#include <charconv>
#include <string>

#include "tlbasis/errors.hpp"

namespace tlbasis::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_int(e, what));
  return out;
}

int parse_exponent(const std::string& s) {
  int value = 0;
  const char* first = s.data();
  const char* last = first + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || s.empty()) throw FormatError("bad exponent key \"" + s + "\"");
  return value;
}

BigInt parse_coefficient(const json& j) {
  std::string s;
  if (j.is_string())
    s = j.get<std::string>();
  else if (j.is_number_integer())
    s = j.dump();
  else
    throw FormatError("coefficient must be a decimal string");
  const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw FormatError("bad coefficient \"" + s + "\"");
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

int parse_label(const std::string& label, int n) {
  if (label.size() < 2 || (label[0] != 'T' && label[0] != 'B')) throw FormatError("bad point label \"" + label + "\"");
  const int k = parse_exponent(label.substr(1));
  if (k < 1 || k > n + 1) throw PreconditionError("point label out of range: " + label);
  return label[0] == 'T' ? k - 1 : n + k;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.str();
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("a Laurent polynomial is a JSON object");
  LaurentPoly out;
  for (const auto& [key, value] : j.items()) out += LaurentPoly::monomial(parse_coefficient(value), parse_exponent(key));
  return out;
}

json to_json(const Permutation& p) { return {{"n", p.rank()}, {"window", p.window()}}; }

Permutation permutation_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  require_rank(n);
  auto window = int_list(field(j, "window"), "window");
  if (static_cast<int>(window.size()) != n + 1) throw PreconditionError("window length must be n+1");
  return Permutation(std::move(window));
}

json to_json(const FullyCommutative& w) { return {{"n", w.rank()}, {"J", w.J()}, {"I", w.I()}}; }

FullyCommutative fc_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  return FullyCommutative::from_sets(n, int_list(field(j, "J"), "J"), int_list(field(j, "I"), "I"));
}

json to_json(const NoncrossingPartition& x) { return {{"n", x.rank()}, {"blocks", x.blocks()}}; }

NoncrossingPartition nc_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw FormatError("blocks must be an array");
  std::vector<Block> out;
  for (const auto& b : blocks) out.push_back(int_list(b, "block"));
  return NoncrossingPartition::from_blocks(n, std::move(out));
}

json to_json(const SignedWord& m) {
  json letters = json::array();
  for (const auto& l : m) letters.push_back({l.index, l.sign});
  return {{"letters", letters}};
}

SignedWord signed_word_from_json(const json& j) {
  const json& letters = field(j, "letters");
  if (!letters.is_array()) throw FormatError("letters must be an array");
  SignedWord out;
  for (const auto& l : letters) {
    if (!l.is_array() || l.size() != 2) throw FormatError("a letter is an [index, sign] pair");
    const int sign = as_int(l[1], "sign");
    if (sign != 1 && sign != -1) throw PreconditionError("sign must be 1 or -1");
    out.push_back({as_int(l[0], "index"), sign});
  }
  return out;
}

json to_json(const TLElement& t) {
  json terms = json::array();
  for (const auto& [w, c] : t.terms()) terms.push_back({{"J", w.J()}, {"I", w.I()}, {"coeff", to_json(c)}});
  return {{"n", t.rank()}, {"terms", terms}};
}

TLElement tl_element_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  require_rank(n);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw FormatError("terms must be an array");
  TLElement out(n);
  for (const auto& t : terms) {
    const auto w = FullyCommutative::from_sets(n, int_list(field(t, "J"), "J"), int_list(field(t, "I"), "I"));
    out.add_term(w, laurent_from_json(field(t, "coeff")));
  }
  return out;
}

json to_json(const TLDiagram& d) {
  json pairs = json::array();
  for (const auto& [a, b] : d.pairs()) pairs.push_back({point_label(d, a), point_label(d, b)});
  return {{"n", d.rank()}, {"pairs", pairs}};
}

TLDiagram diagram_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "n");
  require_rank(n);
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw FormatError("pairs must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw FormatError("a pair is two point labels");
    out.emplace_back(parse_label(p[0].get<std::string>(), n), parse_label(p[1].get<std::string>(), n));
  }
  return TLDiagram::from_pairs(n, out);
}

json to_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tlbasis::json_io
