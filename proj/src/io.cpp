#include "symred/io.hpp"

#include <cctype>
#include <map>
#include <set>

#include "symred/errors.hpp"

namespace symred {

namespace {

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

std::string where(Position p) {
  return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column);
}

struct Value {
  enum class Kind { Atom, String, List } kind = Kind::Atom;
  std::string text;
  std::vector<Value> items;
  Position pos;
};

struct Entry {
  std::string key;
  Value value;
  Position pos;
};

struct Section {
  std::string name;      // "setup", "model", "generator", ...
  std::string argument;  // generator name
  std::vector<Entry> entries;
  Position pos;
};

// Character stream over the text with comments removed, tracking positions.
class Scanner {
 public:
  explicit Scanner(std::string_view text) {
    std::size_t line = 1;
    std::size_t col = 1;
    bool comment = false;
    bool quoted = false;
    for (char c : text) {
      if (c == '\n') {
        chars_.push_back({c, {line, col}});
        ++line;
        col = 1;
        comment = false;
        quoted = false;
        continue;
      }
      if (!comment && c == '"') quoted = !quoted;
      if (!quoted && c == '#') comment = true;
      if (!comment) chars_.push_back({c, {line, col}});
      ++col;
    }
    end_ = {line, col};
  }

  bool done() const { return i_ >= chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[i_].c; }
  Position pos() const { return done() ? end_ : chars_[i_].pos; }
  char get() { return chars_[i_++].c; }

  void skip_blanks() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++i_;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw InputError(where(pos()) + ": " + what); }

 private:
  struct Char {
    char c;
    Position pos;
  };
  std::vector<Char> chars_;
  std::size_t i_ = 0;
  Position end_;
};

bool atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '/' || c == '-' || c == '+' || c == '.';
}

Value parse_value(Scanner& sc) {
  sc.skip_space();
  Value v;
  v.pos = sc.pos();
  if (sc.peek() == '[') {
    sc.get();
    v.kind = Value::Kind::List;
    sc.skip_space();
    if (sc.peek() == ']') {
      sc.get();
      return v;
    }
    for (;;) {
      v.items.push_back(parse_value(sc));
      sc.skip_space();
      if (sc.peek() == ',') {
        sc.get();
        continue;
      }
      if (sc.peek() == ']') {
        sc.get();
        return v;
      }
      sc.fail("expected ',' or ']'");
    }
  }
  if (sc.peek() == '"') {
    sc.get();
    v.kind = Value::Kind::String;
    while (!sc.done() && sc.peek() != '"' && sc.peek() != '\n') v.text += sc.get();
    if (sc.peek() != '"') sc.fail("unterminated string");
    sc.get();
    return v;
  }
  while (!sc.done() && atom_char(sc.peek())) v.text += sc.get();
  if (v.text.empty()) sc.fail(sc.done() || sc.peek() == '\n' ? "missing value" : std::string("unexpected '") + sc.peek() + "'");
  return v;
}

void expect_line_end(Scanner& sc) {
  sc.skip_blanks();
  if (!sc.done() && sc.peek() != '\n') sc.fail(std::string("unexpected '") + sc.peek() + "'");
}

std::vector<Section> parse_sections(std::string_view text) {
  Scanner sc(text);
  std::vector<Section> sections;
  for (;;) {
    sc.skip_space();
    if (sc.done()) break;
    const Position start = sc.pos();
    if (sc.peek() == '[') {
      sc.get();
      std::string header;
      while (!sc.done() && sc.peek() != ']' && sc.peek() != '\n') header += sc.get();
      if (sc.peek() != ']') sc.fail("expected ']' closing section header");
      sc.get();
      expect_line_end(sc);
      Section s;
      s.pos = start;
      const auto first = header.find_first_not_of(" \t");
      const auto last = header.find_last_not_of(" \t");
      if (first == std::string::npos) throw InputError(where(start) + ": empty section header");
      header = header.substr(first, last - first + 1);
      const auto space = header.find_first_of(" \t");
      s.name = header.substr(0, space);
      if (space != std::string::npos) {
        s.argument = header.substr(space);
        s.argument = s.argument.substr(s.argument.find_first_not_of(" \t"));
      }
      sections.push_back(std::move(s));
      continue;
    }
    std::string key;
    while (!sc.done() && (std::isalnum(static_cast<unsigned char>(sc.peek())) || sc.peek() == '_')) key += sc.get();
    if (key.empty()) sc.fail(std::string("unexpected '") + sc.peek() + "'");
    sc.skip_blanks();
    if (sc.peek() != '=') sc.fail("expected '=' after key " + key);
    sc.get();
    sc.skip_blanks();
    if (sc.done() || sc.peek() == '\n') sc.fail("missing value for key " + key);
    Value v = parse_value(sc);
    expect_line_end(sc);
    if (sections.empty()) throw InputError(where(start) + ": key " + key + " outside any section");
    sections.back().entries.push_back({key, std::move(v), start});
  }
  return sections;
}

// Key lookup within one section, with unknown/duplicate key detection.
class Keys {
 public:
  Keys(const Section& s, std::set<std::string> allowed) {
    for (const auto& e : s.entries) {
      if (!allowed.contains(e.key)) throw InputError(where(e.pos) + ": unknown key " + e.key);
      if (!map_.emplace(e.key, &e.value).second) throw InputError(where(e.pos) + ": duplicate key " + e.key);
    }
  }
  const Value* find(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }
  const Value& require(const std::string& key, const std::string& section) const {
    const Value* v = find(key);
    if (!v) throw InputError(key + ": missing in [" + section + "]");
    return *v;
  }

 private:
  std::map<std::string, const Value*> map_;
};

Rational as_rational(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::Atom) throw InputError(key + ": expected a number at " + where(v.pos));
  try {
    return parse_rational(v.text);
  } catch (const InputError&) {
    throw InputError(key + ": invalid number '" + v.text + "' at " + where(v.pos));
  }
}

std::size_t as_count(const Value& v, const std::string& key) {
  const Rational q = as_rational(v, key);
  if (!is_integer(q) || q < 0) throw InputError(key + ": expected a nonnegative integer at " + where(v.pos));
  if (q > 1000000) throw InputError(key + ": value too large at " + where(v.pos));
  return q.get_num().get_ui();
}

bool as_bool(const Value& v, const std::string& key) {
  if (v.kind == Value::Kind::Atom && v.text == "true") return true;
  if (v.kind == Value::Kind::Atom && v.text == "false") return false;
  throw InputError(key + ": expected true or false at " + where(v.pos));
}

const std::vector<Value>& as_list(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::List) throw InputError(key + ": expected a list at " + where(v.pos));
  return v.items;
}

RatVector as_vector(const Value& v, const std::string& key, std::size_t expected) {
  const auto& items = as_list(v, key);
  if (items.size() != expected)
    throw InputError(key + ": expected " + std::to_string(expected) + " entries, got " + std::to_string(items.size()) +
                     " at " + where(v.pos));
  RatVector out;
  for (const auto& it : items) out.push_back(as_rational(it, key));
  return out;
}

std::vector<RatVector> as_matrix(const Value& v, const std::string& key, std::size_t rows, std::size_t cols) {
  const auto& items = as_list(v, key);
  if (items.size() != rows)
    throw InputError(key + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(items.size()));
  std::vector<RatVector> out;
  for (const auto& row : items) out.push_back(as_vector(row, key, cols));
  return out;
}

std::string matrix_text(const std::vector<RatVector>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ", ";
    s += to_string(rows[i]);
  }
  return s + "]";
}

std::string quote_list(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ", ";
    s += "\"" + items[i] + "\"";
  }
  return s + "]";
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

SetupFile parse_setup_file(std::string_view text) {
  const auto sections = parse_sections(text);
  SetupFile out;
  const Section* setup = nullptr;
  const Section* options = nullptr;
  for (const auto& s : sections) {
    const Section** slot = s.name == "setup" ? &setup : s.name == "options" ? &options : nullptr;
    if (!slot || !s.argument.empty()) throw InputError(where(s.pos) + ": unknown section [" + s.name + "]");
    if (*slot) throw InputError(where(s.pos) + ": duplicate section [" + s.name + "]");
    *slot = &s;
  }
  if (!setup) throw InputError("missing [setup] section");

  const Keys keys(*setup, {"n", "d", "A", "eta"});
  const std::size_t n = as_count(keys.require("n", "setup"), "n");
  const std::size_t d = as_count(keys.require("d", "setup"), "d");
  const auto rows = as_matrix(keys.require("A", "setup"), "A", n, d);
  out.setup.weights = RatMatrix::from_rows(rows, d);
  out.setup.level = as_vector(keys.require("eta", "setup"), "eta", d);
  check_setup_shape(out.setup);

  if (options) {
    const Keys opt(*options, {"max_degree", "oracle"});
    if (const Value* v = opt.find("max_degree")) out.max_degree = static_cast<unsigned>(as_count(*v, "max_degree"));
    if (const Value* v = opt.find("oracle")) out.oracle = as_bool(*v, "oracle");
  }
  return out;
}

std::string emit_setup_file(const SetupFile& f) {
  const auto& s = f.setup;
  std::string out = "[setup]\n";
  out += "n = " + std::to_string(s.num_coords()) + "\n";
  out += "d = " + std::to_string(s.group_rank()) + "\n";
  out += "A = " + matrix_text(s.weights.row_list()) + "\n";
  out += "eta = " + to_string(s.level) + "\n";
  if (f.max_degree || f.oracle) {
    out += "\n[options]\n";
    if (f.max_degree) out += "max_degree = " + std::to_string(*f.max_degree) + "\n";
    if (f.oracle) out += "oracle = true\n";
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> void {
    throw InputError("polynomial \"" + std::string(text) + "\", column " + std::to_string(i + 1) + ": " + what);
  };
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto digits = [&] {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };

  Polynomial out(nvars);
  skip();
  if (i == text.size()) fail("empty polynomial");
  bool first = true;
  while (i < text.size()) {
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = sign;
    Monomial m(nvars, 0);
    for (;;) {
      skip();
      if (i < text.size() && text[i] == 'u') {
        ++i;
        const std::string idx = digits();
        if (idx.empty()) fail("expected variable index after 'u'");
        const unsigned long k = std::stoul(idx);
        if (k == 0 || k > nvars) fail("variable u" + idx + " out of range u1..u" + std::to_string(nvars));
        unsigned power = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          const std::string e = digits();
          if (e.empty()) fail("expected exponent after '^'");
          power = static_cast<unsigned>(std::stoul(e));
        }
        m[k - 1] += power;
      } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::string num = digits();
        if (i < text.size() && text[i] == '/') {
          ++i;
          const std::string den = digits();
          if (den.empty()) fail("expected denominator after '/'");
          num += "/" + den;
        }
        try {
          coeff *= parse_rational(num);
        } catch (const InputError& e) {
          fail(e.what());
        }
      } else {
        fail("expected a number or a variable");
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    out.add_term(m, coeff);
    skip();
  }
  return out;
}

ModelFile parse_model_file(std::string_view text) {
  const auto sections = parse_sections(text);
  ModelFile out;
  FixedPointModel& md = out.model;
  const Section* model = nullptr;
  std::vector<const Section*> gens;
  std::set<std::string> gen_names;
  for (const auto& s : sections) {
    if (s.name == "model" && s.argument.empty()) {
      if (model) throw InputError(where(s.pos) + ": duplicate section [model]");
      model = &s;
    } else if (s.name == "generator") {
      if (!valid_label(s.argument)) throw InputError(where(s.pos) + ": generator needs a name");
      if (!gen_names.insert(s.argument).second)
        throw InputError(where(s.pos) + ": duplicate generator " + s.argument);
      gens.push_back(&s);
    } else {
      throw InputError(where(s.pos) + ": unknown section [" + s.name + "]");
    }
  }
  if (!model) throw InputError("missing [model] section");

  const Keys keys(*model, {"r", "points", "mu", "cap"});
  md.torus_rank = as_count(keys.require("r", "model"), "r");
  for (const auto& p : as_list(keys.require("points", "model"), "points")) {
    if (p.kind != Value::Kind::Atom || !valid_label(p.text))
      throw InputError("points: invalid label at " + where(p.pos));
    md.points.push_back(p.text);
  }
  if (md.points.empty()) throw InputError("points: at least one fixed point is required");
  if (md.points.size() > IndexSet::kMaxSize) throw InputError("points: at most 32 fixed points supported");
  if (std::set<std::string>(md.points.begin(), md.points.end()).size() != md.points.size())
    throw InputError("points: duplicate label");
  md.moment_images = as_matrix(keys.require("mu", "model"), "mu", md.points.size(), md.torus_rank);
  md.degree_cap = static_cast<unsigned>(as_count(keys.require("cap", "model"), "cap"));

  for (const Section* s : gens) {
    const Keys g(*s, {"degree", "restrict"});
    ModelGenerator gen;
    gen.name = s->argument;
    const Rational deg = as_rational(g.require("degree", "generator " + gen.name), "degree");
    if (!is_integer(deg) || abs(deg) > 1000)
      throw InputError("degree: expected an integer for generator " + gen.name);
    gen.degree = static_cast<int>(deg.get_num().get_si());
    const auto& items = as_list(g.require("restrict", "generator " + gen.name), "restrict");
    if (items.size() != md.points.size())
      throw InputError("restrict: generator " + gen.name + " has " + std::to_string(items.size()) +
                       " restrictions for " + std::to_string(md.points.size()) + " points");
    for (const auto& it : items) {
      if (it.kind != Value::Kind::String)
        throw InputError("restrict: expected a quoted polynomial at " + where(it.pos));
      try {
        gen.restrictions.push_back(parse_polynomial(it.text, md.torus_rank));
      } catch (const InputError& e) {
        throw InputError("restrict: " + std::string(e.what()) + " at " + where(it.pos));
      }
    }
    md.generators.push_back(std::move(gen));
  }
  return out;
}

std::string emit_model_file(const ModelFile& f, const std::vector<std::string>& comments) {
  const auto& md = f.model;
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "[model]\n";
  out += "r = " + std::to_string(md.torus_rank) + "\n";
  out += "points = [";
  for (std::size_t i = 0; i < md.points.size(); ++i) out += (i ? ", " : "") + md.points[i];
  out += "]\n";
  out += "mu = " + matrix_text(md.moment_images) + "\n";
  out += "cap = " + std::to_string(md.degree_cap) + "\n";
  for (const auto& g : md.generators) {
    out += "\n[generator " + g.name + "]\n";
    out += "degree = " + std::to_string(g.degree) + "\n";
    std::vector<std::string> polys;
    for (const auto& p : g.restrictions) polys.push_back(p.to_string("u"));
    out += "restrict = " + quote_list(polys) + "\n";
  }
  return out;
}

}  // namespace symred
