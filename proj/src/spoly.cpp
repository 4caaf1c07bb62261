#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "polyfold/codec.hpp"

namespace polyfold {

namespace {

std::string word_key(const AttachedWord& w) {
  std::string key;
  for (const auto& st : w.steps) {
    if (const auto* es = std::get_if<EdgeStep>(&st)) {
      key += "e " + es->edge + " " + std::to_string(es->slot) +
             (es->forward ? " +;" : " -;");
    } else {
      const auto& vs = std::get<VertexStep>(st);
      key += "v " + vs.vertex + " " + std::to_string(vs.port_in) + ">" +
             std::to_string(vs.port_out) + ";";
    }
  }
  return key;
}

AttachedWord min_rotation(const AttachedWord& w) {
  AttachedWord best;
  std::string best_key;
  const size_t n = w.steps.size();
  for (size_t shift = 0; shift < n; ++shift) {
    if (!std::holds_alternative<EdgeStep>(w.steps[shift])) continue;
    AttachedWord cand;
    for (size_t i = 0; i < n; ++i) cand.steps.push_back(w.steps[(shift + i) % n]);
    std::string key = word_key(cand);
    if (best_key.empty() || key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best_key.empty() ? w : best;
}

std::string component_key(const BoundaryComponent& bc) {
  if (const auto* fc = std::get_if<FreeCircleRef>(&bc)) return "0free " + fc->id;
  return "1word " + word_key(std::get<AttachedWord>(bc));
}

}  // namespace

SimplePolyhedron canonicalized(const SimplePolyhedron& p) {
  SimplePolyhedron out = p;
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const DoublePoint& a, const DoublePoint& b) { return a.id < b.id; });
  std::sort(out.edges.begin(), out.edges.end(),
            [](const TripleEdge& a, const TripleEdge& b) { return a.id < b.id; });
  std::sort(out.free_circles.begin(), out.free_circles.end());
  for (auto& r : out.regions) {
    for (auto& bc : r.boundary) {
      if (auto* aw = std::get_if<AttachedWord>(&bc)) {
        if (!aw->steps.empty()) *aw = min_rotation(*aw);
      }
    }
    std::sort(r.boundary.begin(), r.boundary.end(),
              [](const BoundaryComponent& a, const BoundaryComponent& b) {
                return component_key(a) < component_key(b);
              });
  }
  std::sort(out.regions.begin(), out.regions.end(),
            [](const Region& a, const Region& b) { return a.id < b.id; });
  return out;
}

bool structurally_equal(const SimplePolyhedron& a, const SimplePolyhedron& b) {
  SimplePolyhedron ca = canonicalized(a);
  SimplePolyhedron cb = canonicalized(b);
  return ca.name == cb.name && ca.vertices == cb.vertices && ca.edges == cb.edges &&
         ca.regions == cb.regions && ca.free_circles == cb.free_circles;
}

std::string emit_spoly(const SimplePolyhedron& p) {
  ValidationReport rep = validate(p);
  if (!rep.ok) {
    throw Error(ErrorCode::kInvalidInput, "emit_spoly: polyhedron fails validation");
  }
  SimplePolyhedron c = canonicalized(p);
  std::ostringstream os;
  os << "polyhedron " << c.name << "\n";
  for (const auto& v : c.vertices) {
    os << "vertex " << v.id << " chart " << v.chart_id << " pairs (" << v.pairs[0][0]
       << " " << v.pairs[0][1] << ") (" << v.pairs[1][0] << " " << v.pairs[1][1]
       << ") trans " << v.transitions[0].digits() << " " << v.transitions[1].digits()
       << "\n";
  }
  for (const auto& e : c.edges) {
    if (e.kind == EdgeKind::kCircle) {
      os << "edge " << e.id << " circle ident " << e.circle_identification.digits()
         << "\n";
    } else {
      os << "edge " << e.id << " interval " << e.endpoints[0].vertex << "."
         << e.endpoints[0].port << " " << e.endpoints[1].vertex << "."
         << e.endpoints[1].port << "\n";
    }
  }
  for (const auto& r : c.regions) {
    os << "region " << r.id << " genus " << r.genus << " orientable "
       << (r.orientable ? "yes" : "no") << "\n";
    for (const auto& bc : r.boundary) {
      if (const auto* fc = std::get_if<FreeCircleRef>(&bc)) {
        os << "boundary free " << fc->id << "\n";
      } else {
        os << "boundary attached";
        for (const auto& st : std::get<AttachedWord>(bc).steps) {
          if (const auto* es = std::get_if<EdgeStep>(&st)) {
            os << " " << es->edge << " " << es->slot << " " << (es->forward ? "+" : "-");
          } else {
            const auto& vs = std::get<VertexStep>(st);
            os << " " << vs.vertex << " " << vs.port_in << ">" << vs.port_out;
          }
        }
        os << "\n";
      }
    }
  }
  return os.str();
}

namespace {

struct Tokenizer {
  std::vector<std::string> tokens;
  std::vector<int> columns;
};

Tokenizer tokenize_line(const std::string& line) {
  Tokenizer t;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    t.tokens.push_back(line.substr(start, i - start));
    t.columns.push_back(static_cast<int>(start) + 1);
  }
  return t;
}

struct PendingRef {
  int line;
  int column;
  bool is_vertex;  // else edge
  std::string id;
};

struct Parser {
  ParseResult result;
  int line_no = 0;
  Region* open_region = nullptr;
  std::vector<PendingRef> refs;

  void err(int col, const std::string& code, const std::string& msg,
           const std::string& token = "") {
    result.errors.push_back({line_no, col, code, msg, token});
  }
  void want_vertex(int col, const std::string& id) {
    refs.push_back({line_no, col, true, id});
  }
  void want_edge(int col, const std::string& id) {
    refs.push_back({line_no, col, false, id});
  }
};

bool parse_int(const std::string& tok, int& out) {
  if (tok.empty()) return false;
  size_t pos = 0;
  bool neg = tok[0] == '-';
  if (neg) pos = 1;
  if (pos >= tok.size()) return false;
  long long v = 0;
  for (; pos < tok.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(tok[pos]))) return false;
    v = v * 10 + (tok[pos] - '0');
    if (v > 1000000) return false;
  }
  out = static_cast<int>(neg ? -v : v);
  return true;
}

// <vid>.<port>
bool parse_port_ref(const std::string& tok, PortRef& out) {
  auto dot = tok.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= tok.size()) return false;
  out.vertex = tok.substr(0, dot);
  return parse_int(tok.substr(dot + 1), out.port);
}

// <p>'>'<q>
bool parse_passage(const std::string& tok, int& pin, int& pout) {
  auto gt = tok.find('>');
  if (gt == std::string::npos || gt == 0 || gt + 1 >= tok.size()) return false;
  return parse_int(tok.substr(0, gt), pin) && parse_int(tok.substr(gt + 1), pout);
}

}  // namespace

ParseResult parse_spoly(const std::string& text) {
  Parser ps;
  SimplePolyhedron& p = ps.result.polyhedron;
  bool saw_header = false;

  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    ++ps.line_no;
    Tokenizer t = tokenize_line(line);
    if (t.tokens.empty()) continue;
    const auto& kw = t.tokens[0];
    auto col = [&t](size_t i) {
      return i < t.columns.size() ? t.columns[i] : 1;
    };

    if (kw == "polyhedron") {
      if (t.tokens.size() != 2) {
        ps.err(col(0), "SYNTAX", "expected: polyhedron <name>");
        continue;
      }
      if (saw_header) {
        ps.err(col(0), "DUPLICATE_HEADER", "repeated polyhedron header");
        continue;
      }
      saw_header = true;
      p.name = t.tokens[1];
    } else if (kw == "vertex") {
      // vertex <id> chart <chart> pairs (p q) (r s) trans <perm> <perm>
      if (t.tokens.size() != 12 || t.tokens[2] != "chart" || t.tokens[4] != "pairs" ||
          t.tokens[9] != "trans") {
        ps.err(col(0), "SYNTAX",
               "expected: vertex <id> chart <chart> pairs (<p> <q>) (<r> <s>) trans "
               "<perm> <perm>");
        continue;
      }
      DoublePoint v;
      v.id = t.tokens[1];
      v.chart_id = t.tokens[3];
      auto strip = [](std::string s) {
        if (!s.empty() && s.front() == '(') s.erase(s.begin());
        if (!s.empty() && s.back() == ')') s.pop_back();
        return s;
      };
      std::array<int, 4> ports{};
      bool ok = true;
      const size_t idx[4] = {5, 6, 7, 8};
      for (int k = 0; k < 4; ++k) {
        if (!parse_int(strip(t.tokens[idx[k]]), ports[static_cast<size_t>(k)])) {
          ps.err(col(idx[k]), "SYNTAX", "bad port", t.tokens[idx[k]]);
          ok = false;
        }
      }
      auto t0 = SlotPerm::from_digits(t.tokens[10]);
      auto t1 = SlotPerm::from_digits(t.tokens[11]);
      if (!t0.has_value() || !t1.has_value()) {
        ps.err(col(10), "BAD_PERM", "transition must be a 3-digit permutation of 012");
        ok = false;
      }
      if (!ok) continue;
      v.pairs = {{{ports[0], ports[1]}, {ports[2], ports[3]}}};
      v.transitions = {*t0, *t1};
      if (p.find_vertex(v.id) != nullptr) {
        ps.err(col(1), "DUPLICATE_ID", "vertex '" + v.id + "' already declared");
        continue;
      }
      p.vertices.push_back(std::move(v));
    } else if (kw == "edge") {
      if (t.tokens.size() == 5 && t.tokens[2] == "circle" && t.tokens[3] == "ident") {
        auto perm = SlotPerm::from_digits(t.tokens[4]);
        if (!perm.has_value()) {
          ps.err(col(4), "BAD_PERM", "identification must be a permutation of 012",
                 t.tokens[4]);
          continue;
        }
        if (p.find_edge(t.tokens[1]) != nullptr) {
          ps.err(col(1), "DUPLICATE_ID", "edge '" + t.tokens[1] + "' already declared");
          continue;
        }
        p.edges.push_back({t.tokens[1], EdgeKind::kCircle, {}, *perm});
      } else if (t.tokens.size() == 5 && t.tokens[2] == "interval") {
        PortRef a, b;
        if (!parse_port_ref(t.tokens[3], a) || !parse_port_ref(t.tokens[4], b)) {
          ps.err(col(3), "SYNTAX", "expected endpoints <vid>.<port>");
          continue;
        }
        if (p.find_edge(t.tokens[1]) != nullptr) {
          ps.err(col(1), "DUPLICATE_ID", "edge '" + t.tokens[1] + "' already declared");
          continue;
        }
        ps.want_vertex(col(3), a.vertex);
        ps.want_vertex(col(4), b.vertex);
        p.edges.push_back({t.tokens[1], EdgeKind::kInterval, {a, b},
                           SlotPerm::identity()});
      } else {
        ps.err(col(0), "SYNTAX",
               "expected: edge <id> circle ident <perm> | edge <id> interval "
               "<vid>.<port> <vid>.<port>");
      }
    } else if (kw == "region") {
      if (t.tokens.size() != 6 || t.tokens[2] != "genus" || t.tokens[4] != "orientable") {
        ps.err(col(0), "SYNTAX",
               "expected: region <id> genus <g> orientable <yes|no>");
        continue;
      }
      Region r;
      r.id = t.tokens[1];
      if (!parse_int(t.tokens[3], r.genus)) {
        ps.err(col(3), "SYNTAX", "bad genus", t.tokens[3]);
        continue;
      }
      if (t.tokens[5] == "yes") {
        r.orientable = true;
      } else if (t.tokens[5] == "no") {
        r.orientable = false;
      } else {
        ps.err(col(5), "SYNTAX", "orientable must be yes or no", t.tokens[5]);
        continue;
      }
      if (p.find_region(r.id) != nullptr) {
        ps.err(col(1), "DUPLICATE_ID", "region '" + r.id + "' already declared");
        continue;
      }
      p.regions.push_back(std::move(r));
      ps.open_region = &p.regions.back();
    } else if (kw == "boundary") {
      if (ps.open_region == nullptr) {
        ps.err(col(0), "SYNTAX", "boundary line outside any region");
        continue;
      }
      if (t.tokens.size() == 3 && t.tokens[1] == "free") {
        ps.open_region->boundary.push_back(FreeCircleRef{t.tokens[2]});
        if (std::find(p.free_circles.begin(), p.free_circles.end(), t.tokens[2]) ==
            p.free_circles.end()) {
          p.free_circles.push_back(t.tokens[2]);
        }
      } else if (t.tokens.size() >= 2 && t.tokens[1] == "attached") {
        AttachedWord w;
        bool ok = true;
        size_t i = 2;
        while (i < t.tokens.size()) {
          int pin = 0, pout = 0;
          if (i + 1 < t.tokens.size() && parse_passage(t.tokens[i + 1], pin, pout)) {
            ps.want_vertex(col(i), t.tokens[i]);
            w.steps.push_back(VertexStep{t.tokens[i], pin, pout});
            i += 2;
            continue;
          }
          int slot = 0;
          if (i + 2 < t.tokens.size() && parse_int(t.tokens[i + 1], slot) &&
              (t.tokens[i + 2] == "+" || t.tokens[i + 2] == "-")) {
            ps.want_edge(col(i), t.tokens[i]);
            w.steps.push_back(EdgeStep{t.tokens[i], slot, t.tokens[i + 2] == "+"});
            i += 3;
            continue;
          }
          if (i + 2 == t.tokens.size() && parse_int(t.tokens[i + 1], slot)) {
            ps.err(col(i), "SYNTAX", "edge item is missing its direction",
                   t.tokens[i]);
          } else {
            ps.err(col(i), "SYNTAX",
                   "expected edge item '<id> <slot> <+|->' or passage '<vid> <p>><q>'",
                   t.tokens[i]);
          }
          ok = false;
          break;
        }
        if (ok && w.steps.empty()) {
          ps.err(col(1), "SYNTAX", "attached boundary word is empty");
          ok = false;
        }
        if (ok) ps.open_region->boundary.push_back(std::move(w));
      } else {
        ps.err(col(0), "SYNTAX",
               "expected: boundary free <id> | boundary attached <items>");
      }
    } else {
      ps.err(col(0), "UNKNOWN_KEYWORD", "unknown declaration", kw);
    }
  }

  if (!saw_header) {
    ps.line_no = 1;
    ps.err(1, "MISSING_HEADER", "missing 'polyhedron <name>' header");
  }

  for (const auto& ref : ps.refs) {
    bool found = ref.is_vertex ? p.find_vertex(ref.id) != nullptr
                               : p.find_edge(ref.id) != nullptr;
    if (!found) {
      ps.result.errors.push_back({ref.line, ref.column, "DANGLING_REFERENCE",
                                  std::string(ref.is_vertex ? "vertex '" : "edge '") +
                                      ref.id + "' is not declared",
                                  ref.id});
    }
  }

  if (ps.result.errors.empty()) {
    ValidationReport rep = validate(p);
    if (!rep.ok) {
      ps.result.validation = rep.errors;
    } else {
      ps.result.ok = true;
    }
  }
  return ps.result;
}

}  // namespace polyfold
