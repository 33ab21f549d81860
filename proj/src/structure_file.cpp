#include "holopois/structure_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "holopois/parse.hpp"

namespace holopois {

namespace {

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits on `sep`, keeping the column of each trimmed piece.
std::vector<Field> split(std::string_view s, char sep, std::size_t column) {
  std::vector<Field> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    std::string_view piece = s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::size_t col = column + start;
    piece = trim(piece, &col);
    out.push_back({piece, col});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

class FileParser {
 public:
  explicit FileParser(std::string_view text) : text_(text) {}

  StructureDefinition run() {
    std::vector<Field> names, weights;
    std::size_t chart_line = 0, weights_line = 0, poisson_line = 0;
    std::vector<std::pair<std::size_t, Field>> decls;  // line, body

    std::size_t line_no = 0, start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      std::string_view raw = text_.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      start = end == std::string_view::npos ? text_.size() + 1 : end + 1;
      ++line_no;
      line_ = line_no;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      std::size_t col = 1;
      std::string_view body = trim(raw, &col);
      if (body.empty()) continue;

      if (auto rest = keyword(body, "chart:")) {
        if (chart_line) fail("duplicate chart block", col);
        chart_line = line_no;
        names = split(*rest, ',', col + 6);
      } else if (auto rest = keyword(body, "weights:")) {
        if (weights_line) fail("duplicate weights block", col);
        weights_line = line_no;
        weights = split(*rest, ',', col + 8);
      } else if (auto rest = keyword(body, "poisson:")) {
        if (poisson_line) fail("duplicate poisson block", col);
        if (!trim(*rest).empty()) fail("declarations go on the lines after \"poisson:\"", col + 8);
        poisson_line = line_no;
      } else if (poisson_line) {
        decls.push_back({line_no, {body, col}});
      } else {
        fail("expected \"chart:\", \"weights:\" or \"poisson:\"", col);
      }
    }

    if (!chart_line) fail_line("missing chart block", line_no, 1);
    if (!poisson_line) fail_line("missing poisson block", line_no, 1);
    if (weights_line && weights_line > poisson_line) fail_line("weights must precede the poisson block", weights_line, 1);
    if (chart_line > poisson_line) fail_line("chart must precede the poisson block", chart_line, 1);

    ChartPtr chart = build_chart(names, chart_line, weights, weights_line);
    if (chart->size() < 2) fail_line("a Poisson chart needs at least two variables", chart_line, 1);
    StructureDefinition def{chart, StructureDefinition::Kind::Brackets, Polyvector::zero(chart, 2), {}, {}};
    chart_ = def.chart;

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [ln, f] : decls) {
      line_ = ln;
      if (f.text.front() == '{') {
        if (def.kind != StructureDefinition::Kind::Brackets || builder_used_)
          fail("bracket lines cannot follow a builder directive", f.column);
        bracket_line(def, f, seen);
      } else if (auto rest = keyword(f.text, "jacobian3")) {
        builder_check(seen, f.column);
        def.kind = StructureDefinition::Kind::Jacobian3;
        auto rhs = assignment(*rest, f.column + 9, "F");
        if (def.chart->size() != 3) fail("jacobian3 needs a 3-variable chart", f.column);
        Poly F = poly_at(rhs);
        def.casimir = F;
        def.bivector = jacobian_poisson_3(F).bivector();
      } else if (auto rest = keyword(f.text, "diagonal")) {
        builder_check(seen, f.column);
        def.kind = StructureDefinition::Kind::Diagonal;
        auto rhs = assignment(*rest, f.column + 8, "lambda");
        def.lambda = matrix_at(rhs, def.chart->size());
        try {
          def.bivector = diagonal_quadratic_poisson(*def.lambda, def.chart).bivector();
        } catch (const PreconditionError& e) {
          fail(e.what(), rhs.column);
        }
      } else {
        fail("expected \"{a, b} = expr\", \"jacobian3 F = expr\" or \"diagonal lambda = ...\"", f.column);
      }
    }
    return def;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t column) const { throw ParseError(msg, column, line_); }
  [[noreturn]] static void fail_line(const std::string& msg, std::size_t line, std::size_t column) {
    throw ParseError(msg, column, line);
  }

  static std::optional<std::string_view> keyword(std::string_view body, std::string_view kw) {
    if (body.substr(0, kw.size()) != kw) return std::nullopt;
    return body.substr(kw.size());
  }

  ChartPtr build_chart(const std::vector<Field>& names, std::size_t chart_line, const std::vector<Field>& weights,
                       std::size_t weights_line) {
    std::vector<std::string> ns;
    line_ = chart_line;
    for (const auto& f : names) {
      if (!is_identifier(f.text)) fail("invalid variable name \"" + std::string(f.text) + "\"", f.column);
      for (const auto& prev : ns)
        if (prev == f.text) fail("duplicate variable \"" + prev + "\"", f.column);
      ns.emplace_back(f.text);
    }
    std::vector<int> ws;
    if (weights_line) {
      line_ = weights_line;
      if (weights.size() != names.size()) fail("expected one weight per variable", 1);
      for (const auto& f : weights) {
        int v = 0;
        std::istringstream is{std::string(f.text)};
        if (f.text.empty() || !(is >> v) || !is.eof() || v <= 0) fail("weights must be positive integers", f.column);
        ws.push_back(v);
      }
    }
    return Chart::make(ns, ws);
  }

  void builder_check(const std::set<std::pair<std::size_t, std::size_t>>& seen, std::size_t column) {
    if (!seen.empty() || builder_used_) fail("a builder directive must be the only declaration", column);
    builder_used_ = true;
  }

  // "<name> = rhs" after a keyword; returns rhs.
  Field assignment(std::string_view rest, std::size_t column, std::string_view name) {
    std::size_t col = column;
    std::string_view s = trim(rest, &col);
    if (s.substr(0, name.size()) != name) fail("expected \"" + std::string(name) + "\"", col);
    col += name.size();
    s = trim(s.substr(name.size()), &col);
    if (s.empty() || s.front() != '=') fail("expected '='", col);
    ++col;
    s = trim(s.substr(1), &col);
    if (s.empty()) fail("missing right-hand side", col);
    return {s, col};
  }

  Poly poly_at(const Field& f) {
    try {
      return parse_poly(f.text, chart_);
    } catch (const UnknownIdentifier& e) {
      throw UnknownIdentifier(e.token(), f.column + e.column() - 1, line_);
    } catch (const ParseError& e) {
      throw ParseError(e.bare_message(), f.column + e.column() - 1, line_);
    }
  }

  RationalMatrix matrix_at(const Field& f, std::size_t n) {
    RationalMatrix out;
    for (const auto& row : split(f.text, ';', f.column)) {
      std::vector<Rational> r;
      for (const auto& cell : split(row.text, ',', row.column)) {
        try {
          r.push_back(parse_rational(cell.text));
        } catch (const std::exception&) {
          fail("invalid rational \"" + std::string(cell.text) + "\"", cell.column);
        }
      }
      if (r.size() != n) fail("matrix row needs " + std::to_string(n) + " entries", row.column);
      out.push_back(std::move(r));
    }
    if (out.size() != n) fail("matrix needs " + std::to_string(n) + " rows", f.column);
    return out;
  }

  void bracket_line(StructureDefinition& def, const Field& f, std::set<std::pair<std::size_t, std::size_t>>& seen) {
    std::size_t close = f.text.find('}');
    if (close == std::string_view::npos) fail("missing '}'", f.column + f.text.size());
    auto parts = split(f.text.substr(1, close - 1), ',', f.column + 1);
    if (parts.size() != 2) fail("expected two variables inside braces", f.column);
    std::size_t idx[2];
    for (int k = 0; k < 2; ++k) {
      auto i = def.chart->index_of(parts[k].text);
      if (!i) throw UnknownIdentifier(std::string(parts[k].text), parts[k].column, line_);
      idx[k] = *i;
    }
    if (idx[0] >= idx[1]) fail("bracket pairs must be listed in chart order", f.column);
    if (!seen.insert({idx[0], idx[1]}).second) fail("duplicate bracket pair", f.column);
    std::size_t col = f.column + close + 1;
    std::string_view rest = trim(f.text.substr(close + 1), &col);
    if (rest.empty() || rest.front() != '=') fail("expected '='", col);
    ++col;
    rest = trim(rest.substr(1), &col);
    if (rest.empty()) fail("missing right-hand side", col);
    def.bivector += Polyvector::frame(poly_at({rest, col}),
                                      {static_cast<unsigned>(idx[0]), static_cast<unsigned>(idx[1])});
  }

  std::string_view text_;
  std::size_t line_ = 0;
  bool builder_used_ = false;
  ChartPtr chart_;
};

}  // namespace

StructureDefinition parse_structure(std::string_view text) {
  FileParser parser(text);
  return parser.run();
}

StructureDefinition load_structure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_structure(ss.str());
}

std::string serialize_structure(const StructureDefinition& def) {
  const Chart& chart = *def.chart;
  std::ostringstream os;
  os << "chart: ";
  for (std::size_t i = 0; i < chart.size(); ++i) os << (i ? ", " : "") << chart.name(i);
  os << '\n';
  if (!chart.unit_weights()) {
    os << "weights: ";
    for (std::size_t i = 0; i < chart.size(); ++i) os << (i ? ", " : "") << chart.weight(i);
    os << '\n';
  }
  os << "poisson:\n";
  for (const auto& [idx, coef] : def.bivector.terms())
    os << "  {" << chart.name(idx[0]) << ", " << chart.name(idx[1]) << "} = " << to_string(coef) << '\n';
  return os.str();
}

}  // namespace holopois
