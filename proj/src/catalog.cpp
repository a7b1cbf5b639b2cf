#include "hkt/catalog.hpp"

#include <sstream>

namespace hkt {

bool sameStructure(const CatalogEntry& a, const CatalogEntry& b) {
  if (!(a.structure.algebra == b.structure.algebra)) return false;
  if (a.structure.metric.has_value() != b.structure.metric.has_value()) return false;
  if (a.structure.metric && !isZero(Mat(a.structure.metric->gram - b.structure.metric->gram)))
    return false;
  if (a.structure.J.size() != b.structure.J.size()) return false;
  for (size_t i = 0; i < a.structure.J.size(); ++i)
    if (!isZero(Mat(a.structure.J[i] - b.structure.J[i]))) return false;
  return true;
}

CheckResult validateEntry(const CatalogEntry& entry) {
  CheckResult res = validateStructure(entry.structure);
  for (const auto& [name, rep] : entry.quatReps) {
    auto r = validateQuatRep(rep, entry.structure.algebra);
    for (auto& issue : r.issues)
      res.issues.push_back({"quat_rep " + name + ": " + issue.what, issue.witness});
  }
  for (const auto& [name, conn] : entry.connections) {
    if (conn.dim() != entry.structure.dim())
      res.issues.push_back({"connection " + name + ": wrong number of matrices", ""});
    else
      for (int i = 0; i < conn.dim(); ++i)
        if (conn.gamma[static_cast<size_t>(i)].rows() != entry.structure.dim() ||
            conn.gamma[static_cast<size_t>(i)].cols() != entry.structure.dim())
          res.issues.push_back({"connection " + name + ": matrix of wrong size",
                                "direction e" + std::to_string(i + 1)});
  }
  return res;
}

// -- serialization ------------------------------------------------------------

namespace {

void writeMatrix(std::ostringstream& os, const Mat& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c).str();
    }
    os << '\n';
  }
}

}  // namespace

std::string serializeEntry(const CatalogEntry& entry) {
  std::ostringstream os;
  os << "catalog-entry v1\n";
  os << "name " << entry.name << '\n';
  os << "dim " << entry.structure.dim() << '\n';
  os << "scalars Q(sqrt2)\n";
  os << "brackets\n";
  for (const auto& [pair, terms] : entry.structure.algebra.structureConstants()) {
    os << '[' << pair.first << ',' << pair.second << ']';
    for (const auto& [k, c] : terms) os << ' ' << k << ':' << c.str();
    os << '\n';
  }
  os << "end\n";
  if (entry.structure.metric) {
    os << "metric\n";
    writeMatrix(os, entry.structure.metric->gram);
    os << "end\n";
  }
  for (size_t a = 0; a < entry.structure.J.size(); ++a) {
    os << "complex J" << (a + 1) << '\n';
    writeMatrix(os, entry.structure.J[a]);
    os << "end\n";
  }
  for (const auto& [name, conn] : entry.connections) {
    os << "connection " << name << '\n';
    for (const Endo& m : conn.gamma) {
      os << "matrix\n";
      writeMatrix(os, m);
    }
    os << "end\n";
  }
  for (const auto& [name, rep] : entry.quatReps) {
    os << "quat_rep " << name << '\n';
    os << "q " << rep.q << '\n';
    for (const Endo& m : rep.rho) {
      os << "matrix\n";
      writeMatrix(os, m);
    }
    os << "end\n";
  }
  os << "end-entry\n";
  return os.str();
}

// -- parsing ------------------------------------------------------------------

namespace {

struct LineReader {
  std::vector<std::string> lines;
  size_t pos = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
  }

  // Next non-empty, non-comment line; empty optional at end of input.
  std::optional<std::string> next() {
    while (pos < lines.size()) {
      const std::string& raw = lines[pos++];
      size_t first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      size_t last = raw.find_last_not_of(" \t\r");
      std::string t = raw.substr(first, last - first + 1);
      if (t[0] == '#') continue;
      return t;
    }
    return std::nullopt;
  }
  int lineNo() const { return static_cast<int>(pos); }
};

std::vector<std::string> splitWs(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Scalar parseScalarToken(const std::string& tok, int line) {
  auto v = Scalar::parse(tok);
  if (!v) throw ParseError(line, "malformed scalar literal '" + tok + "'");
  return *v;
}

Mat readMatrix(LineReader& r, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    auto line = r.next();
    if (!line) throw ParseError(r.lineNo(), "unexpected end of input inside matrix");
    auto toks = splitWs(*line);
    if (static_cast<int>(toks.size()) != cols)
      throw ParseError(r.lineNo(), "expected " + std::to_string(cols) + " entries, got " +
                                       std::to_string(toks.size()));
    for (int j = 0; j < cols; ++j) m(i, j) = parseScalarToken(toks[static_cast<size_t>(j)], r.lineNo());
  }
  return m;
}

int parseInt(const std::string& tok, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

CatalogEntry parseEntry(const std::string& text) {
  LineReader r(text);
  auto header = r.next();
  if (!header) throw ParseError(r.lineNo(), "empty input");
  if (*header != "catalog-entry v1")
    throw ParseError(r.lineNo(), "expected header 'catalog-entry v1'");

  CatalogEntry entry{"", GeomStructure{LieAlgebra(1), std::nullopt, {}}, {}, {}, {}};
  int dim = 0;
  bool haveName = false, haveDim = false, haveScalars = false;
  std::map<int, Mat> jmats;

  while (true) {
    auto lineOpt = r.next();
    if (!lineOpt) throw ParseError(r.lineNo(), "missing 'end-entry'");
    const std::string& line = *lineOpt;
    auto toks = splitWs(line);
    const std::string& key = toks[0];

    if (key == "end-entry") break;

    if (key == "name") {
      if (toks.size() != 2) throw ParseError(r.lineNo(), "usage: name <identifier>");
      entry.name = toks[1];
      haveName = true;
    } else if (key == "dim") {
      if (toks.size() != 2) throw ParseError(r.lineNo(), "usage: dim <positive integer>");
      dim = parseInt(toks[1], r.lineNo());
      if (dim <= 0) throw ParseError(r.lineNo(), "dimension must be positive");
      entry.structure.algebra = LieAlgebra(dim);
      haveDim = true;
    } else if (key == "scalars") {
      if (toks.size() != 2 || toks[1] != "Q(sqrt2)")
        throw ParseError(r.lineNo(), "only 'scalars Q(sqrt2)' is supported");
      haveScalars = true;
    } else if (key == "brackets") {
      if (!haveDim) throw ParseError(r.lineNo(), "'dim' must precede 'brackets'");
      while (true) {
        auto bl = r.next();
        if (!bl) throw ParseError(r.lineNo(), "unterminated brackets section");
        if (*bl == "end") break;
        auto btoks = splitWs(*bl);
        const std::string& head = btoks[0];
        if (head.size() < 5 || head.front() != '[' || head.back() != ']')
          throw ParseError(r.lineNo(), "expected '[i,j]' at start of bracket line");
        size_t comma = head.find(',');
        if (comma == std::string::npos)
          throw ParseError(r.lineNo(), "expected '[i,j]' at start of bracket line");
        int i = parseInt(head.substr(1, comma - 1), r.lineNo());
        int j = parseInt(head.substr(comma + 1, head.size() - comma - 2), r.lineNo());
        if (i < 1 || j < 1 || i > dim || j > dim || i >= j)
          throw ParseError(r.lineNo(), "bracket pair requires 1 <= i < j <= dim");
        Vec value = Vec::Constant(dim, Scalar(0));
        for (size_t t = 1; t < btoks.size(); ++t) {
          size_t colon = btoks[t].find(':');
          if (colon == std::string::npos)
            throw ParseError(r.lineNo(), "expected 'k:coefficient' terms");
          int k = parseInt(btoks[t].substr(0, colon), r.lineNo());
          if (k < 1 || k > dim) throw ParseError(r.lineNo(), "bracket output index out of range");
          value(k - 1) += parseScalarToken(btoks[t].substr(colon + 1), r.lineNo());
        }
        entry.structure.algebra.setBracket(i, j, value);
      }
    } else if (key == "metric") {
      if (!haveDim) throw ParseError(r.lineNo(), "'dim' must precede 'metric'");
      entry.structure.metric = Metric{readMatrix(r, dim, dim)};
      auto endl = r.next();
      if (!endl || *endl != "end") throw ParseError(r.lineNo(), "metric must close with 'end'");
    } else if (key == "complex") {
      if (!haveDim) throw ParseError(r.lineNo(), "'dim' must precede 'complex'");
      if (toks.size() != 2 || toks[1].size() != 2 || toks[1][0] != 'J')
        throw ParseError(r.lineNo(), "usage: complex J1|J2|J3");
      int a = toks[1][1] - '0';
      if (a < 1 || a > 3) throw ParseError(r.lineNo(), "usage: complex J1|J2|J3");
      jmats[a] = readMatrix(r, dim, dim);
      auto endl = r.next();
      if (!endl || *endl != "end") throw ParseError(r.lineNo(), "complex must close with 'end'");
    } else if (key == "connection") {
      if (!haveDim) throw ParseError(r.lineNo(), "'dim' must precede 'connection'");
      if (toks.size() != 2) throw ParseError(r.lineNo(), "usage: connection <name>");
      Connection c;
      for (int i = 0; i < dim; ++i) {
        auto ml = r.next();
        if (!ml || *ml != "matrix")
          throw ParseError(r.lineNo(), "expected 'matrix' (one per basis direction)");
        c.gamma.push_back(readMatrix(r, dim, dim));
      }
      auto endl = r.next();
      if (!endl || *endl != "end")
        throw ParseError(r.lineNo(), "connection must close with 'end'");
      entry.connections[toks[1]] = std::move(c);
    } else if (key == "quat_rep") {
      if (!haveDim) throw ParseError(r.lineNo(), "'dim' must precede 'quat_rep'");
      if (toks.size() != 2) throw ParseError(r.lineNo(), "usage: quat_rep <name>");
      auto ql = r.next();
      if (!ql) throw ParseError(r.lineNo(), "unterminated quat_rep section");
      auto qtoks = splitWs(*ql);
      if (qtoks.size() != 2 || qtoks[0] != "q")
        throw ParseError(r.lineNo(), "expected 'q <positive integer>'");
      QuatRep rep;
      rep.q = parseInt(qtoks[1], r.lineNo());
      if (rep.q <= 0) throw ParseError(r.lineNo(), "q must be positive");
      for (int i = 0; i < dim; ++i) {
        auto ml = r.next();
        if (!ml || *ml != "matrix")
          throw ParseError(r.lineNo(), "expected 'matrix' (one per basis direction)");
        rep.rho.push_back(readMatrix(r, 4 * rep.q, 4 * rep.q));
      }
      auto endl = r.next();
      if (!endl || *endl != "end")
        throw ParseError(r.lineNo(), "quat_rep must close with 'end'");
      entry.quatReps[toks[1]] = std::move(rep);
    } else {
      throw ParseError(r.lineNo(), "unknown section '" + key + "'");
    }
  }

  if (!haveName) throw ParseError(r.lineNo(), "missing 'name'");
  if (!haveDim) throw ParseError(r.lineNo(), "missing 'dim'");
  if (!haveScalars) throw ParseError(r.lineNo(), "missing 'scalars Q(sqrt2)'");
  if (jmats.count(1)) entry.structure.J.push_back(jmats[1]);
  if (jmats.count(2)) {
    if (!jmats.count(1)) throw ParseError(r.lineNo(), "J2 requires J1");
    entry.structure.J.push_back(jmats[2]);
    // J3 = J1 * J2 when not stored.
    entry.structure.J.push_back(jmats.count(3) ? jmats[3] : Mat(jmats[1] * jmats[2]));
  } else if (jmats.count(3)) {
    throw ParseError(r.lineNo(), "J3 requires J1 and J2");
  }
  return entry;
}

}  // namespace hkt
