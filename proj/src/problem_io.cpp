#include "indca/problem_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "indca/errors.hpp"

namespace indca {

double parse_number(const std::string& token) {
  const auto parse_plain = [](const std::string& s) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("bad numeric literal '" + s + "'");
    }
    return v;
  };
  const size_t slash = token.find('/');
  if (slash == std::string::npos) return parse_plain(token);
  const double num = parse_plain(token.substr(0, slash));
  const double den = parse_plain(token.substr(slash + 1));
  if (den == 0.0) throw ParseError("zero denominator in '" + token + "'");
  return num / den;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

struct TokenCursor {
  const std::vector<std::string>& tokens;
  size_t pos = 0;

  bool done() const { return pos >= tokens.size(); }
  const std::string& next(const char* what) {
    if (done()) throw ParseError(std::string("unexpected end of file, expected ") + what);
    return tokens[pos++];
  }
  double number(const char* what) { return parse_number(next(what)); }
  int integer(const char* what) {
    const double v = number(what);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
      throw ParseError(std::string(what) + " must be an integer");
    }
    return i;
  }
};

Matrix read_matrix(TokenCursor& cur, int rows, int cols, const char* what) {
  Matrix M(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) M(i, j) = cur.number(what);
  }
  return M;
}

Vector read_vector(TokenCursor& cur, int len, const char* what) {
  Vector v(len);
  for (int i = 0; i < len; ++i) v(i) = cur.number(what);
  return v;
}

}  // namespace

ProblemFile parse_problem(std::istream& in) {
  const std::vector<std::string> tokens = tokenize(in);
  TokenCursor cur{tokens};

  std::optional<int> n, m;
  std::optional<Matrix> Q, A;
  std::optional<Vector> q, b;
  ProblemFile pf;

  const auto dims = [&]() {
    if (!n || !m) throw ParseError("n and m must come before matrix sections");
  };

  while (!cur.done()) {
    const std::string key = cur.next("section keyword");
    if (key == "n") {
      n = cur.integer("n");
    } else if (key == "m") {
      m = cur.integer("m");
    } else if (key == "Q") {
      dims();
      Q = read_matrix(cur, *n, *n, "Q entry");
    } else if (key == "q") {
      dims();
      q = read_vector(cur, *n, "q entry");
    } else if (key == "A") {
      dims();
      A = read_matrix(cur, *m, *n, "A entry");
    } else if (key == "b") {
      dims();
      b = read_vector(cur, *m, "b entry");
    } else if (key == "start") {
      dims();
      const std::string name = cur.next("start name");
      pf.starts[name] = read_vector(cur, *n, "start entry");
    } else if (key == "component") {
      dims();
      const std::string name = cur.next("component name");
      if (cur.next("'pieces'") != "pieces") {
        throw ParseError("expected 'pieces' after component name");
      }
      const int count = cur.integer("piece count");
      ComponentDescription comp;
      for (int pc = 0; pc < count; ++pc) {
        if (cur.next("'piece'") != "piece") throw ParseError("expected 'piece'");
        if (cur.next("'eq'") != "eq") throw ParseError("expected 'eq'");
        const int k = cur.integer("eq count");
        if (cur.next("'ineq'") != "ineq") throw ParseError("expected 'ineq'");
        const int l = cur.integer("ineq count");
        Polyhedron piece;
        const Matrix eq_rows = read_matrix(cur, k, *n + 1, "eq row");
        const Matrix in_rows = read_matrix(cur, l, *n + 1, "ineq row");
        piece.Aeq = eq_rows.leftCols(*n);
        piece.beq = eq_rows.col(*n);
        piece.Aineq = in_rows.leftCols(*n);
        piece.bineq = in_rows.col(*n);
        comp.pieces.push_back(std::move(piece));
      }
      pf.components[name] = std::move(comp);
    } else {
      throw ParseError("unknown section '" + key + "'");
    }
  }

  if (!n || !m || !Q || !q || !A || !b) {
    throw ParseError("missing one of the required sections n, m, Q, q, A, b");
  }
  pf.problem = build_problem(*n, *m, *Q, *q, *A, *b);
  return pf;
}

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_problem(in);
}

std::string serialize_problem(const ProblemFile& pf) {
  std::ostringstream out;
  const IqpProblem& p = pf.problem;
  out << "n " << p.n << "\n";
  out << "m " << p.m << "\n";
  out << "Q\n";
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      out << (j ? " " : "") << format_double(p.Q(i, j));
    }
    out << "\n";
  }
  out << "q\n";
  for (int i = 0; i < p.n; ++i) out << (i ? " " : "") << format_double(p.q(i));
  out << "\nA\n";
  for (int i = 0; i < p.m; ++i) {
    for (int j = 0; j < p.n; ++j) {
      out << (j ? " " : "") << format_double(p.A(i, j));
    }
    out << "\n";
  }
  out << "b\n";
  for (int i = 0; i < p.m; ++i) out << (i ? " " : "") << format_double(p.b(i));
  out << "\n";
  for (const auto& [name, x] : pf.starts) {
    out << "start " << name;
    for (int i = 0; i < x.size(); ++i) out << " " << format_double(x(i));
    out << "\n";
  }
  for (const auto& [name, comp] : pf.components) {
    out << "component " << name << " pieces " << comp.pieces.size() << "\n";
    for (const Polyhedron& piece : comp.pieces) {
      out << "piece eq " << piece.Aeq.rows() << " ineq " << piece.Aineq.rows()
          << "\n";
      for (int i = 0; i < piece.Aeq.rows(); ++i) {
        for (int j = 0; j < piece.Aeq.cols(); ++j) {
          out << format_double(piece.Aeq(i, j)) << " ";
        }
        out << format_double(piece.beq(i)) << "\n";
      }
      for (int i = 0; i < piece.Aineq.rows(); ++i) {
        for (int j = 0; j < piece.Aineq.cols(); ++j) {
          out << format_double(piece.Aineq(i, j)) << " ";
        }
        out << format_double(piece.bineq(i)) << "\n";
      }
    }
  }
  return out.str();
}

void write_trace_csv(std::ostream& out, const SolveTrace& trace, int n) {
  out << "k";
  for (int j = 0; j < n; ++j) out << ",x" << j;
  out << ",step_norm,d_norm,f,energy,inclusion_residual,active_set\n";
  for (const TraceRecord& rec : trace) {
    out << rec.k;
    for (int j = 0; j < n; ++j) out << "," << format_double(rec.x(j));
    out << "," << format_double(rec.step_norm);
    out << "," << format_double(rec.d.norm());
    out << "," << format_double(rec.f_val);
    out << "," << format_double(rec.energy);
    out << "," << format_double(rec.inclusion_residual);
    out << ",";
    for (size_t i = 0; i < rec.active.size(); ++i) {
      out << (i ? ";" : "") << (rec.active[i] + 1);
    }
    out << "\n";
  }
}

}  // namespace indca
