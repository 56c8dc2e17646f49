#include "bfgp/gp_text.hpp"

#include <cctype>
#include <fstream>

namespace bfgp {

namespace {

void serialize_node(const GpNode& node, std::string& out) {
  switch (node.op) {
    case Op::Var:
      out += 'v';
      out += std::to_string(node.index);
      return;
    case Op::Seed:
      out += 'f';
      out += std::to_string(node.index);
      return;
    case Op::Const:
      out += node.index ? '1' : '0';
      return;
    case Op::Not:
      out += "NOT(";
      serialize_node(*node.kids[0], out);
      out += ')';
      return;
    case Op::If:
      out += "IF(";
      serialize_node(*node.kids[0], out);
      out += ", ";
      serialize_node(*node.kids[1], out);
      out += ", ";
      serialize_node(*node.kids[2], out);
      out += ')';
      return;
    default:
      out += '(';
      serialize_node(*node.kids[0], out);
      out += ' ';
      out += op_name(node.op);
      out += ' ';
      serialize_node(*node.kids[1], out);
      out += ')';
      return;
  }
}

struct Parser {
  const std::string& text;
  const TerminalContext& ctx;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected a name", start);
    return text.substr(start, pos - start);
  }

  NodePtr terminal(const std::string& name, size_t at) {
    if (name == "0") return const_node(false);
    if (name == "1") return const_node(true);
    if (name.size() >= 2 && (name[0] == 'v' || name[0] == 'f')) {
      for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
          throw ParseError("unknown terminal \"" + name + "\"", at);
      int idx = std::stoi(name.substr(1));
      if (name[0] == 'v') {
        if (idx >= ctx.k)
          throw ParseError("terminal v" + std::to_string(idx) +
                               " out of range (k=" + std::to_string(ctx.k) + ")",
                           at);
        return var_node(idx);
      }
      if (idx >= ctx.s)
        throw ParseError("terminal f" + std::to_string(idx) +
                             " out of range (s=" + std::to_string(ctx.s) + ")",
                         at);
      return seed_node(idx);
    }
    throw ParseError("unknown terminal \"" + name + "\"", at);
  }

  static Op binary_op(const std::string& name) {
    if (name == "OR") return Op::Or;
    if (name == "XOR") return Op::Xor;
    if (name == "AND") return Op::And;
    if (name == "AND2") return Op::And2;
    if (name == "XNOR") return Op::Xnor;
    return Op::Const;  // marker: not a binary operator
  }

  // primary := NOT(e) | IF(e, e, e) | (expr) | terminal
  NodePtr primary() {
    skip_ws();
    if (peek() == '(') {
      expect('(');
      NodePtr e = expr();
      expect(')');
      return e;
    }
    size_t at = pos;
    std::string name = word();
    if (name == "NOT") {
      expect('(');
      NodePtr a = expr();
      expect(')');
      return op_node(Op::Not, {a});
    }
    if (name == "IF") {
      expect('(');
      NodePtr a = expr();
      expect(',');
      NodePtr b = expr();
      expect(',');
      NodePtr c = expr();
      expect(')');
      return op_node(Op::If, {a, b, c});
    }
    return terminal(name, at);
  }

  // expr := primary [ BINOP primary ]
  NodePtr expr() {
    NodePtr left = primary();
    skip_ws();
    if (pos < text.size() &&
        std::isalpha(static_cast<unsigned char>(text[pos]))) {
      size_t at = pos;
      std::string name = word();
      Op op = binary_op(name);
      if (op == Op::Const)
        throw ParseError("unknown operator \"" + name + "\"", at);
      NodePtr right = primary();
      return op_node(op, {left, right});
    }
    return left;
  }
};

}  // namespace

std::string serialize_tree(const GpTree& tree) {
  std::string out;
  serialize_node(tree.root(), out);
  return out;
}

GpTree parse_tree(const std::string& text, const TerminalContext& ctx) {
  Parser p{text, ctx};
  NodePtr root = p.expr();
  if (!p.at_end()) throw ParseError("trailing input", p.pos);
  return GpTree(root);
}

void save_trees(const std::string& path, const std::vector<GpTree>& trees) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  for (const auto& t : trees) os << serialize_tree(t) << "\n";
}

std::vector<GpTree> load_trees(const std::string& path,
                               const TerminalContext& ctx) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::vector<GpTree> trees;
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    trees.push_back(parse_tree(line, ctx));
  }
  return trees;
}

}  // namespace bfgp
