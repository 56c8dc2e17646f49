#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bfgp/gp_eval.hpp"
#include "bfgp/gp_tree.hpp"

namespace bfgp {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position(position) {}
  size_t position;
};

// Canonical text form: terminals v<j> / f<i> (and 0/1 for simplifier
// output), NOT(x) and IF(a, b, c) as prefix calls, binary operators infix
// and parenthesized, e.g. "IF(v0, f0, (v1 XOR f1))".
std::string serialize_tree(const GpTree& tree);

// Accepts the canonical form plus an optional unparenthesized top-level
// binary operator. Terminal indices are checked against ctx (k, s).
GpTree parse_tree(const std::string& text, const TerminalContext& ctx);

// newline-delimited tree lists (population dumps, analysis inputs)
void save_trees(const std::string& path, const std::vector<GpTree>& trees);
std::vector<GpTree> load_trees(const std::string& path,
                               const TerminalContext& ctx);

}  // namespace bfgp
