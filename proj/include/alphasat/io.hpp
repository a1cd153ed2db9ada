#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "alphasat/types.hpp"

namespace alphasat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// DIMACS CNF: "p cnf <n> <m>" header, 'c' comment lines, clauses as
/// 1-indexed signed literals terminated by 0. Clause count must match the
/// header; variables are 0-indexed in memory.
CnfFormula read_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

/// Hypergraph format mirroring DIMACS: "p hyg <n> <m>" header, then m lines
/// of 1-indexed vertex ids. Edges are canonicalized to sorted order on read;
/// a repeated vertex within an edge is an error.
Hypergraph read_hypergraph(std::string_view text);
std::string write_hypergraph(const Hypergraph& h);

CnfFormula load_formula(const std::string& path);
void save_formula(const std::string& path, const CnfFormula& f);
Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const Hypergraph& h);

}  // namespace alphasat
