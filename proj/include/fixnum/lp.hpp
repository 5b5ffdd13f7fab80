#pragma once

#include "fixnum/fixing.hpp"
#include "fixnum/graph.hpp"
#include "fixnum/rational.hpp"

#include <vector>

namespace fixnum {

// Fractional covering program min 1'x subject to Bx >= 1, x >= 0, where B
// has 0/1 rows over `columns` variables.
struct CoverLp {
  int columns = 0;
  std::vector<VertexSet> rows;

  static CoverLp from_rows(int columns, std::vector<VertexSet> rows);
  static CoverLp from_fixed_graph(const FixedGraph& fg);

  // Drops duplicate rows and rows containing another row (implied
  // constraints); the optimum is unchanged.
  void reduce();
};

struct LpSolution {
  Rational value;
  std::vector<Rational> weights;  // per column, each in [0,1]
};

// Exact primal simplex with Bland's rule on the packing dual
// (max 1'y : B'y <= 1, y >= 0), which is feasible at y = 0, so no phase-1
// is needed.  The covering witness is the vector of slack reduced costs at
// optimality; primal and dual solutions are cross-checked (feasibility and
// equal objectives) before returning.
LpSolution solve_cover_lp(const CoverLp& lp);

// fix_f(G): optimum of the covering LP over the fixed graph's rows.
LpSolution fractional_fixing_number(const Graph& g, const PermGroup& aut);
LpSolution fractional_fixing_number(const Graph& g);

// dim_f(G): optimum of the covering LP whose rows are the resolving
// neighborhoods R(u,v) of all distinct vertex pairs; requires connectivity.
LpSolution fractional_metric_dimension(const Graph& g);

// Minimum cardinality 0/1 cover by branch and bound; used to cross-check
// fixing_number against the covering relaxation's integral optimum.
int integral_cover_optimum(const CoverLp& lp, int max_columns = 30);

} // namespace fixnum
