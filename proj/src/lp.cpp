#include "fixnum/lp.hpp"

#include "fixnum/autgroup.hpp"
#include "fixnum/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fixnum {

CoverLp CoverLp::from_rows(int columns, std::vector<VertexSet> rows) {
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != columns)
      throw std::invalid_argument("row width does not match column count");
    if (row.none())
      throw std::invalid_argument("covering LP has an unsatisfiable empty row");
  }
  return CoverLp{columns, std::move(rows)};
}

CoverLp CoverLp::from_fixed_graph(const FixedGraph& fg) {
  return from_rows(fg.n, fg.incidence);
}

void CoverLp::reduce() {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<VertexSet> kept;
  for (const auto& candidate : rows) {
    bool implied = false;
    for (const auto& other : rows)
      if (other != candidate && other.is_subset_of(candidate)) {
        implied = true;
        break;
      }
    if (!implied) kept.push_back(candidate);
  }
  rows = std::move(kept);
}

namespace {

// Dense simplex tableau for max c'y : Ay <= b, y >= 0 started from the
// slack basis.  Entering rule and ratio ties both follow Bland (smallest
// index), which excludes cycling.
class PackingSimplex {
public:
  PackingSimplex(const CoverLp& lp)
      : m_(lp.columns), r_(static_cast<int>(lp.rows.size())) {
    tableau_.assign(m_, std::vector<Rational>(r_ + m_ + 1));
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < r_; ++j)
        if (lp.rows[j].test(i)) tableau_[i][j] = 1;
      tableau_[i][r_ + i] = 1;
      tableau_[i][rhs()] = 1;
    }
    reduced_.assign(r_ + m_, Rational(0));
    for (int j = 0; j < r_; ++j) reduced_[j] = -1;
    basic_.resize(m_);
    for (int i = 0; i < m_; ++i) basic_[i] = r_ + i;
  }

  void run() {
    // The feasible region is bounded (every variable and slack lies in
    // [0,1]), so the only way to loop forever is a cycling bug; the
    // iteration guard turns that into a loud failure.
    for (long long iter = 0;; ++iter) {
      if (iter > 1'000'000)
        throw std::logic_error("simplex failed to terminate");
      int enter = -1;
      for (int j = 0; j < r_ + m_; ++j)
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (tableau_[i][enter] <= 0) continue;
        const Rational ratio = tableau_[i][rhs()] / tableau_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0)
        throw std::logic_error("packing LP reported unbounded");
      pivot(leave, enter);
    }
  }

  Rational objective() const { return objective_; }

  // Optimal covering solution: reduced cost of slack i is the i-th dual
  // multiplier of the packing program, i.e. the covering weight of column i.
  std::vector<Rational> cover_weights() const {
    std::vector<Rational> x(m_);
    for (int i = 0; i < m_; ++i) x[i] = reduced_[r_ + i];
    return x;
  }

  // Optimal packing solution (basic variables at their rhs values).
  std::vector<Rational> packing_solution() const {
    std::vector<Rational> y(r_, Rational(0));
    for (int i = 0; i < m_; ++i)
      if (basic_[i] < r_) y[basic_[i]] = tableau_[i][rhs()];
    return y;
  }

private:
  int rhs() const { return r_ + m_; }

  void pivot(int leave, int enter) {
    auto& prow = tableau_[leave];
    const Rational p = prow[enter];
    for (auto& cell : prow)
      if (cell != 0) cell /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == leave) continue;
      const Rational factor = tableau_[i][enter];
      if (factor == 0) continue;
      auto& row = tableau_[i];
      for (int j = 0; j <= rhs(); ++j)
        if (prow[j] != 0) row[j] -= factor * prow[j];
    }
    const Rational dfactor = reduced_[enter];
    if (dfactor != 0) {
      for (int j = 0; j < r_ + m_; ++j)
        if (prow[j] != 0) reduced_[j] -= dfactor * prow[j];
      objective_ -= dfactor * prow[rhs()];
    }
    basic_[leave] = enter;
  }

  int m_;  // packing constraints = covering columns
  int r_;  // packing variables = covering rows
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> reduced_;
  std::vector<int> basic_;
  Rational objective_ = 0;
};

void verify_certificate(const CoverLp& lp, const Rational& value,
                        const std::vector<Rational>& x,
                        const std::vector<Rational>& y) {
  Rational sum_x = 0;
  for (const Rational& w : x) {
    if (w < 0) throw std::logic_error("covering witness has a negative weight");
    sum_x += w;
  }
  if (sum_x != value)
    throw std::logic_error("covering witness does not match the LP value");
  for (const auto& row : lp.rows) {
    Rational s = 0;
    for (int i = row.find_first(); i != static_cast<int>(VertexSet::npos);
         i = row.find_next(i))
      s += x[i];
    if (s < 1) throw std::logic_error("covering witness violates a row");
  }
  Rational sum_y = 0;
  for (const Rational& w : y) {
    if (w < 0) throw std::logic_error("packing witness has a negative weight");
    sum_y += w;
  }
  if (sum_y != value)
    throw std::logic_error("packing witness does not match the LP value");
  for (int i = 0; i < lp.columns; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < lp.rows.size(); ++j)
      if (lp.rows[j].test(i)) s += y[j];
    if (s > 1) throw std::logic_error("packing witness violates a column");
  }
}

} // namespace

LpSolution solve_cover_lp(const CoverLp& lp) {
  if (lp.columns <= 0)
    throw std::invalid_argument("covering LP needs at least one column");
  if (lp.rows.empty())
    return LpSolution{Rational(0),
                      std::vector<Rational>(lp.columns, Rational(0))};
  for (const auto& row : lp.rows)
    if (row.none())
      throw std::invalid_argument("covering LP has an unsatisfiable empty row");

  PackingSimplex simplex(lp);
  simplex.run();
  LpSolution sol;
  sol.value = simplex.objective();
  sol.weights = simplex.cover_weights();
  // Weak duality: matching feasible solutions on both sides prove each
  // other optimal.  Verified before the [0,1] clamp, which is a no-op for
  // an optimal covering solution (lowering any weight above 1 to 1 keeps
  // all 0/1 rows satisfied and would shrink the objective).
  verify_certificate(lp, sol.value, sol.weights, simplex.packing_solution());
  for (Rational& w : sol.weights)
    if (w > 1) w = 1;
  return sol;
}

LpSolution fractional_fixing_number(const Graph& g, const PermGroup& aut) {
  CoverLp lp = CoverLp::from_fixed_graph(fixed_graph(g, aut));
  lp.reduce();
  LpSolution sol = solve_cover_lp(lp);
  if (!lp.rows.empty()) {
    // Sanity against two always-valid bounds: any cover needs total weight
    // 1 on some row, and weight 1/2 on every active vertex is feasible.
    const Rational half_active =
        Rational(static_cast<long long>(active_and_core(aut).active.size())) /
        2;
    if (sol.value < 1 || sol.value > half_active)
      throw std::logic_error("fractional fixing number out of proven range");
  }
  return sol;
}

LpSolution fractional_fixing_number(const Graph& g) {
  return fractional_fixing_number(g, automorphisms(g));
}

LpSolution fractional_metric_dimension(const Graph& g) {
  const DistanceMatrix d(g);
  if (!d.connected())
    throw std::invalid_argument(
        "fractional metric dimension requires a connected graph");
  const int n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      VertexSet row(n);
      for (int x = 0; x < n; ++x)
        if (d(x, u) != d(x, v)) row.set(x);
      rows.push_back(std::move(row));
    }
  CoverLp lp = CoverLp::from_rows(n, std::move(rows));
  lp.reduce();
  return solve_cover_lp(lp);
}

namespace {

struct BranchState {
  const std::vector<VertexSet>* cover_by_column;
  int best;
  long long nodes;
  long long node_budget;
};

void branch(const std::vector<VertexSet>& rows, const VertexSet& covered,
            int chosen, BranchState& st) {
  if (++st.nodes > st.node_budget)
    throw cap_exceeded("integral cover search exceeded its node budget");
  if (covered.count() == rows.size()) {
    st.best = std::min(st.best, chosen);
    return;
  }
  if (chosen + 1 >= st.best) return;
  // Branch on the uncovered row with the fewest columns.
  int pick = -1;
  for (std::size_t j = 0; j < rows.size(); ++j)
    if (!covered.test(j) &&
        (pick < 0 || rows[j].count() < rows[pick].count()))
      pick = static_cast<int>(j);
  const auto& row = rows[pick];
  for (int x = row.find_first(); x != static_cast<int>(VertexSet::npos);
       x = row.find_next(x))
    branch(rows, covered | (*st.cover_by_column)[x], chosen + 1, st);
}

} // namespace

int integral_cover_optimum(const CoverLp& input, int max_columns) {
  if (input.columns > max_columns)
    throw cap_exceeded("integral cover search capped at " +
                       std::to_string(max_columns) + " columns, got " +
                       std::to_string(input.columns));
  CoverLp lp = input;
  lp.reduce();
  if (lp.rows.empty()) return 0;
  const std::size_t r = lp.rows.size();
  std::vector<VertexSet> cover_by_column(lp.columns, VertexSet(r));
  for (std::size_t j = 0; j < r; ++j)
    for (int x = lp.rows[j].find_first();
         x != static_cast<int>(VertexSet::npos); x = lp.rows[j].find_next(x))
      cover_by_column[x].set(j);
  // Greedy incumbent: repeatedly take the column covering the most
  // still-uncovered rows.
  int greedy = 0;
  VertexSet covered(r);
  while (covered.count() < r) {
    int best_col = 0;
    std::size_t best_gain = 0;
    for (int x = 0; x < lp.columns; ++x) {
      const std::size_t gain = (cover_by_column[x] - covered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best_col = x;
      }
    }
    covered |= cover_by_column[best_col];
    ++greedy;
  }
  BranchState st{&cover_by_column, greedy, 0, 10'000'000};
  branch(lp.rows, VertexSet(r), 0, st);
  return st.best;
}

} // namespace fixnum
