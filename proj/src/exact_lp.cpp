#include "rhotensor/exact_lp.hpp"

#include "rhotensor/errors.hpp"

namespace rhotensor {

void LinearSystem::add_equality(std::vector<Rational> row, Rational rhs) {
  if (row.size() != num_vars) throw PreconditionViolated("constraint width does not match num_vars");
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_upper_bound(std::vector<Rational> row, Rational rhs) {
  if (row.size() != num_vars) throw PreconditionViolated("constraint width does not match num_vars");
  le_rows.push_back(std::move(row));
  le_rhs.push_back(std::move(rhs));
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& x) const {
  if (x.size() != num_vars) return false;
  for (const auto& v : x)
    if (v.sign() < 0) return false;
  auto dot = [&](const std::vector<Rational>& row) {
    Rational s;
    for (std::size_t j = 0; j < num_vars; ++j)
      if (!row[j].is_zero() && !x[j].is_zero()) s += row[j] * x[j];
    return s;
  };
  for (std::size_t i = 0; i < eq_rows.size(); ++i)
    if (dot(eq_rows[i]) != eq_rhs[i]) return false;
  for (std::size_t i = 0; i < le_rows.size(); ++i)
    if (dot(le_rows[i]) > le_rhs[i]) return false;
  return true;
}

std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system) {
  const std::size_t n = system.num_vars;
  const std::size_t n_le = system.le_rows.size();
  const std::size_t m = system.eq_rows.size() + n_le;
  if (m == 0) return std::vector<Rational>(n);

  // Columns: original variables, one slack per <= row, one artificial per row.
  const std::size_t slack0 = n;
  const std::size_t art0 = n + n_le;
  const std::size_t cols = art0 + m;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < m; ++i) {
    const bool is_eq = i < system.eq_rows.size();
    const auto& row = is_eq ? system.eq_rows[i] : system.le_rows[i - system.eq_rows.size()];
    Rational rhs = is_eq ? system.eq_rhs[i] : system.le_rhs[i - system.eq_rows.size()];
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = row[j];
    if (!is_eq) tab[i][slack0 + (i - system.eq_rows.size())] = Rational(1);
    if (rhs.sign() < 0) {
      for (std::size_t j = 0; j < art0; ++j) tab[i][j] = -tab[i][j];
      rhs = -rhs;
    }
    tab[i][art0 + i] = Rational(1);
    tab[i][cols] = rhs;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = art0 + i;

  // Reduced costs of the phase-one objective Σ artificials.
  std::vector<Rational> cost(cols + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < art0 || j == cols) cost[j] -= tab[i][j];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter].sign() <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == m) throw InternalConsistencyError("unbounded phase-one simplex");

    const Rational piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter].is_zero()) continue;
      const Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (!tab[leave][j].is_zero()) tab[i][j] -= f * tab[leave][j];
    }
    if (!cost[enter].is_zero()) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (!tab[leave][j].is_zero()) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  // cost[cols] holds minus the objective value.
  if (!cost[cols].is_zero()) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = tab[i][cols];
  if (!system.satisfied_by(x)) throw InternalConsistencyError("simplex returned a point that violates the system");
  return x;
}

}  // namespace rhotensor
