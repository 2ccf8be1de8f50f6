#include "pellkit/oracle.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "pellkit/cf.hpp"
#include "pellkit/family.hpp"

namespace pellkit {

SearchReport brute_force(const Int& d, const Int& rhs, const Int& y_max) {
  if (d < 2) throw domain_error("brute_force: d must be >= 2");
  if (is_perfect_square(d))
    throw domain_error("brute_force: d is a perfect square");
  if (y_max < 1) throw domain_error("brute_force: y_max must be >= 1");
  SearchReport report{d, rhs, y_max, {}, true};
  Int t = d + rhs;  // d*1^2 + rhs
  const Int step0 = d;
  for (Int y = 1; y <= y_max; ++y) {
    if (t >= 0 && is_perfect_square(t))
      report.found.push_back({isqrt(t), y, 1, 0});
    // d*(y+1)^2 = d*y^2 + d*(2y+1)
    t += step0 * (2 * y + 1);
  }
  // Solution indices by order of discovery; rhs recorded as given.
  const int rhs_tag = rhs.convert_to<int>();
  for (std::size_t i = 0; i < report.found.size(); ++i) {
    report.found[i].n = static_cast<std::int64_t>(i) + 1;
    report.found[i].rhs = rhs_tag;
  }
  return report;
}

namespace {

struct CellChecker {
  const CrossCheckGrid& grid;
  std::vector<Discrepancy> out;

  void mismatch(const std::string& where, const std::string& detail) {
    out.push_back({where, detail});
  }

  void check_family_cell(Family fam, std::int64_t a, std::int64_t b) {
    const std::string tag = (fam == Family::kF1 ? "F1" : "F2");
    std::ostringstream loc;
    loc << tag << " a=" << a << " b=" << b;
    const std::string where = loc.str();

    FamilyParams params = FamilyParams::make(fam, a, b);

    // Closed-form CF vs PQa.
    const SurdExpansion closed = params.closed_form_cf();
    const SurdExpansion generic = cf_expand(params.d);
    if (!(closed == generic))
      mismatch(where, "closed-form CF differs from PQa expansion");
    if (generic.period_length() % 2 != 0)
      mismatch(where, "period length expected even, got odd");

    // Fundamental: closed form vs CF-derived vs brute force.
    const PellSolution unit = fundamental_unit(params.d);
    const PellSolution fund = family_fundamental(params, 1);
    if (fund.x != unit.x || fund.y != unit.y)
      mismatch(where, "closed-form fundamental differs from CF fundamental");
    if (fund.y <= grid.y_bound) {
      const SearchReport scan = brute_force(params.d, 1, fund.y);
      if (scan.found.empty() || scan.found.front().x != fund.x ||
          scan.found.front().y != fund.y)
        mismatch(where, "brute force least solution differs from fundamental");
    }

    const PellSolution fund4 = family_fundamental(params, 4);
    if (!is_solution(params.d, 4, fund4.x, fund4.y))
      mismatch(where, "rhs=4 fundamental fails its equation");

    for (std::int64_t n = 1; n <= grid.n_max; ++n) {
      std::ostringstream nloc;
      nloc << where << " n=" << n;
      const std::string nwhere = nloc.str();

      const PellSolution via_lucas =
          *solution_of(family_solve(params, 1, n));
      const PellSolution via_powers = nth_solution(params.d, unit, n);
      if (via_lucas.x != via_powers.x || via_lucas.y != via_powers.y)
        mismatch(nwhere, "Lucas closed form differs from unit powers");

      const Convergent frac = evaluate_word(nth_quotient_form(params, n));
      if (frac.p != via_lucas.x || frac.q != via_lucas.y)
        mismatch(nwhere, "n-th quotient form differs from solution fraction");
      if (gcd(frac.p, frac.q) != 1)
        mismatch(nwhere, "quotient form fraction not in lowest terms");

      const PellSolution sol4 = *solution_of(family_solve(params, 4, n));
      if (!is_solution(params.d, 4, sol4.x, sol4.y))
        mismatch(nwhere, "rhs=4 closed form fails its equation");
      if (params.d % 4 != 0 &&
          (sol4.x != 2 * via_lucas.x || sol4.y != 2 * via_lucas.y))
        mismatch(nwhere, "rhs=4 solution is not the doubled rhs=1 solution");
    }

    // Unsolvable right-hand sides: theorem verdict plus exhaustive scan.
    if (solution_of(family_solve(params, -1, 1)))
      mismatch(where, "rhs=-1 reported solvable");
    if (!brute_force(params.d, -1, grid.y_bound).found.empty())
      mismatch(where, "brute force found rhs=-1 solution");
    if (fam == Family::kF2) {
      if (solution_of(family_solve(params, -4, 1)))
        mismatch(where, "rhs=-4 reported solvable");
      if (!brute_force(params.d, -4, grid.y_bound).found.empty())
        mismatch(where, "brute force found rhs=-4 solution");
    }
  }

  void check_corollary_cell(Corollary which, std::int64_t k) {
    static constexpr const char* kNames[] = {"9k2-3 rhs=1", "9k2-3 rhs=4",
                                             "9k2-6 rhs=1", "9k2-6 rhs=4"};
    std::ostringstream loc;
    loc << "corollary " << kNames[static_cast<int>(which)] << " k=" << k;
    const std::string where = loc.str();
    const bool is_f1 = (which == Corollary::kD9k2Minus3Rhs1 ||
                        which == Corollary::kD9k2Minus3Rhs4);
    const int rhs = corollary_rhs(which);
    for (std::int64_t n = 1; n <= grid.n_max; ++n) {
      PellSolution sol;
      try {
        sol = corollary_solve(which, k, n);  // self-verifying
      } catch (const domain_error& e) {
        mismatch(where, std::string("corollary formula rejected: ") + e.what());
        break;
      }
      // The corollaries are the b=3, a=k family instances; compare where
      // the theorem hypotheses (a >= 2 for F1, a >= 3 for F2) hold.
      if ((is_f1 && k >= 2) || (!is_f1 && k >= 3)) {
        FamilyParams params =
            FamilyParams::make(is_f1 ? Family::kF1 : Family::kF2, k, 3);
        const PellSolution via_family =
            *solution_of(family_solve(params, rhs, n));
        if (sol.x != via_family.x || sol.y != via_family.y) {
          std::ostringstream nloc;
          nloc << where << " n=" << n;
          mismatch(nloc.str(), "corollary differs from family closed form");
        }
      }
    }
  }
};

}  // namespace

std::vector<Discrepancy> cross_check(const CrossCheckGrid& grid,
                                     unsigned jobs) {
  // Independent tasks, aggregated in task order so output does not
  // depend on the jobs count.
  std::vector<std::function<std::vector<Discrepancy>()>> tasks;
  for (std::int64_t a = 2; a <= grid.a_max; ++a)
    for (std::int64_t b = 1; b <= grid.b_max; ++b)
      tasks.emplace_back([&grid, a, b] {
        CellChecker c{grid, {}};
        c.check_family_cell(Family::kF1, a, b);
        return std::move(c.out);
      });
  for (std::int64_t a = 3; a <= grid.a_max; ++a)
    for (std::int64_t b = 1; b <= grid.b_max; ++b)
      tasks.emplace_back([&grid, a, b] {
        CellChecker c{grid, {}};
        c.check_family_cell(Family::kF2, a, b);
        return std::move(c.out);
      });
  for (Corollary which :
       {Corollary::kD9k2Minus3Rhs1, Corollary::kD9k2Minus3Rhs4,
        Corollary::kD9k2Minus6Rhs1, Corollary::kD9k2Minus6Rhs4})
    for (std::int64_t k = 1; k <= grid.k_max; ++k)
      tasks.emplace_back([&grid, which, k] {
        CellChecker c{grid, {}};
        c.check_corollary_cell(which, k);
        return std::move(c.out);
      });

  std::vector<std::vector<Discrepancy>> results(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size();
           i = next.fetch_add(1))
        results[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<Discrepancy> out;
  for (auto& r : results)
    out.insert(out.end(), std::make_move_iterator(r.begin()),
               std::make_move_iterator(r.end()));
  return out;
}

}  // namespace pellkit
