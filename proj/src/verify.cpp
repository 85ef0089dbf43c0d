#include "dta/verify.hpp"

#include <cstdlib>
#include <limits>

namespace dta {

VerifyLimits VerifyLimits::from_env() {
  VerifyLimits limits;
  if (const char* env = std::getenv("DTA_MAX_ENUM"); env && *env) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw DomainError(std::string("DTA_MAX_ENUM is not an integer: ") + env);
    limits.max_enumeration = v;
  }
  return limits;
}

void require_dta_parameters(const TypeVector& types, std::size_t d,
                            std::size_t t) {
  if (t < 1)
    throw InfeasibleParameters("strength t must be >= 1");
  if (t >= types.k())
    throw InfeasibleParameters("detecting arrays need t < k (t = " +
                               std::to_string(t) + ", k = " +
                               std::to_string(types.k()) + ")");
  if (types.min_size() < 2)
    throw InfeasibleParameters("every alphabet size must be >= 2 (got " +
                               types.to_string() + ")");
  if (d >= static_cast<std::size_t>(types.min_size()))
    throw InfeasibleParameters(
        "detecting arrays need d < min v_j (d = " + std::to_string(d) +
        ", min v_j = " + std::to_string(types.min_size()) + ")");
}

std::uint64_t coverage_index(const MixedArray& a, std::size_t t,
                             const VerifyLimits& limits, Exec exec) {
  return kernels::coverage(a, t, limits.max_tuple_cells, exec).min_count;
}

VerifyReport is_super_simple(const MixedArray& a, std::size_t t,
                             const VerifyLimits& limits, Exec exec) {
  VerifyReport rep;
  rep.property = "super-simple(t=" + std::to_string(t) + ")";
  auto dup = kernels::first_duplicate(a, t, limits.max_tuple_cells, exec);
  rep.holds = !dup.has_value();
  if (dup) {
    rep.witness = Witness{{dup->tuple}, dup->rows,
                          "tuple " + dup->tuple.to_string() + " appears in rows " +
                              format_rows(dup->rows)};
  }
  return rep;
}

VerifyReport is_d_extendible(const MixedArray& a, std::size_t t,
                             std::size_t d, const VerifyLimits& limits,
                             Exec exec) {
  if (t < 1 || t >= a.cols())
    throw DomainError("d-extendibility needs 1 <= t < k (t = " +
                      std::to_string(t) + ", k = " + std::to_string(a.cols()) +
                      ")");
  if (d < 1) throw DomainError("d-extendibility needs d >= 1");
  if (d > limits.max_extendible_d)
    throw DomainError("exact check infeasible: d = " + std::to_string(d) +
                      " exceeds the supported maximum " +
                      std::to_string(limits.max_extendible_d));
  if (interaction_count(a.types(), t) > limits.max_tuple_cells)
    throw EnumerationLimit("d-extendibility table exceeds the cell cap",
                           interaction_count(a.types(), t),
                           limits.max_tuple_cells);
  VerifyReport rep;
  rep.property =
      std::to_string(d) + "-extendible(t=" + std::to_string(t) + ")";
  auto cover = kernels::first_extension_cover(a, t, d, exec);
  rep.holds = !cover.has_value();
  if (cover) {
    Witness w;
    w.interactions.push_back(cover->base);
    w.interactions.insert(w.interactions.end(), cover->cover.begin(),
                          cover->cover.end());
    w.rows = rho(a, cover->base);
    if (cover->cover.empty()) {
      w.note = "interaction " + cover->base.to_string() + " is not covered";
    } else {
      w.note = "rows " + format_rows(w.rows) + " of " +
               cover->base.to_string() + " are covered by " +
               std::to_string(cover->cover.size()) + " extension(s)";
    }
    rep.witness = std::move(w);
  }
  return rep;
}

std::uint64_t lower_bound(std::size_t d, std::size_t t,
                          const TypeVector& types) {
  require_dta_parameters(types, d, t);
  auto p = types.largest_product(t);
  if (p > std::numeric_limits<std::uint64_t>::max() / (d + 1))
    throw DomainError("lower bound overflows 64 bits");
  return (d + 1) * p;
}

VerifyReport min_rho_check(const MixedArray& a, std::size_t d, std::size_t t,
                           const VerifyLimits& limits, Exec exec) {
  auto stats = kernels::coverage(a, t, limits.max_tuple_cells, exec);
  VerifyReport rep;
  rep.property = "min |rho| >= " + std::to_string(d + 1) +
                 " (t=" + std::to_string(t) + ")";
  rep.holds = stats.min_count >= d + 1;
  rep.stats["coverage_index"] = static_cast<std::int64_t>(stats.min_count);
  if (!rep.holds) {
    auto rows = rho(a, stats.min_witness);
    rep.witness = Witness{{stats.min_witness}, rows,
                          "interaction " + stats.min_witness.to_string() +
                              " is covered " + std::to_string(rows.size()) +
                              " time(s)"};
  }
  return rep;
}

VerifyReport is_detecting(const MixedArray& a, std::size_t d, std::size_t t,
                          const VerifyLimits& limits, Exec exec) {
  if (d < 1) throw InfeasibleParameters("detecting arrays need d >= 1");
  require_dta_parameters(a.types(), d, t);
  VerifyReport rep;
  rep.property = "(" + std::to_string(d) + "," + std::to_string(t) + ")-DTA";
  auto bound = lower_bound(d, t, a.types());
  rep.stats["N"] = static_cast<std::int64_t>(a.rows());
  rep.stats["lower_bound"] = static_cast<std::int64_t>(bound);

  auto cover = min_rho_check(a, d, t, limits, exec);
  rep.stats["coverage_index"] = cover.stats["coverage_index"];
  if (!cover.holds) {
    rep.holds = false;
    rep.witness = std::move(cover.witness);
    rep.detail = "not an MCA_" + std::to_string(d + 1);
  } else {
    auto ext = is_d_extendible(a, t, d, limits, exec);
    rep.holds = ext.holds;
    if (!ext.holds) {
      rep.witness = std::move(ext.witness);
      rep.detail = "not " + std::to_string(d) + "-extendible";
    }
  }
  rep.stats["optimum"] = rep.holds && a.rows() == bound ? 1 : 0;
  return rep;
}

VerifyReport is_detecting_brute(const MixedArray& a, std::size_t d,
                                std::size_t t, const VerifyLimits& limits,
                                Exec exec) {
  if (d < 1) throw InfeasibleParameters("detecting arrays need d >= 1");
  require_dta_parameters(a.types(), d, t);
  auto m = interaction_count(a.types(), t);
  auto subsets = binomial(m, d);
  auto work = subsets > std::numeric_limits<std::uint64_t>::max() / m
                  ? std::numeric_limits<std::uint64_t>::max()
                  : subsets * m;
  if (work > limits.max_enumeration)
    throw EnumerationLimit("brute-force detection over " + std::to_string(m) +
                               " interactions and all " + std::to_string(d) +
                               "-sets",
                           work, limits.max_enumeration);
  auto table = build_interaction_table(a, t, exec);
  VerifyReport rep;
  rep.property =
      "(" + std::to_string(d) + "," + std::to_string(t) + ")-DTA (brute)";
  rep.stats["interactions"] = static_cast<std::int64_t>(m);
  rep.stats["subset_tests"] = static_cast<std::int64_t>(work);
  auto v = kernels::first_detection_violation(table, d, exec);
  rep.holds = !v.has_value();
  if (v) {
    Witness w;
    w.interactions.push_back(v->target);
    w.interactions.insert(w.interactions.end(), v->set.begin(), v->set.end());
    w.rows = rho(a, v->target);
    std::string set;
    for (const auto& s : v->set) set += (set.empty() ? "" : ", ") + s.to_string();
    w.note = "rho" + v->target.to_string() +
             (v->target_in_set ? " not within rho of its own set {"
                               : " within rho of {") +
             set + "}";
    rep.witness = std::move(w);
  }
  return rep;
}

namespace {

VerifyReport constraint_report(bool holds, bool conclusive,
                               std::string detail) {
  VerifyReport rep;
  rep.property = "search constraints";
  rep.holds = holds;
  rep.conclusive = conclusive;
  rep.detail = detail;
  if (!holds) rep.witness = Witness{{}, {}, std::move(detail)};
  return rep;
}

}  // namespace

VerifyReport check_search_constraints(const TypeVector& types, std::size_t d,
                                      std::size_t t) {
  try {
    require_dta_parameters(types, d, t);
  } catch (const InfeasibleParameters& e) {
    return constraint_report(false, true, std::string("REJECT: ") + e.what());
  }
  if (d != 1 || t != 2)
    return constraint_report(true, false,
                             "UNKNOWN: no known constraint for (d,t) = (" +
                                 std::to_string(d) + "," + std::to_string(t) +
                                 ")");
  auto s = types.sorted();
  const auto k = s.size();
  bool applied = false;
  std::string passed;

  if (s.front() == s.back()) {
    auto q = static_cast<std::size_t>(s.front());
    if (k > 2 * q)
      return constraint_report(
          false, true,
          "REJECT: an optimum (1,2)-DTA of type " + std::to_string(q) + "^" +
              std::to_string(k) + " needs k <= 2q = " + std::to_string(2 * q));
    applied = true;
    passed = "k <= 2q";
  }

  // Family 2^u 3^k w^1 with w >= 3.
  std::size_t twos = 0, threes = 0, big = 0;
  for (int v : s) {
    if (v == 2) ++twos;
    else if (v == 3) ++threes;
    else ++big;
  }
  bool family = false;
  std::size_t u = twos, kk = 0;
  if (big == 1 && threes + twos + 1 == k) {
    family = true;
    kk = threes;
  } else if (big == 0 && threes >= 1) {
    family = true;
    kk = threes - 1;
  }
  if (family) {
    auto fam = "2^" + std::to_string(u) + " 3^" + std::to_string(kk) + " w^1";
    auto reject = [&](const std::string& why) {
      return constraint_report(false, true,
                               "REJECT: type " + fam + " needs " + why);
    };
    if (u >= 2 && kk >= 2) return reject("u < 2 or k < 2");
    if (kk == 0 && u > 3) return reject("u <= 3 when k = 0");
    if (kk == 1 && u > 4) return reject("u <= 4 when k = 1");
    if (u == 0 && kk > 5) return reject("k <= 5 when u = 0");
    if (u == 1 && kk > 3) return reject("k <= 3 when u = 1");
    applied = true;
    passed += (passed.empty() ? "" : "; ") + std::string("family ") + fam;
  }
  if (!applied)
    return constraint_report(true, false,
                             "UNKNOWN: no known constraint for type " +
                                 types.exponent_notation());
  return constraint_report(true, true, "PASS: " + passed);
}

}  // namespace dta
