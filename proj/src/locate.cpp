#include "dta/locate.hpp"

namespace dta {

RowSet OutcomeVector::failing_rows() const {
  RowSet out;
  for (std::size_t r = 0; r < failed_.size(); ++r)
    if (failed_[r]) out.push_back(r);
  return out;
}

std::string OutcomeVector::to_string() const {
  std::string out;
  for (bool f : failed_) out += f ? 'F' : 'P';
  return out;
}

OutcomeVector simulate_outcome(const MixedArray& a,
                               std::span<const Interaction> faults) {
  for (const auto& f : faults) {
    f.validate(a.types());
    if (f.strength() != faults.front().strength())
      throw DomainError("fault interactions must share one strength");
  }
  std::vector<bool> failed(a.rows(), false);
  for (auto r : rho_union(a, faults)) failed[r] = true;
  return OutcomeVector(std::move(failed));
}

LocateResult locate_faults(const MixedArray& a, std::size_t d, std::size_t t,
                           const OutcomeVector& y, Exec exec) {
  if (y.size() != a.rows())
    throw DomainError("outcome vector has " + std::to_string(y.size()) +
                      " entries but the array has " + std::to_string(a.rows()) +
                      " rows");
  if (t < 1 || t > a.cols())
    throw DomainError("strength t outside 1..k");
  auto table = build_interaction_table(a, t, exec);
  std::vector<std::uint64_t> fail(table.masks.words(), 0);
  for (auto r : y.failing_rows()) fail[r / 64] |= std::uint64_t{1} << (r % 64);

  auto cand = kernels::contained_interactions(table, fail, exec);
  if (cand.size() > d) return TooManyFaults{cand.size()};
  std::vector<std::uint64_t> explained(fail.size(), 0);
  for (auto i : cand) bits::or_into(explained, table.masks[i]);
  if (bits::subset(fail, explained)) {
    Identified id;
    for (auto i : cand) id.faults.push_back(table.interactions[i]);
    return id;
  }
  for (std::size_t w = 0; w < fail.size(); ++w) fail[w] &= ~explained[w];
  return Inconsistent{bits::to_rows(fail, a.rows())};
}

std::string describe(const LocateResult& result) {
  struct {
    std::string operator()(const Identified& id) const {
      if (id.faults.empty()) return "identified: no faults";
      std::string s = "identified:";
      for (const auto& f : id.faults) s += " " + f.to_string();
      return s;
    }
    std::string operator()(const TooManyFaults& m) const {
      return "too many faults (" + std::to_string(m.candidates) +
             " candidate interactions)";
    }
    std::string operator()(const Inconsistent& inc) const {
      return "inconsistent: failing rows " + format_rows(inc.unexplained) +
             " are not explained by any interaction";
    }
  } visitor;
  return std::visit(visitor, result);
}

}  // namespace dta
