#include "glr/fin_ab_group.hpp"

#include <sstream>

#include "glr/errors.hpp"
#include "glr/smith.hpp"

namespace glr {

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const Int& f : invariant_factors) {
    if (!first) out << " + ";
    out << "Z/" << f;
    first = false;
  }
  return out.str();
}

FinAbGroup FinAbGroup::trivial() { return {}; }

FinAbGroup FinAbGroup::free(long long rank) {
  if (rank < 0) fail(ErrorKind::InvalidArgument, "negative free rank");
  return {rank, {}};
}

FinAbGroup FinAbGroup::cyclic(const Int& order) {
  if (order < 1) fail(ErrorKind::InvalidArgument, "cyclic order must be >= 1");
  if (order == 1) return {};
  return {0, {order}};
}

FinAbGroup FinAbGroup::elementary(const Int& p, long long copies) {
  if (p < 2) fail(ErrorKind::InvalidArgument, "elementary factor must be >= 2");
  if (copies < 0) fail(ErrorKind::InvalidArgument, "negative copy count");
  FinAbGroup g;
  g.invariant_factors.assign(static_cast<std::size_t>(copies), p);
  return g;
}

FinAbGroup direct_sum(const std::vector<FinAbGroup>& parts) {
  FinAbGroup result;
  std::vector<Int> factors;
  for (const FinAbGroup& g : parts) {
    result.free_rank += g.free_rank;
    factors.insert(factors.end(), g.invariant_factors.begin(),
                   g.invariant_factors.end());
  }
  if (factors.empty()) return result;
  // Renormalize the combined torsion to a single divisibility chain.
  IntMatrix diag(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) diag.at(i, i) = factors[i];
  const IntMatrix d = smith_normal_form(diag).d;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (d.at(i, i) > 1) result.invariant_factors.push_back(d.at(i, i));
  return result;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  return direct_sum(std::vector<FinAbGroup>{a, b});
}

}  // namespace glr
