#ifndef SEMALG_TESTS_ORACLES_HPP
#define SEMALG_TESTS_ORACLES_HPP

// Independent reference implementations used only by tests. Everything in
// here deliberately avoids the code paths it is checking.

#include <optional>

#include "semalg/monomial_ideal.hpp"
#include "semalg/semigroup.hpp"

namespace semalg::oracles {

// Betti numbers of a monomial ideal from the multigraded strands of the
// Taylor complex reduced modulo the variables.
BettiTable taylor_betti(const MonomialIdeal& ideal, const Field& f);

// exhaustive search for x * m = v with every |x_i| <= box
std::optional<IntVec> exhaustive_solve(const IntMatrix& m, const IntVec& v,
                                       long box);

// rank by fraction-free elimination over the rationals
std::size_t rational_rank(const IntMatrix& m);

// nonnegative rational feasibility by recursive descent on generators
// (denominator-bounded exhaustive search; only for tiny instances)
bool cone_member_bruteforce(const std::vector<IntVec>& gens, const IntVec& v,
                            long denominator_bound);

}  // namespace semalg::oracles

#endif
