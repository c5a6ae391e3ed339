#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ggprel/parameters.hpp"

namespace ggprel {

/// Raised when an exhaustive search would exceed its configured size.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * Roles in a relevance witness.  An instance L ⊠ S_d of Ψ_π assigned
 *   I  contributes L ⊠ S_{d+1} to Ψ_σ,
 *   J  contributes L ⊠ S_{d-1} (nothing when d == 1),
 *   K  contributes D(L) ⊠ S_d, and requires L complementary.
 */
enum class Role { I, J, K };

/// One copy of eta ⊠ S_d.  Instances of a parameter are its blocks expanded by multiplicity.
struct Instance {
    EtaSymbol eta;
    int d;
};

/// Instances in canonical block order; index i of a Witness assignment refers to element i.
std::vector<Instance> instances_of(const UnitaryParameter &p);

struct Witness {
    std::vector<Role> assignment;
    UnitaryParameter generic_remainder;

    friend bool operator==(const Witness &, const Witness &) = default;
};

/// Sub-multisets of Ψ_π grouped by role, the form witnesses take in reports.
struct RoleSplit {
    UnitaryParameter I, J, K;
};

RoleSplit split_by_role(const UnitaryParameter &pi, const Witness &w);

/*
 * Rebuild the canonical assignment for a split.  Within each (eta, d)
 * class instances are assigned I, then J, then K.  Throws
 * std::invalid_argument when I + J + K differs from pi.
 */
Witness witness_from_split(const UnitaryParameter &pi, const RoleSplit &split, UnitaryParameter remainder);

/// Reorder roles inside each (eta, d) class so that I < J < K.
Witness canonicalize(const UnitaryParameter &pi, const Witness &w);

/// Σ_I L⊠S_{d+1} + Σ_J L⊠S_{d-1} + Σ_K D(L)⊠S_d, without the generic remainder.
UnitaryParameter witness_image(const UnitaryParameter &pi, const Witness &w);

// -- alternating sums ------------------------------------------------------

/// m(eta, a; p): number of instances of p equal to eta ⊠ S_a.
int multiplicity(const EtaSymbol &eta, int a, const UnitaryParameter &p);

/// Which parameter supplies the positive terms of Λ.
enum class Order { PiSigma, SigmaPi };

struct LambdaQuery {
    EtaSymbol eta;
    int a;
    Order order;
};

struct LambdaEntry {
    LambdaQuery query;
    long value;
};

/*
 * Λ(eta, a; p, q).
 *
 * Discrete eta:      Σ_j m(eta, a+2j; p) - m(eta, a+2j+1; q).
 * Complementary eta: Σ_j m(D^j eta, a+j; p) - Σ_j m(D^j eta, a+1+j; q).
 *
 * Terms with index above max d of p and q vanish, so the sums are finite.
 * Throws std::invalid_argument for a < 1.
 */
long lambda_sum(const EtaSymbol &eta, int a, const UnitaryParameter &p, const UnitaryParameter &q);

long evaluate(const LambdaQuery &query, const UnitaryParameter &pi, const UnitaryParameter &sigma);

/// Symbols of p and q together with their duals, sorted and deduplicated.
std::vector<EtaSymbol> symbol_closure(const UnitaryParameter &p, const UnitaryParameter &q);

/// Largest a worth querying: max d over p and q.  Λ vanishes for larger a.
int lambda_range(const UnitaryParameter &p, const UnitaryParameter &q);

/// Every non-zero Λ in both orders over the closure and 1 <= a <= lambda_range.
std::vector<LambdaEntry> lambda_table(const UnitaryParameter &pi, const UnitaryParameter &sigma);

// -- decisions -------------------------------------------------------------

bool is_relevant_criterion(const UnitaryParameter &pi, const UnitaryParameter &sigma);

struct SearchLimits {
    int max_instances = 20;
};

/*
 * Enumerate the witnesses of the definition directly.  Assignments are
 * enumerated per (eta, d) class as splits of the multiplicity into
 * (i, j, k), so each distinct witness is produced once in canonical form.
 * The callback returns false to stop.  Returns the number of witnesses
 * visited.  Throws ResourceLimitError when pi has more than
 * limits.max_instances instances.
 */
std::size_t for_each_witness(const UnitaryParameter &pi, const UnitaryParameter &sigma,
                             const std::function<bool(const Witness &)> &visit, SearchLimits limits = {});

std::optional<Witness> bruteforce_witness(const UnitaryParameter &pi, const UnitaryParameter &sigma,
                                          SearchLimits limits = {});

bool is_relevant_bruteforce(const UnitaryParameter &pi, const UnitaryParameter &sigma, SearchLimits limits = {});

/*
 * Constructive witness following the inductive proof of the alternating-sum
 * criterion.  Instances are processed by decreasing d.  With d1 the current
 * largest d on the π side:
 *   - if Ψ_σ holds some eta' ⊠ S_{d'} with d' > d1, the first such block
 *     must come from an instance eta' ⊠ S_{d'-1} assigned I;
 *   - otherwise the first instance L ⊠ S_{d1} is peeled off as K when L is
 *     complementary and D(L) ⊠ S_{d1} ⊂ Ψ_σ, else as J;
 *   - once d1 == 1 the rest go to J and the residual of Ψ_σ is Ψ_0.
 * Returns nullopt when the pair is not relevant.
 */
std::optional<Witness> find_witness(const UnitaryParameter &pi, const UnitaryParameter &sigma,
                                    SearchLimits limits = {});

/// Throws std::invalid_argument when the assignment does not cover pi's instances.
bool verify_witness(const UnitaryParameter &pi, const UnitaryParameter &sigma, const Witness &w);

/*
 * Check Λ(eta, a; π, σ) = m_J(eta, a; π) for discrete eta and
 * Λ(eta, a; π, σ) = m_J(eta, a; π) + m_K(eta, a; π) + m_J(D eta, a+1; π)
 * for complementary eta, over the symbol closure and all a up to one past
 * the largest d.  Throws std::invalid_argument if w does not verify.
 */
bool proof_identity_check(const UnitaryParameter &pi, const UnitaryParameter &sigma, const Witness &w);

} // namespace ggprel
