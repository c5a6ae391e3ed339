#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "ggprel/parameters.hpp"
#include "ggprel/relevance.hpp"

namespace ggprel {

/*
 * Bounds for a corpus of parameters.  max_blocks caps the number of block
 * instances (sum of multiplicities), max_mult the multiplicity of any one
 * (eta, d).  max_count rejects corpora too large to sweep.
 */
struct CorpusSpec {
    std::vector<EtaSymbol> label_pool;
    int max_blocks = 20;
    int max_d = 1;
    int max_mult = 1;
    long max_dim = 1;
    bool corank_one = false;
    std::uint64_t seed = 0;
    std::uint64_t max_count = 1'000'000;
};

/// Pool of 2 discrete (k = 1, 2) and 2 complementary (s = 1/4, 1/3) symbols, max_d 4, max_mult 2, max_dim 8.
CorpusSpec desk_corpus_spec();

/// Throws std::invalid_argument unless every bound is >= 1.
void validate(const CorpusSpec &spec);

/// The pool closed under D, in canonical order.
std::vector<EtaSymbol> enumeration_symbols(const CorpusSpec &spec);

/// Exact number of parameters enumerate_parameters yields (saturates at UINT64_MAX).
std::uint64_t count_parameters(const CorpusSpec &spec);

/// All parameters within bounds, each once, ascending.  Throws ResourceLimitError above spec.max_count.
std::vector<UnitaryParameter> enumerate_parameters(const CorpusSpec &spec);

/// A random parameter within the bounds, drawn from the D-closed pool.
UnitaryParameter random_parameter(const CorpusSpec &spec, std::mt19937_64 &rng);

nlohmann::json encode_corpus_spec(const CorpusSpec &spec);
/// Throws SchemaError.
CorpusSpec decode_corpus_spec(const nlohmann::json &doc);

struct Counterexample {
    UnitaryParameter pi;
    UnitaryParameter sigma;
    std::string property;
};

struct SelftestSummary {
    std::uint64_t parameters = 0;
    std::uint64_t pairs = 0;
    std::uint64_t relevant = 0;
    std::uint64_t generic_pairs = 0;
    std::uint64_t witnesses_checked = 0;
    std::uint64_t random_lambda_checks = 0;
    std::uint64_t violations = 0;
    std::optional<Counterexample> first_violation; // smallest (pi, sigma) index pair
    double seconds = 0.0;

    bool ok() const { return violations == 0; }
};

/*
 * Sweep every ordered pair of the corpus (only dim(pi) = dim(sigma) + 1
 * when spec.corank_one) and check: criterion = brute force, symmetry,
 * generic pairs relevant, find_witness agreeing with brute force and
 * passing verify_witness and proof_identity_check, closeness of SL2-types,
 * empty K on Arthur-type pairs, and vanishing of Λ past the largest d.
 * A further seeded batch of random pairs checks Λ vanishing.
 *
 * workers == 0 reads GGPREL_WORKERS, falling back to hardware concurrency.
 */
SelftestSummary selftest_equivalence(const CorpusSpec &spec, unsigned workers = 0);

/// Deterministic text summary (no timing).
std::string format_summary(const SelftestSummary &summary);

} // namespace ggprel
