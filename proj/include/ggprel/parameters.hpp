#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace ggprel {

class Partition;

using Rational = boost::rational<std::int64_t>;

enum class SymbolKind { Discrete, Complementary };

/*
 * A symbol of Par = Par_disc ⊔ Par_cmpl.
 *
 * Discrete symbols L(δ) carry an opaque label for the discrete series δ and
 * the rank k of the group G_k it lives on.  Complementary symbols L(δ, s)
 * additionally carry an exact rational 0 < s < 1/2.
 *
 * Ordering is total: Discrete before Complementary, then label, then k,
 * then s.
 */
class EtaSymbol {
public:
    static EtaSymbol discrete(std::string label, int base_dim);
    static EtaSymbol complementary(std::string label, int base_dim, Rational s);

    SymbolKind kind() const { return kind_; }
    bool is_discrete() const { return kind_ == SymbolKind::Discrete; }
    bool is_complementary() const { return kind_ == SymbolKind::Complementary; }
    const std::string &label() const { return label_; }
    int base_dim() const { return base_dim_; }
    /// Only meaningful for complementary symbols.
    const std::optional<Rational> &s() const { return s_; }

    /// Rows contributed to the SL2-type per copy of S_d: k, or 2k for complementary.
    int width() const { return is_discrete() ? base_dim_ : 2 * base_dim_; }

    friend bool operator==(const EtaSymbol &, const EtaSymbol &) = default;
    friend std::strong_ordering operator<=>(const EtaSymbol &a, const EtaSymbol &b);

private:
    EtaSymbol(SymbolKind kind, std::string label, int base_dim, std::optional<Rational> s)
        : kind_(kind), label_(std::move(label)), base_dim_(base_dim), s_(s) {}

    SymbolKind kind_;
    std::string label_;
    int base_dim_;
    std::optional<Rational> s_;
};

EtaSymbol make_discrete(std::string label, int base_dim);
EtaSymbol make_complementary(std::string label, int base_dim, Rational s);

/// The involution L(δ, s) -> L(δ, 1/2 - s).  Throws std::invalid_argument on discrete input.
EtaSymbol dual(const EtaSymbol &eta);

/// mult copies of eta ⊠ S_d.
struct Block {
    EtaSymbol eta;
    int d = 1;
    int mult = 1;

    friend bool operator==(const Block &, const Block &) = default;
    friend std::strong_ordering operator<=>(const Block &a, const Block &b);
};

/*
 * An element of the monoid Ψ_unit(GL): a finite formal sum of eta ⊠ S_d.
 *
 * Blocks are kept sorted by (eta, d) with one block per pair; multiplicities
 * of repeated pairs are added.  Blocks with d == 0 or mult == 0 are dropped
 * on construction, so S_0 terms read as zero.
 */
class UnitaryParameter {
public:
    UnitaryParameter() = default;
    explicit UnitaryParameter(std::vector<Block> blocks);

    static UnitaryParameter zero() { return {}; }
    static UnitaryParameter single(const EtaSymbol &eta, int d, int mult = 1);

    const std::vector<Block> &blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    /// Number of block instances, i.e. the sum of multiplicities.
    int instance_count() const;
    /// Largest d occurring, 0 for the zero parameter.
    int max_d() const;
    /// Multiplicity of eta ⊠ S_d (0 when absent).
    int count(const EtaSymbol &eta, int d) const;

    friend bool operator==(const UnitaryParameter &, const UnitaryParameter &) = default;
    friend std::strong_ordering operator<=>(const UnitaryParameter &a, const UnitaryParameter &b);

private:
    std::vector<Block> blocks_;
};

UnitaryParameter add(const UnitaryParameter &p, const UnitaryParameter &q);
inline UnitaryParameter operator+(const UnitaryParameter &p, const UnitaryParameter &q) { return add(p, q); }

/// p - q, or nullopt when q is not a sub-multiset of p.
std::optional<UnitaryParameter> subtract(const UnitaryParameter &p, const UnitaryParameter &q);

long dimension(const UnitaryParameter &p);
long nt_measure(const UnitaryParameter &p);
Partition sl2_type(const UnitaryParameter &p);
bool is_generic(const UnitaryParameter &p);
bool is_arthur_type(const UnitaryParameter &p);

/*
 * Optional realizability check on base dimensions: over R discrete series
 * exist only on G_1 and G_2, over C only on G_1.  FieldProfile::None
 * accepts everything.
 */
enum class FieldProfile { None, Real, Complex };

bool is_realizable(const UnitaryParameter &p, FieldProfile field);
void validate_field(const UnitaryParameter &p, FieldProfile field);

} // namespace ggprel
