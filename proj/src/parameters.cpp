#include "ggprel/parameters.hpp"

#include <algorithm>
#include <stdexcept>

#include "ggprel/partitions.hpp"

namespace ggprel {

namespace {

const Rational kHalf(1, 2);

std::strong_ordering compare_rational(const Rational &a, const Rational &b)
{
    if (a < b)
        return std::strong_ordering::less;
    if (b < a)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace

EtaSymbol EtaSymbol::discrete(std::string label, int base_dim)
{
    if (base_dim < 1)
        throw std::invalid_argument("base dimension must be >= 1, got " + std::to_string(base_dim));
    if (label.empty())
        throw std::invalid_argument("symbol label must be non-empty");
    return EtaSymbol(SymbolKind::Discrete, std::move(label), base_dim, std::nullopt);
}

EtaSymbol EtaSymbol::complementary(std::string label, int base_dim, Rational s)
{
    if (base_dim < 1)
        throw std::invalid_argument("base dimension must be >= 1, got " + std::to_string(base_dim));
    if (label.empty())
        throw std::invalid_argument("symbol label must be non-empty");
    // boost::rational keeps itself in lowest terms with a positive denominator.
    if (s <= 0 || s >= kHalf)
        throw std::invalid_argument("complementary parameter s must satisfy 0 < s < 1/2");
    return EtaSymbol(SymbolKind::Complementary, std::move(label), base_dim, s);
}

std::strong_ordering operator<=>(const EtaSymbol &a, const EtaSymbol &b)
{
    if (auto c = a.kind_ <=> b.kind_; c != 0)
        return c;
    if (auto c = a.label_ <=> b.label_; c != 0)
        return c;
    if (auto c = a.base_dim_ <=> b.base_dim_; c != 0)
        return c;
    if (a.s_ && b.s_)
        return compare_rational(*a.s_, *b.s_);
    return a.s_.has_value() <=> b.s_.has_value();
}

EtaSymbol make_discrete(std::string label, int base_dim)
{
    return EtaSymbol::discrete(std::move(label), base_dim);
}

EtaSymbol make_complementary(std::string label, int base_dim, Rational s)
{
    return EtaSymbol::complementary(std::move(label), base_dim, s);
}

EtaSymbol dual(const EtaSymbol &eta)
{
    if (!eta.is_complementary())
        throw std::invalid_argument("D is only defined on complementary symbols");
    return EtaSymbol::complementary(eta.label(), eta.base_dim(), kHalf - *eta.s());
}

std::strong_ordering operator<=>(const Block &a, const Block &b)
{
    if (auto c = a.eta <=> b.eta; c != 0)
        return c;
    if (auto c = a.d <=> b.d; c != 0)
        return c;
    return a.mult <=> b.mult;
}

UnitaryParameter::UnitaryParameter(std::vector<Block> blocks)
{
    for (const Block &b : blocks) {
        if (b.d < 0 || b.mult < 0)
            throw std::invalid_argument("block d and multiplicity must be non-negative");
    }
    std::erase_if(blocks, [](const Block &b) { return b.d == 0 || b.mult == 0; });
    std::sort(blocks.begin(), blocks.end(), [](const Block &x, const Block &y) {
        if (auto c = x.eta <=> y.eta; c != 0)
            return c < 0;
        return x.d < y.d;
    });
    for (Block &b : blocks) {
        if (!blocks_.empty() && blocks_.back().eta == b.eta && blocks_.back().d == b.d)
            blocks_.back().mult += b.mult;
        else
            blocks_.push_back(std::move(b));
    }
}

UnitaryParameter UnitaryParameter::single(const EtaSymbol &eta, int d, int mult)
{
    return UnitaryParameter({Block{eta, d, mult}});
}

int UnitaryParameter::instance_count() const
{
    int n = 0;
    for (const Block &b : blocks_)
        n += b.mult;
    return n;
}

int UnitaryParameter::max_d() const
{
    int m = 0;
    for (const Block &b : blocks_)
        m = std::max(m, b.d);
    return m;
}

int UnitaryParameter::count(const EtaSymbol &eta, int d) const
{
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), std::pair<const EtaSymbol &, int>(eta, d),
                               [](const Block &b, const std::pair<const EtaSymbol &, int> &key) {
                                   if (auto c = b.eta <=> key.first; c != 0)
                                       return c < 0;
                                   return b.d < key.second;
                               });
    if (it != blocks_.end() && it->eta == eta && it->d == d)
        return it->mult;
    return 0;
}

std::strong_ordering operator<=>(const UnitaryParameter &a, const UnitaryParameter &b)
{
    return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                  b.blocks_.end());
}

UnitaryParameter add(const UnitaryParameter &p, const UnitaryParameter &q)
{
    std::vector<Block> all(p.blocks());
    all.insert(all.end(), q.blocks().begin(), q.blocks().end());
    return UnitaryParameter(std::move(all));
}

std::optional<UnitaryParameter> subtract(const UnitaryParameter &p, const UnitaryParameter &q)
{
    std::vector<Block> out(p.blocks());
    for (const Block &b : q.blocks()) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Block &x) { return x.eta == b.eta && x.d == b.d; });
        if (it == out.end() || it->mult < b.mult)
            return std::nullopt;
        it->mult -= b.mult;
    }
    return UnitaryParameter(std::move(out));
}

long dimension(const UnitaryParameter &p)
{
    long n = 0;
    for (const Block &b : p.blocks())
        n += static_cast<long>(b.mult) * b.d * b.eta.width();
    return n;
}

long nt_measure(const UnitaryParameter &p)
{
    long n = 0;
    for (const Block &b : p.blocks())
        n += static_cast<long>(b.mult) * (b.d - 1);
    return n;
}

Partition sl2_type(const UnitaryParameter &p)
{
    std::vector<int> parts;
    for (const Block &b : p.blocks())
        parts.insert(parts.end(), static_cast<std::size_t>(b.mult) * b.eta.width(), b.d);
    return Partition::from_unsorted(std::move(parts));
}

bool is_generic(const UnitaryParameter &p)
{
    return std::all_of(p.blocks().begin(), p.blocks().end(), [](const Block &b) { return b.d == 1; });
}

bool is_arthur_type(const UnitaryParameter &p)
{
    return std::all_of(p.blocks().begin(), p.blocks().end(), [](const Block &b) { return b.eta.is_discrete(); });
}

bool is_realizable(const UnitaryParameter &p, FieldProfile field)
{
    int limit = 0;
    switch (field) {
    case FieldProfile::None:
        return true;
    case FieldProfile::Real:
        limit = 2;
        break;
    case FieldProfile::Complex:
        limit = 1;
        break;
    }
    return std::all_of(p.blocks().begin(), p.blocks().end(),
                       [limit](const Block &b) { return b.eta.base_dim() <= limit; });
}

void validate_field(const UnitaryParameter &p, FieldProfile field)
{
    if (!is_realizable(p, field))
        throw std::invalid_argument(field == FieldProfile::Real
                                        ? "discrete series over R exist only for k <= 2"
                                        : "discrete series over C exist only for k = 1");
}

} // namespace ggprel
