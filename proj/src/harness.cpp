#include "ggprel/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "ggprel/io.hpp"
#include "ggprel/partitions.hpp"

namespace ggprel {

namespace {

struct Class {
    EtaSymbol eta;
    int d;
    long dim; // dimension of one copy
};

std::vector<Class> enumeration_classes(const CorpusSpec &spec)
{
    std::vector<Class> out;
    for (const EtaSymbol &eta : enumeration_symbols(spec))
        for (int d = 1; d <= spec.max_d; ++d)
            out.push_back({eta, d, static_cast<long>(d) * eta.width()});
    return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

unsigned worker_count(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("GGPREL_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct PairCheck {
    std::uint64_t pairs = 0;
    std::uint64_t relevant = 0;
    std::uint64_t generic_pairs = 0;
    std::uint64_t witnesses = 0;
    std::uint64_t violations = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first;
    std::string first_property;

    void flag(std::size_t i, std::size_t j, const char *property)
    {
        ++violations;
        if (!first || std::make_pair(i, j) < *first) {
            first = {i, j};
            first_property = property;
        }
    }
};

/// Returns the name of the first failed property, or nullptr.
const char *check_pair(const UnitaryParameter &p, const UnitaryParameter &q, PairCheck &acc)
{
    const bool crit = is_relevant_criterion(p, q);
    const bool brute = is_relevant_bruteforce(p, q);
    const bool generic = is_generic(p) && is_generic(q);
    acc.relevant += crit ? 1 : 0;
    acc.generic_pairs += generic ? 1 : 0;

    if (crit != brute)
        return "criterion/brute-force equivalence";
    if (crit != is_relevant_criterion(q, p))
        return "symmetry";
    if (generic && !crit)
        return "generic pairs are relevant";

    auto w = find_witness(p, q);
    if (w.has_value() != brute)
        return "find_witness completeness";
    if (w) {
        ++acc.witnesses;
        if (!verify_witness(p, q, *w))
            return "find_witness soundness";
        if (!proof_identity_check(p, q, *w))
            return "proof identities";
    }
    if (crit && !is_close(sl2_type(p), sl2_type(q)))
        return "closeness of SL2-types";

    if (is_arthur_type(p) && is_arthur_type(q)) {
        bool k_empty = true;
        for_each_witness(p, q, [&](const Witness &x) {
            k_empty = std::none_of(x.assignment.begin(), x.assignment.end(), [](Role r) { return r == Role::K; });
            return k_empty;
        });
        if (!k_empty)
            return "empty K on Arthur-type pairs";
    }

    const int past = lambda_range(p, q) + 1;
    for (const EtaSymbol &eta : symbol_closure(p, q))
        if (lambda_sum(eta, past, p, q) != 0 || lambda_sum(eta, past, q, p) != 0)
            return "lambda vanishing";
    return nullptr;
}

} // namespace

CorpusSpec desk_corpus_spec()
{
    CorpusSpec spec;
    spec.label_pool = {make_discrete("a", 1), make_discrete("b", 2), make_complementary("a", 1, Rational(1, 4)),
                       make_complementary("a", 1, Rational(1, 3))};
    spec.max_blocks = 8;
    spec.max_d = 4;
    spec.max_mult = 2;
    spec.max_dim = 8;
    spec.seed = 20240101;
    return spec;
}

void validate(const CorpusSpec &spec)
{
    if (spec.max_blocks < 1 || spec.max_d < 1 || spec.max_mult < 1 || spec.max_dim < 1)
        throw std::invalid_argument("corpus bounds must all be >= 1");
}

std::vector<EtaSymbol> enumeration_symbols(const CorpusSpec &spec)
{
    std::vector<EtaSymbol> out;
    for (const EtaSymbol &eta : spec.label_pool) {
        out.push_back(eta);
        if (eta.is_complementary())
            out.push_back(dual(eta));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t count_parameters(const CorpusSpec &spec)
{
    validate(spec);
    // (dimension, instances) -> number of partial parameters
    std::map<std::pair<long, int>, std::uint64_t> states{{{0, 0}, 1}};
    for (const Class &c : enumeration_classes(spec)) {
        std::map<std::pair<long, int>, std::uint64_t> next;
        for (const auto &[state, n] : states) {
            for (int m = 0; m <= spec.max_mult; ++m) {
                long dim = state.first + m * c.dim;
                int blocks = state.second + m;
                if (dim > spec.max_dim || blocks > spec.max_blocks)
                    break;
                auto &slot = next[{dim, blocks}];
                slot = saturating_add(slot, n);
            }
        }
        states = std::move(next);
    }
    std::uint64_t total = 0;
    for (const auto &[state, n] : states)
        total = saturating_add(total, n);
    return total;
}

std::vector<UnitaryParameter> enumerate_parameters(const CorpusSpec &spec)
{
    const std::uint64_t expected = count_parameters(spec);
    if (expected > spec.max_count)
        throw ResourceLimitError("corpus would contain " + std::to_string(expected) + " parameters, cap is " +
                                 std::to_string(spec.max_count));

    const auto classes = enumeration_classes(spec);
    std::vector<UnitaryParameter> out;
    out.reserve(static_cast<std::size_t>(expected));
    std::vector<Block> current;
    std::function<void(std::size_t, long, int)> descend = [&](std::size_t c, long dim, int blocks) {
        if (c == classes.size()) {
            out.emplace_back(current);
            return;
        }
        descend(c + 1, dim, blocks);
        for (int m = 1; m <= spec.max_mult; ++m) {
            long nd = dim + m * classes[c].dim;
            int nb = blocks + m;
            if (nd > spec.max_dim || nb > spec.max_blocks)
                break;
            current.push_back({classes[c].eta, classes[c].d, m});
            descend(c + 1, nd, nb);
            current.pop_back();
        }
    };
    descend(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

UnitaryParameter random_parameter(const CorpusSpec &spec, std::mt19937_64 &rng)
{
    const auto classes = enumeration_classes(spec);
    if (classes.empty())
        return {};
    std::uniform_int_distribution<int> how_many(0, spec.max_blocks);
    std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
    std::vector<int> mult(classes.size(), 0);
    long dim = 0;
    const int target = how_many(rng);
    for (int t = 0; t < target; ++t) {
        std::size_t c = pick(rng);
        if (mult[c] < spec.max_mult && dim + classes[c].dim <= spec.max_dim) {
            ++mult[c];
            dim += classes[c].dim;
        }
    }
    std::vector<Block> blocks;
    for (std::size_t c = 0; c < classes.size(); ++c)
        blocks.push_back({classes[c].eta, classes[c].d, mult[c]});
    return UnitaryParameter(std::move(blocks));
}

nlohmann::json encode_corpus_spec(const CorpusSpec &spec)
{
    nlohmann::json pool = nlohmann::json::array();
    for (const EtaSymbol &eta : spec.label_pool)
        pool.push_back(print_symbol(eta));
    return {{"label_pool", pool},         {"max_blocks", spec.max_blocks}, {"max_d", spec.max_d},
            {"max_mult", spec.max_mult},  {"max_dim", spec.max_dim},       {"corank_one", spec.corank_one},
            {"seed", spec.seed},          {"max_count", spec.max_count}};
}

CorpusSpec decode_corpus_spec(const nlohmann::json &doc)
{
    if (!doc.is_object())
        throw SchemaError("", "expected an object");
    CorpusSpec spec;
    auto it = doc.find("label_pool");
    if (it == doc.end() || !it->is_array())
        throw SchemaError("/label_pool", "expected an array of symbols");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string path = "/label_pool/" + std::to_string(i);
        const auto &v = (*it)[i];
        if (!v.is_string())
            throw SchemaError(path, "expected a string");
        try {
            spec.label_pool.push_back(parse_symbol(v.get<std::string>()));
        } catch (const ParseError &e) {
            throw SchemaError(path, e.what());
        }
    }
    auto integer = [&](const char *key, bool required, auto &slot) {
        auto f = doc.find(key);
        if (f == doc.end()) {
            if (required)
                throw SchemaError(std::string("/") + key, "missing field");
            return;
        }
        if (!f->is_number_integer() || *f < 0)
            throw SchemaError(std::string("/") + key, "expected a non-negative integer");
        slot = f->get<std::remove_reference_t<decltype(slot)>>();
    };
    integer("max_d", true, spec.max_d);
    integer("max_mult", true, spec.max_mult);
    integer("max_dim", true, spec.max_dim);
    integer("max_blocks", false, spec.max_blocks);
    integer("seed", false, spec.seed);
    integer("max_count", false, spec.max_count);
    if (auto f = doc.find("corank_one"); f != doc.end()) {
        if (!f->is_boolean())
            throw SchemaError("/corank_one", "expected a boolean");
        spec.corank_one = f->get<bool>();
    }
    try {
        validate(spec);
    } catch (const std::invalid_argument &e) {
        throw SchemaError("", e.what());
    }
    return spec;
}

SelftestSummary selftest_equivalence(const CorpusSpec &spec, unsigned workers)
{
    const auto start = std::chrono::steady_clock::now();
    const auto corpus = enumerate_parameters(spec);
    const unsigned n_workers = std::min<unsigned>(worker_count(workers), std::max<std::size_t>(1, corpus.size()));

    std::vector<PairCheck> partial(n_workers);
    auto run = [&](unsigned w) {
        PairCheck &acc = partial[w];
        for (std::size_t i = w; i < corpus.size(); i += n_workers) {
            for (std::size_t j = 0; j < corpus.size(); ++j) {
                const auto &p = corpus[i];
                const auto &q = corpus[j];
                if (spec.corank_one && dimension(p) != dimension(q) + 1)
                    continue;
                ++acc.pairs;
                if (const char *failed = check_pair(p, q, acc))
                    acc.flag(i, j, failed);
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < n_workers; ++w)
        threads.emplace_back(run, w);
    run(0);
    for (auto &t : threads)
        t.join();

    SelftestSummary s;
    s.parameters = corpus.size();
    PairCheck total;
    for (const PairCheck &acc : partial) {
        total.pairs += acc.pairs;
        total.relevant += acc.relevant;
        total.generic_pairs += acc.generic_pairs;
        total.witnesses += acc.witnesses;
        total.violations += acc.violations;
        if (acc.first && (!total.first || *acc.first < *total.first)) {
            total.first = acc.first;
            total.first_property = acc.first_property;
        }
    }
    s.pairs = total.pairs;
    s.relevant = total.relevant;
    s.generic_pairs = total.generic_pairs;
    s.witnesses_checked = total.witnesses;
    s.violations = total.violations;
    if (total.first)
        s.first_violation = Counterexample{corpus[total.first->first], corpus[total.first->second], total.first_property};

    // Seeded spot checks: Λ(eta, a; p, q) = 0 for a past every d.
    std::mt19937_64 rng(spec.seed);
    const auto symbols = enumeration_symbols(spec);
    for (int t = 0; t < 1000 && !symbols.empty(); ++t) {
        UnitaryParameter p = random_parameter(spec, rng);
        UnitaryParameter q = random_parameter(spec, rng);
        const EtaSymbol &eta = symbols[std::uniform_int_distribution<std::size_t>(0, symbols.size() - 1)(rng)];
        int a = lambda_range(p, q) + 1 + std::uniform_int_distribution<int>(0, 3)(rng);
        ++s.random_lambda_checks;
        if (lambda_sum(eta, a, p, q) != 0) {
            ++s.violations;
            if (!s.first_violation)
                s.first_violation = Counterexample{p, q, "lambda vanishing (random)"};
        }
    }

    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

std::string format_summary(const SelftestSummary &summary)
{
    std::ostringstream out;
    out << "parameters: " << summary.parameters << "\n"
        << "pairs: " << summary.pairs << "\n"
        << "relevant: " << summary.relevant << "\n"
        << "generic pairs: " << summary.generic_pairs << "\n"
        << "witnesses checked: " << summary.witnesses_checked << "\n"
        << "random lambda checks: " << summary.random_lambda_checks << "\n"
        << "violations: " << summary.violations << "\n";
    if (summary.first_violation) {
        const auto &c = *summary.first_violation;
        out << "first violation: " << c.property << "\n"
            << "  pi:    " << print_parameter(c.pi) << "\n"
            << "  sigma: " << print_parameter(c.sigma) << "\n";
    }
    return out.str();
}

} // namespace ggprel
