#include "ggprel/relevance.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace ggprel {

namespace {

constexpr std::size_t kNoTarget = static_cast<std::size_t>(-1);

void check_instance_cap(const UnitaryParameter &pi, SearchLimits limits)
{
    int n = pi.instance_count();
    if (n > limits.max_instances)
        throw ResourceLimitError("parameter has " + std::to_string(n) + " block instances, search limit is " +
                                 std::to_string(limits.max_instances));
}

std::size_t index_of(const UnitaryParameter &p, const EtaSymbol &eta, int d)
{
    const auto &blocks = p.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].d == d && blocks[i].eta == eta)
            return i;
    return kNoTarget;
}

void check_assignment_domain(const UnitaryParameter &pi, const Witness &w)
{
    auto n = static_cast<std::size_t>(pi.instance_count());
    if (w.assignment.size() != n)
        throw std::invalid_argument("witness assigns " + std::to_string(w.assignment.size()) +
                                    " instances but the parameter has " + std::to_string(n));
}

/// Role counts per block of pi, in block order.
std::vector<std::array<int, 3>> role_counts(const UnitaryParameter &pi, const Witness &w)
{
    std::vector<std::array<int, 3>> counts(pi.blocks().size(), {0, 0, 0});
    std::size_t pos = 0;
    for (std::size_t c = 0; c < pi.blocks().size(); ++c)
        for (int t = 0; t < pi.blocks()[c].mult; ++t, ++pos)
            ++counts[c][static_cast<std::size_t>(w.assignment[pos])];
    return counts;
}

std::vector<Role> assignment_from_counts(const std::vector<std::array<int, 3>> &counts)
{
    std::vector<Role> out;
    for (const auto &c : counts) {
        out.insert(out.end(), static_cast<std::size_t>(c[0]), Role::I);
        out.insert(out.end(), static_cast<std::size_t>(c[1]), Role::J);
        out.insert(out.end(), static_cast<std::size_t>(c[2]), Role::K);
    }
    return out;
}

int role_multiplicity(const std::vector<Instance> &inst, const Witness &w, Role role, const EtaSymbol &eta, int a)
{
    int n = 0;
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (w.assignment[i] == role && inst[i].d == a && inst[i].eta == eta)
            ++n;
    return n;
}

} // namespace

std::vector<Instance> instances_of(const UnitaryParameter &p)
{
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(p.instance_count()));
    for (const Block &b : p.blocks())
        for (int t = 0; t < b.mult; ++t)
            out.push_back({b.eta, b.d});
    return out;
}

RoleSplit split_by_role(const UnitaryParameter &pi, const Witness &w)
{
    check_assignment_domain(pi, w);
    std::array<std::vector<Block>, 3> parts;
    auto counts = role_counts(pi, w);
    for (std::size_t c = 0; c < counts.size(); ++c)
        for (std::size_t r = 0; r < 3; ++r)
            parts[r].push_back(Block{pi.blocks()[c].eta, pi.blocks()[c].d, counts[c][r]});
    return {UnitaryParameter(std::move(parts[0])), UnitaryParameter(std::move(parts[1])),
            UnitaryParameter(std::move(parts[2]))};
}

Witness witness_from_split(const UnitaryParameter &pi, const RoleSplit &split, UnitaryParameter remainder)
{
    if (split.I + split.J + split.K != pi)
        throw std::invalid_argument("I, J and K do not add up to the parameter");
    std::vector<std::array<int, 3>> counts;
    for (const Block &b : pi.blocks())
        counts.push_back({split.I.count(b.eta, b.d), split.J.count(b.eta, b.d), split.K.count(b.eta, b.d)});
    return {assignment_from_counts(counts), std::move(remainder)};
}

Witness canonicalize(const UnitaryParameter &pi, const Witness &w)
{
    check_assignment_domain(pi, w);
    return {assignment_from_counts(role_counts(pi, w)), w.generic_remainder};
}

UnitaryParameter witness_image(const UnitaryParameter &pi, const Witness &w)
{
    check_assignment_domain(pi, w);
    std::vector<Block> out;
    auto inst = instances_of(pi);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const Instance &x = inst[i];
        switch (w.assignment[i]) {
        case Role::I:
            out.push_back({x.eta, x.d + 1, 1});
            break;
        case Role::J:
            out.push_back({x.eta, x.d - 1, 1}); // S_0 is dropped
            break;
        case Role::K:
            out.push_back({dual(x.eta), x.d, 1});
            break;
        }
    }
    return UnitaryParameter(std::move(out));
}

int multiplicity(const EtaSymbol &eta, int a, const UnitaryParameter &p)
{
    if (a < 1)
        throw std::invalid_argument("multiplicity index a must be >= 1");
    return p.count(eta, a);
}

long lambda_sum(const EtaSymbol &eta, int a, const UnitaryParameter &p, const UnitaryParameter &q)
{
    if (a < 1)
        throw std::invalid_argument("lambda index a must be >= 1");
    const int top = std::max(p.max_d(), q.max_d());
    long total = 0;
    if (eta.is_discrete()) {
        for (int b = a; b <= top; b += 2)
            total += p.count(eta, b) - q.count(eta, b + 1);
        return total;
    }
    const EtaSymbol other = dual(eta);
    for (int j = 0; a + j <= top; ++j) {
        const EtaSymbol &sym = (j % 2 == 0) ? eta : other;
        total += p.count(sym, a + j) - q.count(sym, a + j + 1);
    }
    return total;
}

long evaluate(const LambdaQuery &query, const UnitaryParameter &pi, const UnitaryParameter &sigma)
{
    return query.order == Order::PiSigma ? lambda_sum(query.eta, query.a, pi, sigma)
                                         : lambda_sum(query.eta, query.a, sigma, pi);
}

std::vector<EtaSymbol> symbol_closure(const UnitaryParameter &p, const UnitaryParameter &q)
{
    std::vector<EtaSymbol> out;
    for (const auto *param : {&p, &q}) {
        for (const Block &b : param->blocks()) {
            out.push_back(b.eta);
            if (b.eta.is_complementary())
                out.push_back(dual(b.eta));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int lambda_range(const UnitaryParameter &p, const UnitaryParameter &q)
{
    return std::max(p.max_d(), q.max_d());
}

std::vector<LambdaEntry> lambda_table(const UnitaryParameter &pi, const UnitaryParameter &sigma)
{
    std::vector<LambdaEntry> out;
    const int top = lambda_range(pi, sigma);
    for (const EtaSymbol &eta : symbol_closure(pi, sigma)) {
        for (int a = 1; a <= top; ++a) {
            for (Order order : {Order::PiSigma, Order::SigmaPi}) {
                LambdaQuery query{eta, a, order};
                if (long v = evaluate(query, pi, sigma); v != 0)
                    out.push_back({std::move(query), v});
            }
        }
    }
    return out;
}

bool is_relevant_criterion(const UnitaryParameter &pi, const UnitaryParameter &sigma)
{
    const int top = lambda_range(pi, sigma);
    for (const EtaSymbol &eta : symbol_closure(pi, sigma))
        for (int a = 1; a <= top; ++a)
            if (lambda_sum(eta, a, pi, sigma) < 0 || lambda_sum(eta, a, sigma, pi) < 0)
                return false;
    return true;
}

std::size_t for_each_witness(const UnitaryParameter &pi, const UnitaryParameter &sigma,
                             const std::function<bool(const Witness &)> &visit, SearchLimits limits)
{
    check_instance_cap(pi, limits);

    const auto &classes = pi.blocks();
    const auto &targets = sigma.blocks();

    // Where each role sends a class inside sigma.  J on d == 1 vanishes.
    struct Route {
        std::size_t to_i, to_j, to_k;
        bool j_vanishes, k_allowed;
    };
    std::vector<Route> routes;
    for (const Block &b : classes) {
        Route r{index_of(sigma, b.eta, b.d + 1), b.d > 1 ? index_of(sigma, b.eta, b.d - 1) : kNoTarget,
                b.eta.is_complementary() ? index_of(sigma, dual(b.eta), b.d) : kNoTarget, b.d == 1,
                b.eta.is_complementary()};
        routes.push_back(r);
    }

    std::vector<int> residual;
    for (const Block &b : targets)
        residual.push_back(b.mult);

    std::vector<std::array<int, 3>> counts(classes.size(), {0, 0, 0});
    std::size_t visited = 0;
    bool stop = false;

    auto take = [&](std::size_t target, int n) {
        if (n == 0)
            return true;
        if (target == kNoTarget || residual[target] < n)
            return false;
        residual[target] -= n;
        return true;
    };
    auto give = [&](std::size_t target, int n) {
        if (n > 0)
            residual[target] += n;
    };

    std::function<void(std::size_t)> descend = [&](std::size_t c) {
        if (stop)
            return;
        if (c == classes.size()) {
            std::vector<Block> rest;
            for (std::size_t t = 0; t < targets.size(); ++t) {
                if (residual[t] == 0)
                    continue;
                if (targets[t].d != 1)
                    return;
                rest.push_back({targets[t].eta, 1, residual[t]});
            }
            ++visited;
            if (!visit(Witness{assignment_from_counts(counts), UnitaryParameter(std::move(rest))}))
                stop = true;
            return;
        }
        const Route &r = routes[c];
        const int m = classes[c].mult;
        for (int i = 0; i <= m && !stop; ++i) {
            if (!take(r.to_i, i))
                break;
            const int k_max = r.k_allowed ? m - i : 0;
            for (int k = 0; k <= k_max && !stop; ++k) {
                const int j = m - i - k;
                if (!take(r.to_k, k))
                    break;
                const bool j_ok = r.j_vanishes || take(r.to_j, j);
                if (j_ok) {
                    counts[c] = {i, j, k};
                    descend(c + 1);
                    if (!r.j_vanishes)
                        give(r.to_j, j);
                }
                give(r.to_k, k);
            }
            give(r.to_i, i);
        }
    };
    descend(0);
    return visited;
}

std::optional<Witness> bruteforce_witness(const UnitaryParameter &pi, const UnitaryParameter &sigma,
                                          SearchLimits limits)
{
    std::optional<Witness> found;
    for_each_witness(
        pi, sigma,
        [&](const Witness &w) {
            found = w;
            return false;
        },
        limits);
    return found;
}

bool is_relevant_bruteforce(const UnitaryParameter &pi, const UnitaryParameter &sigma, SearchLimits limits)
{
    return bruteforce_witness(pi, sigma, limits).has_value();
}

std::optional<Witness> find_witness(const UnitaryParameter &pi, const UnitaryParameter &sigma, SearchLimits limits)
{
    check_instance_cap(pi, limits);

    const auto inst = instances_of(pi);
    std::vector<std::size_t> remaining(inst.size());
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    std::stable_sort(remaining.begin(), remaining.end(),
                     [&](std::size_t x, std::size_t y) { return inst[x].d > inst[y].d; });

    std::vector<Role> assignment(inst.size(), Role::J);
    UnitaryParameter residual = sigma;
    auto peel = [&](const EtaSymbol &eta, int d) {
        residual = *subtract(residual, UnitaryParameter::single(eta, d));
    };

    while (!remaining.empty()) {
        const int d1 = inst[remaining.front()].d;

        // Case 1: a block of sigma above d1 can only be the I-image of an S_{d1} instance.
        auto above = std::find_if(residual.blocks().begin(), residual.blocks().end(),
                                  [d1](const Block &b) { return b.d > d1; });
        if (above != residual.blocks().end()) {
            if (above->d != d1 + 1)
                return std::nullopt;
            const EtaSymbol eta = above->eta;
            auto src = std::find_if(remaining.begin(), remaining.end(),
                                    [&](std::size_t i) { return inst[i].d == d1 && inst[i].eta == eta; });
            if (src == remaining.end())
                return std::nullopt;
            assignment[*src] = Role::I;
            peel(eta, d1 + 1);
            remaining.erase(src);
            continue;
        }

        // Case 2 with d1 == 1: everything left drops to S_0.
        if (d1 == 1)
            break;

        const std::size_t first = remaining.front();
        const EtaSymbol &eta = inst[first].eta;
        if (eta.is_complementary() && residual.count(dual(eta), d1) > 0) {
            assignment[first] = Role::K;
            peel(dual(eta), d1);
        } else if (residual.count(eta, d1 - 1) > 0) {
            assignment[first] = Role::J;
            peel(eta, d1 - 1);
        } else {
            return std::nullopt;
        }
        remaining.erase(remaining.begin());
    }

    if (!is_generic(residual))
        return std::nullopt;
    return canonicalize(pi, Witness{std::move(assignment), std::move(residual)});
}

bool verify_witness(const UnitaryParameter &pi, const UnitaryParameter &sigma, const Witness &w)
{
    check_assignment_domain(pi, w);
    auto inst = instances_of(pi);
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (w.assignment[i] == Role::K && !inst[i].eta.is_complementary())
            return false;
    if (!is_generic(w.generic_remainder))
        return false;
    return witness_image(pi, w) + w.generic_remainder == sigma;
}

bool proof_identity_check(const UnitaryParameter &pi, const UnitaryParameter &sigma, const Witness &w)
{
    if (!verify_witness(pi, sigma, w))
        throw std::invalid_argument("witness does not certify relevance of the pair");
    const auto inst = instances_of(pi);
    const int top = lambda_range(pi, sigma) + 1;
    for (const EtaSymbol &eta : symbol_closure(pi, sigma)) {
        for (int a = 1; a <= top; ++a) {
            long expected = role_multiplicity(inst, w, Role::J, eta, a);
            if (eta.is_complementary())
                expected += role_multiplicity(inst, w, Role::K, eta, a) +
                            role_multiplicity(inst, w, Role::J, dual(eta), a + 1);
            if (lambda_sum(eta, a, pi, sigma) != expected)
                return false;
        }
    }
    return true;
}

} // namespace ggprel
