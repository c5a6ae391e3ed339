// Command-line front end: decide relevance, print witnesses, Λ tables and
// SL2-types, enumerate corpora and run the equivalence self-test.
//
// Exit codes: 0 ran / relevant, 1 irrelevant (or self-test violation),
// 2 usage or parse error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ggprel/harness.hpp"
#include "ggprel/io.hpp"
#include "ggprel/partitions.hpp"
#include "ggprel/relevance.hpp"

using namespace ggprel;

namespace {

constexpr int kOk = 0;
constexpr int kIrrelevant = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

UnitaryParameter parse_arg(const std::string &what, const std::string &text)
{
    try {
        return parse_parameter(text);
    } catch (const ParseError &e) {
        const auto &d = e.diagnostic();
        std::string caret(d.column > 0 ? static_cast<std::size_t>(d.column - 1) : 0, ' ');
        throw UsageError(what + ": " + e.what() + "\n  " + text + "\n  " + caret + "^");
    }
}

CorpusSpec load_spec(const std::string &path)
{
    if (path.empty())
        return desk_corpus_spec();
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open spec file " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw UsageError(path + ": " + e.what());
    }
    try {
        return decode_corpus_spec(doc);
    } catch (const SchemaError &e) {
        throw UsageError(path + ": " + e.what());
    }
}

void print_witness(const UnitaryParameter &pi, const Witness &w)
{
    RoleSplit split = split_by_role(pi, w);
    std::cout << "I:    " << print_parameter(split.I) << "\n"
              << "J:    " << print_parameter(split.J) << "\n"
              << "K:    " << print_parameter(split.K) << "\n"
              << "psi0: " << print_parameter(w.generic_remainder) << "\n";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Relevance of unitary parameters for general linear groups"};
    app.require_subcommand(1);

    std::string pi_text, sigma_text, field = "none", eta_text, spec_path;
    bool corank_one = false;
    int a_query = 0;
    int max_instances = SearchLimits{}.max_instances;
    app.add_option("--max-instances", max_instances, "Search limit on block instances of pi")->check(CLI::PositiveNumber);

    auto *check = app.add_subcommand("check", "Decide relevance and print the report");
    check->add_option("PI", pi_text)->required();
    check->add_option("SIGMA", sigma_text)->required();
    check->add_flag("--corank-one", corank_one, "Require dim(PI) = dim(SIGMA) + 1");
    check->add_option("--field", field, "Base-dimension profile")->check(CLI::IsMember({"none", "real", "complex"}));

    auto *witness = app.add_subcommand("witness", "Print a witness partition I, J, K and remainder");
    witness->add_option("PI", pi_text)->required();
    witness->add_option("SIGMA", sigma_text)->required();

    auto *lambda = app.add_subcommand("lambda", "Print the alternating sums");
    lambda->add_option("PI", pi_text)->required();
    lambda->add_option("SIGMA", sigma_text)->required();
    auto *eta_opt = lambda->add_option("--eta", eta_text, "Symbol, e.g. L(a,s=1/3)");
    auto *a_opt = lambda->add_option("--a", a_query, "Index a >= 1")->check(CLI::PositiveNumber);
    eta_opt->needs(a_opt);
    a_opt->needs(eta_opt);

    auto *type = app.add_subcommand("type", "SL2-type, associated partition, NT, dimension and flags");
    type->add_option("P", pi_text)->required();

    auto *close = app.add_subcommand("close", "Compare SL2-types coordinatewise");
    close->add_option("P", pi_text)->required();
    close->add_option("Q", sigma_text)->required();

    auto *enumerate = app.add_subcommand("enumerate", "List every parameter of a corpus");
    enumerate->add_option("--spec", spec_path, "Corpus spec (JSON); default is the desk corpus");

    auto *selftest = app.add_subcommand("selftest", "Sweep a corpus checking criterion, oracle and witnesses");
    selftest->add_option("--spec", spec_path, "Corpus spec (JSON); default is the desk corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const SearchLimits limits{max_instances};
    try {
        if (*check) {
            UnitaryParameter pi = parse_arg("PI", pi_text);
            UnitaryParameter sigma = parse_arg("SIGMA", sigma_text);
            static const std::map<std::string, FieldProfile> profiles{
                {"none", FieldProfile::None}, {"real", FieldProfile::Real}, {"complex", FieldProfile::Complex}};
            FieldProfile profile = profiles.at(field);
            for (const auto &[name, p] : {std::pair{"PI", &pi}, std::pair{"SIGMA", &sigma}})
                if (!is_realizable(*p, profile))
                    throw UsageError(std::string(name) + " is not realizable over the " + field + " field");
            if (corank_one && dimension(pi) != dimension(sigma) + 1)
                throw UsageError("corank-one pair needs dim(PI) = dim(SIGMA) + 1, got " +
                                 std::to_string(dimension(pi)) + " and " + std::to_string(dimension(sigma)));
            RelevanceReport report = build_report(pi, sigma, limits);
            std::cout << (report.relevant ? "relevant" : "irrelevant") << "\n";
            std::cout << encode_report(report).dump(2) << "\n";
            return report.relevant ? kOk : kIrrelevant;
        }
        if (*witness) {
            UnitaryParameter pi = parse_arg("PI", pi_text);
            UnitaryParameter sigma = parse_arg("SIGMA", sigma_text);
            auto w = find_witness(pi, sigma, limits);
            if (!w) {
                std::cout << "irrelevant: no witness\n";
                return kIrrelevant;
            }
            print_witness(pi, *w);
            return kOk;
        }
        if (*lambda) {
            UnitaryParameter pi = parse_arg("PI", pi_text);
            UnitaryParameter sigma = parse_arg("SIGMA", sigma_text);
            if (!eta_text.empty()) {
                EtaSymbol eta = [&] {
                    try {
                        return parse_symbol(eta_text);
                    } catch (const ParseError &e) {
                        throw UsageError(std::string("--eta: ") + e.what());
                    }
                }();
                std::cout << "Lambda(" << print_symbol(eta) << "," << a_query << ";pi,sigma) = "
                          << lambda_sum(eta, a_query, pi, sigma) << "\n"
                          << "Lambda(" << print_symbol(eta) << "," << a_query << ";sigma,pi) = "
                          << lambda_sum(eta, a_query, sigma, pi) << "\n";
                return kOk;
            }
            std::cout << "a_max: " << lambda_range(pi, sigma) << "\n";
            for (const LambdaEntry &e : lambda_table(pi, sigma))
                std::cout << "Lambda(" << print_symbol(e.query.eta) << "," << e.query.a << ";"
                          << (e.query.order == Order::PiSigma ? "pi,sigma" : "sigma,pi") << ") = " << e.value << "\n";
            return kOk;
        }
        if (*type) {
            UnitaryParameter p = parse_arg("P", pi_text);
            std::cout << "sl2_type: " << print_partition(sl2_type(p)) << "\n"
                      << "associated_partition: " << print_partition(associated_partition_of(p)) << "\n"
                      << "nt: " << nt_measure(p) << "\n"
                      << "dim: " << dimension(p) << "\n"
                      << "generic: " << (is_generic(p) ? "yes" : "no") << "\n"
                      << "arthur_type: " << (is_arthur_type(p) ? "yes" : "no") << "\n";
            return kOk;
        }
        if (*close) {
            UnitaryParameter p = parse_arg("P", pi_text);
            UnitaryParameter q = parse_arg("Q", sigma_text);
            Partition tp = sl2_type(p), tq = sl2_type(q);
            std::cout << print_partition(tp) << " vs " << print_partition(tq) << ": "
                      << (is_close(tp, tq) ? "close" : "not close") << "\n";
            return kOk;
        }
        if (*enumerate) {
            CorpusSpec spec = load_spec(spec_path);
            for (const UnitaryParameter &p : enumerate_parameters(spec))
                std::cout << print_parameter(p) << "\n";
            return kOk;
        }
        if (*selftest) {
            CorpusSpec spec = load_spec(spec_path);
            SelftestSummary summary = selftest_equivalence(spec);
            std::cout << format_summary(summary);
            std::cerr << "elapsed: " << summary.seconds << " s\n";
            return summary.ok() ? kOk : kIrrelevant;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimitError &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    }
    return kUsage;
}
