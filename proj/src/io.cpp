#include "ggprel/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace ggprel {

namespace {

constexpr std::string_view kBoxTimes = "\xE2\x8A\xA0"; // U+22A0

std::string format_diagnostic(const ParseDiagnostic &d)
{
    std::string msg = std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
    if (!d.expected.empty())
        msg += " (expected " + d.expected + ")";
    return msg;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    UnitaryParameter parameter()
    {
        skip_space();
        if (peek() == '0') {
            std::size_t save = pos_;
            ++pos_;
            skip_space();
            if (at_end())
                return UnitaryParameter::zero();
            pos_ = save;
        }
        std::vector<Block> blocks;
        blocks.push_back(term());
        skip_space();
        while (!at_end()) {
            expect('+', "'+' or end of input");
            blocks.push_back(term());
            skip_space();
        }
        return UnitaryParameter(std::move(blocks));
    }

    EtaSymbol lone_symbol()
    {
        skip_space();
        EtaSymbol eta = symbol();
        skip_space();
        if (!at_end())
            fail("trailing input after symbol", "end of input");
        return eta;
    }

private:
    Block term()
    {
        skip_space();
        int mult = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mult = positive_int("multiplicity");
            skip_space();
            expect('*', "'*'");
            skip_space();
        }
        EtaSymbol eta = symbol();
        skip_space();
        if (text_.substr(pos_).starts_with(kBoxTimes))
            pos_ += kBoxTimes.size();
        else
            expect('x', "'x' or '\xE2\x8A\xA0'");
        skip_space();
        expect('S', "'S'");
        skip_space();
        int d = positive_int("S index");
        return Block{std::move(eta), d, mult};
    }

    EtaSymbol symbol()
    {
        expect('L', "'L('");
        skip_space();
        expect('(', "'('");
        skip_space();
        std::string label = identifier();
        skip_space();
        int k = 1;
        std::optional<Rational> s;
        std::size_t s_pos = 0;
        if (peek() == ',') {
            ++pos_;
            skip_space();
            if (peek() == 'k') {
                ++pos_;
                skip_space();
                expect('=', "'='");
                skip_space();
                k = positive_int("base dimension k");
                skip_space();
                if (peek() == ',') {
                    ++pos_;
                    skip_space();
                    s_pos = pos_;
                    s = s_value();
                }
            } else {
                s_pos = pos_;
                s = s_value();
            }
            skip_space();
        }
        expect(')', s ? "')'" : "',' or ')'");
        if (!s)
            return EtaSymbol::discrete(std::move(label), k);
        if (*s >= Rational(1, 2)) {
            pos_ = s_pos;
            fail("s out of range: complementary series need 0 < s < 1/2", "");
        }
        return EtaSymbol::complementary(std::move(label), k, *s);
    }

    Rational s_value()
    {
        expect('s', "'k=' or 's='");
        skip_space();
        expect('=', "'='");
        skip_space();
        std::int64_t num = positive_int("numerator");
        skip_space();
        expect('/', "'/'");
        skip_space();
        std::int64_t den = positive_int("denominator");
        return Rational(num, den);
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        auto c = static_cast<unsigned char>(peek());
        if (!(std::isalpha(c) || c == '_'))
            fail("invalid label", "identifier");
        while (!at_end()) {
            c = static_cast<unsigned char>(text_[pos_]);
            if (!(std::isalnum(c) || c == '_'))
                break;
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    int positive_int(const char *what)
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail(std::string("missing ") + what, "positive integer");
        std::string_view digits = text_.substr(start, pos_ - start);
        if (digits.front() == '0') {
            pos_ = start;
            fail(std::string(what) + " must be a positive integer without leading zeros", "positive integer");
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            pos_ = start;
            fail(std::string(what) + " is too large", "positive integer");
        }
        return value;
    }

    void expect(char c, const char *expected)
    {
        if (peek() != c)
            fail(at_end() ? "unexpected end of input" : "unexpected character", expected);
        ++pos_;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(std::string message, std::string expected) const
    {
        ParseDiagnostic d;
        d.byte_offset = pos_;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            auto c = static_cast<unsigned char>(text_[i]);
            if (c == '\n') {
                ++d.line;
                d.column = 1;
            } else if ((c & 0xC0) != 0x80) {
                ++d.column;
            }
        }
        d.message = std::move(message);
        d.expected = std::move(expected);
        throw ParseError(std::move(d));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// -- json helpers ----------------------------------------------------------

const nlohmann::json &field(const nlohmann::json &obj, const std::string &path, const char *key)
{
    if (!obj.is_object())
        throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw SchemaError(path + "/" + key, "missing field");
    return *it;
}

std::string get_string(const nlohmann::json &v, const std::string &path)
{
    if (!v.is_string())
        throw SchemaError(path, "expected a string");
    return v.get<std::string>();
}

bool get_bool(const nlohmann::json &v, const std::string &path)
{
    if (!v.is_boolean())
        throw SchemaError(path, "expected a boolean");
    return v.get<bool>();
}

long get_int(const nlohmann::json &v, const std::string &path)
{
    if (!v.is_number_integer())
        throw SchemaError(path, "expected an integer");
    return v.get<long>();
}

UnitaryParameter get_parameter(const nlohmann::json &v, const std::string &path)
{
    try {
        return parse_parameter(get_string(v, path));
    } catch (const ParseError &e) {
        throw SchemaError(path, e.what());
    }
}

Partition get_partition(const nlohmann::json &v, const std::string &path)
{
    if (!v.is_array())
        throw SchemaError(path, "expected an array of integers");
    std::vector<int> parts;
    for (std::size_t i = 0; i < v.size(); ++i)
        parts.push_back(static_cast<int>(get_int(v[i], path + "/" + std::to_string(i))));
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument &e) {
        throw SchemaError(path, e.what());
    }
}

const char *order_name(Order o)
{
    return o == Order::PiSigma ? "pi,sigma" : "sigma,pi";
}

} // namespace

ParseError::ParseError(ParseDiagnostic diag) : std::runtime_error(format_diagnostic(diag)), diag_(std::move(diag)) {}

SchemaError::SchemaError(std::string path, const std::string &message)
    : std::runtime_error((path.empty() ? "/" : path) + ": " + message), path_(std::move(path))
{
}

UnitaryParameter parse_parameter(std::string_view text)
{
    return Parser(text).parameter();
}

EtaSymbol parse_symbol(std::string_view text)
{
    return Parser(text).lone_symbol();
}

std::string print_symbol(const EtaSymbol &eta)
{
    std::string out = "L(" + eta.label();
    if (eta.base_dim() != 1)
        out += ",k=" + std::to_string(eta.base_dim());
    if (eta.is_complementary())
        out += ",s=" + std::to_string(eta.s()->numerator()) + "/" + std::to_string(eta.s()->denominator());
    return out + ")";
}

std::string print_parameter(const UnitaryParameter &p)
{
    if (p.empty())
        return "0";
    std::string out;
    for (const Block &b : p.blocks()) {
        if (!out.empty())
            out += " + ";
        if (b.mult != 1)
            out += std::to_string(b.mult) + "*";
        out += print_symbol(b.eta) + " x S" + std::to_string(b.d);
    }
    return out;
}

std::string print_partition(const Partition &lambda)
{
    std::string out = "(";
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(lambda[i]);
    }
    return out + ")";
}

bool operator==(const LambdaEntry &a, const LambdaEntry &b)
{
    return a.query.eta == b.query.eta && a.query.a == b.query.a && a.query.order == b.query.order &&
           a.value == b.value;
}

bool operator==(const LambdaTable &a, const LambdaTable &b)
{
    return a.a_max == b.a_max && a.entries == b.entries;
}

bool operator==(const RelevanceReport &a, const RelevanceReport &b)
{
    return a.pi == b.pi && a.sigma == b.sigma && a.relevant == b.relevant && a.witness == b.witness &&
           a.lambda_table == b.lambda_table && a.sl2_pi == b.sl2_pi && a.sl2_sigma == b.sl2_sigma &&
           a.close == b.close && a.nt_pi == b.nt_pi && a.nt_sigma == b.nt_sigma;
}

RelevanceReport build_report(const UnitaryParameter &pi, const UnitaryParameter &sigma, SearchLimits limits)
{
    RelevanceReport r;
    r.pi = pi;
    r.sigma = sigma;
    r.relevant = is_relevant_criterion(pi, sigma);
    if (r.relevant) {
        r.witness = find_witness(pi, sigma, limits);
        if (!r.witness)
            throw std::logic_error("criterion holds but no witness was constructed for " + print_parameter(pi) +
                                   " / " + print_parameter(sigma));
    }
    r.lambda_table = {lambda_range(pi, sigma), lambda_table(pi, sigma)};
    r.sl2_pi = sl2_type(pi);
    r.sl2_sigma = sl2_type(sigma);
    r.close = is_close(r.sl2_pi, r.sl2_sigma);
    r.nt_pi = nt_measure(pi);
    r.nt_sigma = nt_measure(sigma);
    return r;
}

nlohmann::json encode_report(const RelevanceReport &report)
{
    nlohmann::json doc;
    doc["pi"] = print_parameter(report.pi);
    doc["sigma"] = print_parameter(report.sigma);
    doc["relevant"] = report.relevant;
    if (report.witness) {
        RoleSplit split = split_by_role(report.pi, *report.witness);
        doc["witness"] = {{"I", print_parameter(split.I)},
                          {"J", print_parameter(split.J)},
                          {"K", print_parameter(split.K)},
                          {"psi0", print_parameter(report.witness->generic_remainder)}};
    }
    nlohmann::json entries = nlohmann::json::array();
    for (const LambdaEntry &e : report.lambda_table.entries)
        entries.push_back({{"eta", print_symbol(e.query.eta)},
                           {"a", e.query.a},
                           {"order", order_name(e.query.order)},
                           {"value", e.value}});
    doc["lambda_table"] = {{"a_max", report.lambda_table.a_max}, {"entries", std::move(entries)}};
    doc["sl2_pi"] = report.sl2_pi.parts();
    doc["sl2_sigma"] = report.sl2_sigma.parts();
    doc["close"] = report.close;
    doc["nt_pi"] = report.nt_pi;
    doc["nt_sigma"] = report.nt_sigma;
    return doc;
}

RelevanceReport decode_report(const nlohmann::json &doc)
{
    if (!doc.is_object())
        throw SchemaError("", "expected an object");
    RelevanceReport r;
    r.pi = get_parameter(field(doc, "", "pi"), "/pi");
    r.sigma = get_parameter(field(doc, "", "sigma"), "/sigma");
    r.relevant = get_bool(field(doc, "", "relevant"), "/relevant");

    bool has_witness = doc.contains("witness");
    if (has_witness != r.relevant)
        throw SchemaError("/witness", r.relevant ? "missing field" : "present although the pair is irrelevant");
    if (has_witness) {
        const auto &w = doc["witness"];
        RoleSplit split{get_parameter(field(w, "/witness", "I"), "/witness/I"),
                        get_parameter(field(w, "/witness", "J"), "/witness/J"),
                        get_parameter(field(w, "/witness", "K"), "/witness/K")};
        UnitaryParameter psi0 = get_parameter(field(w, "/witness", "psi0"), "/witness/psi0");
        try {
            r.witness = witness_from_split(r.pi, split, std::move(psi0));
        } catch (const std::invalid_argument &e) {
            throw SchemaError("/witness", e.what());
        }
    }

    const auto &table = field(doc, "", "lambda_table");
    r.lambda_table.a_max = static_cast<int>(get_int(field(table, "/lambda_table", "a_max"), "/lambda_table/a_max"));
    const auto &entries = field(table, "/lambda_table", "entries");
    if (!entries.is_array())
        throw SchemaError("/lambda_table/entries", "expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string path = "/lambda_table/entries/" + std::to_string(i);
        const auto &e = entries[i];
        std::string eta_text = get_string(field(e, path, "eta"), path + "/eta");
        std::optional<EtaSymbol> eta;
        try {
            eta = parse_symbol(eta_text);
        } catch (const ParseError &err) {
            throw SchemaError(path + "/eta", err.what());
        }
        long a = get_int(field(e, path, "a"), path + "/a");
        if (a < 1 || a > std::numeric_limits<int>::max())
            throw SchemaError(path + "/a", "expected a positive integer");
        std::string order = get_string(field(e, path, "order"), path + "/order");
        Order o;
        if (order == "pi,sigma")
            o = Order::PiSigma;
        else if (order == "sigma,pi")
            o = Order::SigmaPi;
        else
            throw SchemaError(path + "/order", "expected \"pi,sigma\" or \"sigma,pi\"");
        long value = get_int(field(e, path, "value"), path + "/value");
        r.lambda_table.entries.push_back({LambdaQuery{*eta, static_cast<int>(a), o}, value});
    }

    r.sl2_pi = get_partition(field(doc, "", "sl2_pi"), "/sl2_pi");
    r.sl2_sigma = get_partition(field(doc, "", "sl2_sigma"), "/sl2_sigma");
    r.close = get_bool(field(doc, "", "close"), "/close");
    r.nt_pi = get_int(field(doc, "", "nt_pi"), "/nt_pi");
    r.nt_sigma = get_int(field(doc, "", "nt_sigma"), "/nt_sigma");
    return r;
}

} // namespace ggprel
