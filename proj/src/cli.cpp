#include "eqprod/cli.hpp"

#include "eqprod/error.hpp"
#include "eqprod/json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace eqprod::cli {

using nlohmann::json;

namespace {

unsigned default_workers()
{
    if (const char* env = std::getenv("EP_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::vector<std::int64_t> parse_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "bad list entry '" + item + "'");
        }
    }
    return out;
}

json read_json_arg(const std::string& arg)
{
    std::string text;
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(arg);
        if (!in)
            throw Error(ErrorCode::InvalidArgument, "cannot open " + arg);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("invalid JSON: ") + e.what());
    }
}

std::string family_text(const Family& f)
{
    std::string out = "(s,p,n)=" + to_string(f.triple) + ":";
    for (const auto& m : f.members)
        out += " " + to_string(m);
    return out;
}

std::string witness_text(const WitnessPair& w)
{
    return to_string(w.X) + " " + to_string(w.Y) + " " + to_string(w.triple());
}

class Runner {
public:
    Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    Format fmt(Format fallback) const { return cfg_.format == Format::Auto ? fallback : cfg_.format; }

    void emit_json(const json& j) { out_ << j.dump() << '\n'; }

    Parallelism par() const { return Parallelism{cfg_.workers}; }
    SearchOptions search() const { return SearchOptions{cfg_.node_cap}; }
    ThresholdOptions thresholds() const { return ThresholdOptions{cfg_.cap, cfg_.scan_ceiling, par()}; }

    int f(std::uint64_t s)
    {
        const auto report = compute_report(s, ReportOptions{true, par()});
        if (fmt(Format::Text) == Format::Json)
            emit_json(json{{"s", s}, {"f", report.f}});
        else
            out_ << report.f << '\n';
        return kOk;
    }

    int report(std::uint64_t s, bool no_shortcuts)
    {
        const auto report = compute_report(s, ReportOptions{!no_shortcuts, par()});
        if (fmt(Format::Json) == Format::Json) {
            emit_json(report);
        } else {
            out_ << "s=" << report.s << " f=" << report.f << " F={";
            for (std::size_t i = 0; i < report.F.size(); ++i)
                out_ << (i ? "," : "") << report.F[i];
            out_ << "}\n";
            for (const auto& [n, fam] : report.witnesses)
                out_ << "n=" << n << " " << family_text(fam) << '\n';
        }
        return kOk;
    }

    int admissible(std::uint64_t s, const std::string& p_text, std::uint64_t n)
    {
        const auto p = parse_u128(p_text);
        if (!p)
            throw Error(ErrorCode::InvalidArgument, "bad product '" + p_text + "'");
        const bool ok = is_admissible(s, *p, n);
        if (fmt(Format::Text) == Format::Json)
            emit_json(json{{"s", s}, {"p", u128_to_json(*p)}, {"n", n}, {"admissible", ok}});
        else
            out_ << (ok ? "true" : "false") << '\n';
        return ok ? kOk : kNoResult;
    }

    int families(std::uint64_t s, std::uint64_t n, std::uint64_t r, bool disjoint)
    {
        const auto fams = disjoint ? disjoint_families(s, n, r, par()) : equal_product_families(s, n, r, par());
        if (fmt(Format::Json) == Format::Json) {
            emit_json(fams);
        } else {
            for (const auto& fam : fams)
                out_ << family_text(fam) << '\n';
        }
        return fams.empty() ? kNoResult : kOk;
    }

    int product(std::uint64_t p)
    {
        if (p == 0)
            throw Error(ErrorCode::InvalidArgument, "p must be positive");
        const auto w = is_product_admissible(factorize(p), search());
        if (fmt(Format::Json) == Format::Json)
            emit_json(json{{"p", p}, {"admissible", w.has_value()}, {"witness", w ? json(*w) : json(nullptr)}});
        else
            out_ << (w ? "true " + witness_text(*w) : std::string("false")) << '\n';
        return w ? kOk : kNoResult;
    }

    int prime_power(std::uint64_t q, unsigned j, bool exhaustive)
    {
        const auto res = is_prime_power_admissible(
            q, j, exhaustive ? PrimePowerMode::Exhaustive : PrimePowerMode::Theorem, search());
        if (fmt(Format::Json) == Format::Json) {
            emit_json(json{{"q", q},
                           {"j", j},
                           {"mode", exhaustive ? "exhaustive" : "theorem"},
                           {"admissible", res.admissible},
                           {"witness", res.witness ? json(*res.witness) : json(nullptr)}});
        } else {
            out_ << (res.admissible ? "true" : "false");
            if (res.witness)
                out_ << ' ' << witness_text(*res.witness);
            out_ << '\n';
        }
        return res.admissible ? kOk : kNoResult;
    }

    int witness(const WitnessPair& w)
    {
        if (fmt(Format::Json) == Format::Json)
            emit_json(w);
        else
            out_ << witness_text(w) << '\n';
        return kOk;
    }

    int chi_verify(const std::string& arg)
    {
        const auto cert = read_json_arg(arg).get<ChiCertificate>();
        const bool ok = verify_chi(cert);
        if (fmt(Format::Text) == Format::Json)
            emit_json(json{{"valid", ok}, {"certificate", cert}});
        else
            out_ << (ok ? "true" : "false") << '\n';
        return ok ? kOk : kNoResult;
    }

    int chi_from(const std::string& x, const std::string& y)
    {
        const auto w = WitnessPair::make(PartitionMultiset::canonicalize(parse_list(x)),
                                         PartitionMultiset::canonicalize(parse_list(y)));
        const auto cert = chi_from_witness(w);
        if (fmt(Format::Json) == Format::Json)
            emit_json(cert);
        else
            out_ << to_string(cert.chi) << '\n';
        return kOk;
    }

    int chi_to(const std::string& arg)
    {
        return witness(witness_from_chi(read_json_arg(arg).get<ChiCertificate>()));
    }

    int s0(std::uint64_t n, std::uint64_t r)
    {
        ThresholdEngine engine(thresholds());
        const auto rec = engine.s0_record(n, r);
        if (fmt(Format::Text) == Format::Json)
            emit_json(rec);
        else if (rec.s0)
            out_ << *rec.s0 << '\n';
        else
            out_ << "none up to cap " << cfg_.cap << '\n';
        return rec.s0 ? kOk : kNoResult;
    }

    int sstar(std::uint64_t n, std::uint64_t r)
    {
        ThresholdEngine engine(thresholds());
        ThresholdRecord rec;
        rec.n = n;
        rec.r = r;
        rec.sstar = engine.s_r_star(n, r, &rec.certified_to);
        if (fmt(Format::Text) == Format::Json) {
            emit_json(rec);
        } else {
            out_ << *rec.sstar;
            if (rec.certified_to)
                out_ << " (certified up to " << *rec.certified_to << ")";
            out_ << '\n';
        }
        return kOk;
    }

    int table(const std::string& which, std::uint64_t n_max)
    {
        ThresholdEngine engine(thresholds());
        const auto records = which == "s0" ? table_s_n0(n_max, engine) : table_s_star(n_max, engine);
        switch (fmt(Format::Csv)) {
        case Format::Json:
            emit_json(records);
            break;
        case Format::Bfile:
            out_ << to_bfile(records);
            break;
        case Format::Text:
            for (const auto& rec : records) {
                const auto v = which == "s0" ? rec.s0 : rec.sstar;
                out_ << "n=" << rec.n << " r=" << rec.r << " " << (which == "s0" ? "s0=" : "sstar=");
                if (v)
                    out_ << *v;
                else
                    out_ << "none";
                if (rec.certified_to)
                    out_ << " (certified up to " << *rec.certified_to << ")";
                out_ << '\n';
            }
            break;
        default:
            out_ << to_csv(records);
        }
        return kOk;
    }

    int conjectures(std::uint64_t n_max)
    {
        ThresholdEngine engine(thresholds());
        const auto rows = check_conjectures(n_max, engine);
        switch (fmt(Format::Text)) {
        case Format::Json:
            emit_json(rows);
            break;
        case Format::Csv:
            out_ << "conjecture,n,r,lhs,rhs,status\n";
            for (const auto& row : rows)
                out_ << row.conjecture << ',' << row.n << ',' << row.r << ',' << row.lhs << ',' << row.rhs << ','
                     << (row.hold ? "HOLD" : "FAIL") << '\n';
            break;
        default:
            for (const auto& row : rows)
                out_ << "conjecture " << row.conjecture << " n=" << row.n << " r=" << row.r << ": " << row.lhs
                     << " vs " << row.rhs << " " << (row.hold ? "HOLD" : "FAIL") << '\n';
        }
        const bool all = std::all_of(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.hold; });
        return all ? kOk : kNoResult;
    }

    int wizard(std::uint64_t limit)
    {
        const auto buses = wizard_bus_numbers(limit, par());
        if (fmt(Format::Text) == Format::Json) {
            emit_json(buses);
        } else {
            for (auto s : buses)
                out_ << s << '\n';
        }
        return buses.empty() ? kNoResult : kOk;
    }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    cfg.workers = default_workers();

    CLI::App app{"Equal sum and product partitions", "eqprod"};
    app.require_subcommand(1);
    app.fallthrough();
    const std::map<std::string, Format> formats{
        {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}, {"bfile", Format::Bfile}};
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--workers", cfg.workers, "Worker threads (default: $EP_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--node-cap", cfg.node_cap, "Search node budget")->check(CLI::PositiveNumber);
    app.add_option("--scan-ceiling", cfg.scan_ceiling, "Downward scan start for n = 3")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "Upper bound for s0 scans")->check(CLI::PositiveNumber);

    std::uint64_t s = 0, n = 0, r = 2, p = 0, q = 0, u = 0, limit = 0, n_max = 0;
    unsigned j = 0;
    std::string p_text, which, cert_arg, x_list, y_list;
    bool disjoint = false, exhaustive = false, no_shortcuts = false;

    auto* f_cmd = app.add_subcommand("f", "Number of lengths n admitting a collision at sum s");
    f_cmd->add_option("s", s)->required()->check(CLI::PositiveNumber);

    auto* report_cmd = app.add_subcommand("report", "F(s), f(s) and one witness family per n");
    report_cmd->add_option("s", s)->required()->check(CLI::PositiveNumber);
    report_cmd->add_flag("--no-shortcuts", no_shortcuts, "Enumerate every n instead of skipping excluded lengths");

    auto* adm_cmd = app.add_subcommand("admissible", "Is (s, p, n) admissible?");
    adm_cmd->add_option("s", s)->required()->check(CLI::PositiveNumber);
    adm_cmd->add_option("p", p_text)->required();
    adm_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

    auto* fam_cmd = app.add_subcommand("families", "Equal-product families among n-partitions of s");
    fam_cmd->add_option("s", s)->required()->check(CLI::PositiveNumber);
    fam_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    fam_cmd->add_option("--r", r, "Minimum family size")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
    fam_cmd->add_flag("--disjoint", disjoint, "Require all r*n parts to be pairwise distinct");

    auto* prod_cmd = app.add_subcommand("product", "Is p product-admissible?");
    prod_cmd->add_option("p", p)->required()->check(CLI::PositiveNumber);

    auto* pp_cmd = app.add_subcommand("prime-power", "Is q^j product-admissible?");
    pp_cmd->add_option("q", q)->required();
    pp_cmd->add_option("j", j)->required()->check(CLI::PositiveNumber);
    pp_cmd->add_flag("--exhaustive", exhaustive, "Decide by exhaustive coefficient search");

    auto* wit_cmd = app.add_subcommand("witness", "Constructed witness pairs");
    wit_cmd->require_subcommand(1);
    wit_cmd->fallthrough();
    auto* qj_cmd = wit_cmd->add_subcommand("qj", "Witness for q^j, j >= 2q+4");
    qj_cmd->add_option("q", q)->required();
    qj_cmd->add_option("j", j)->required();
    auto* qu_cmd = wit_cmd->add_subcommand("qu", "Witness for q^(2q+4)*u");
    qu_cmd->add_option("q", q)->required();
    qu_cmd->add_option("u", u)->required()->check(CLI::PositiveNumber);

    auto* chi_cmd = app.add_subcommand("chi", "Polynomial certificates");
    chi_cmd->require_subcommand(1);
    chi_cmd->fallthrough();
    auto* chi_verify_cmd = chi_cmd->add_subcommand("verify", "Check a certificate (JSON text, file, or - for stdin)");
    chi_verify_cmd->add_option("certificate", cert_arg)->required();
    auto* chi_from_cmd = chi_cmd->add_subcommand("from-witness", "Certificate from a witness pair");
    chi_from_cmd->add_option("--x", x_list, "Comma-separated parts of X")->required();
    chi_from_cmd->add_option("--y", y_list, "Comma-separated parts of Y")->required();
    auto* chi_to_cmd = chi_cmd->add_subcommand("to-witness", "Witness pair from a certificate");
    chi_to_cmd->add_option("certificate", cert_arg)->required();

    auto* s0_cmd = app.add_subcommand("s0", "Smallest s with an r-member family of n-partitions");
    s0_cmd->add_option("n", n)->required();
    s0_cmd->add_option("r", r)->required();
    auto* sstar_cmd = app.add_subcommand("sstar", "Smallest s from which every sum has an r-member family");
    sstar_cmd->add_option("n", n)->required();
    sstar_cmd->add_option("r", r)->required();

    auto* table_cmd = app.add_subcommand("table", "Threshold tables");
    table_cmd->add_option("which", which)->required()->check(CLI::IsMember({"s0", "sstar"}));
    table_cmd->add_option("n_max", n_max)->required();

    auto* conj_cmd = app.add_subcommand("conjectures", "Sweep the threshold conjectures");
    conj_cmd->add_option("n_max", n_max)->required();

    auto* wiz_cmd = app.add_subcommand("wizard", "Sums with exactly one admissible (p, n) pair");
    wiz_cmd->add_option("limit", limit)->required()->check(CLI::Range(std::uint64_t{1}, kMaxSafeSum));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    Runner run(cfg, out);
    try {
        if (*f_cmd)
            return run.f(s);
        if (*report_cmd)
            return run.report(s, no_shortcuts);
        if (*adm_cmd)
            return run.admissible(s, p_text, n);
        if (*fam_cmd)
            return run.families(s, n, r, disjoint);
        if (*prod_cmd)
            return run.product(p);
        if (*pp_cmd)
            return run.prime_power(q, j, exhaustive);
        if (*qj_cmd)
            return run.witness(construct_prime_power_witness(q, j));
        if (*qu_cmd)
            return run.witness(construct_qu_witness(q, u));
        if (*chi_verify_cmd)
            return run.chi_verify(cert_arg);
        if (*chi_from_cmd)
            return run.chi_from(x_list, y_list);
        if (*chi_to_cmd)
            return run.chi_to(cert_arg);
        if (*s0_cmd)
            return run.s0(n, r);
        if (*sstar_cmd)
            return run.sstar(n, r);
        if (*table_cmd)
            return run.table(which, n_max);
        if (*conj_cmd)
            return run.conjectures(n_max);
        if (*wiz_cmd)
            return run.wizard(limit);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::SearchBudgetExceeded ? kBudget : kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << '\n';
        return kUsage;
    }
    err << "usage error: no subcommand\n";
    return kUsage;
}

} // namespace eqprod::cli
