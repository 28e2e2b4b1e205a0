#include "quadfop/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadfop/fop.hpp"
#include "quadfop/imagclass.hpp"
#include "quadfop/mclaughlin.hpp"
#include "quadfop/normeq.hpp"
#include "quadfop/prationality.hpp"

namespace quadfop::cli {

namespace {

using u64 = std::uint64_t;
using json = nlohmann::ordered_json;

constexpr u64 kLongBound = 4000000;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// monostate: absent (empty CSV cell, key omitted in JSONL).
using Value = std::variant<std::monostate, Int, std::string, bool, double>;

// Record tables start with the columns M, t, r.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
    std::vector<std::pair<std::string, Value>> stats;
    bool records = true;
};

struct Config {
    u64 bound = 0;
    std::string format = "csv";
    std::string output;
    bool positive_only = false;
    bool certify = false;
    bool allow_long = false;
    bool progress = false;
    unsigned workers = 0;
    std::string first_order;

    int s = -1;
    std::string nu = "1";
    unsigned p = 3;
    u64 q = 7;
    std::vector<std::string> polys;
    std::string trace = "linear";
    u64 t_start = 1;
    std::string variant = "A";
    bool t0_zero = false;
    std::vector<unsigned> t0{0, 4, 5};
    bool filtered = false;
    std::string h_limit;
    unsigned k = 10;
    std::string m, u, v;
    std::size_t n_cap = 1000;
    bool emit_poly = false;
};

Int parse_int(const std::string& text, const char* what) {
    Int x;
    if (text.empty() || x.set_str(text, 10) != 0) throw ConfigError(std::string("--") + what + ": not an integer: " + text);
    return x;
}

void check_sign(int s) {
    if (s != 1 && s != -1) throw ConfigError("--s must be -1 or 1");
}

void check_odd_prime(unsigned p) {
    if (p < 3 || !arith::is_prime64(p)) throw ConfigError("--p must be an odd prime");
}

fop::FopOptions fop_options(const Config& cfg, fop::FopOptions base = {}) {
    base.workers = cfg.workers;
    if (cfg.first_order == "t-major") base.order = fop::FirstOrder::t_major;
    if (cfg.first_order == "family-major") base.order = fop::FirstOrder::family_major;
    if (cfg.progress) {
        base.progress = [](u64 done, u64 total) {
            std::fprintf(stderr, "\rprogress %llu/%llu", static_cast<unsigned long long>(done),
                         static_cast<unsigned long long>(total));
            if (done == total) std::fputc('\n', stderr);
        };
    }
    return base;
}

std::vector<Value> record_cells(const fop::FopRecord& rec) {
    return {rec.M, Int(static_cast<unsigned long>(rec.t)), rec.r};
}

void add_run_stats(Table& tab, const fop::FopResult& run) {
    const auto& st = run.stats();
    tab.stats.push_back({"N", Int(static_cast<unsigned long>(st.count))});
    tab.stats.push_back({"gap", Int(static_cast<unsigned long>(st.gap))});
    tab.stats.push_back({"max_M", st.max_M});
}

// Plain record listing; degenerate records stay unless --positive-only.
Table list_run(const Config& cfg, const fop::FopResult& run, bool with_family, bool with_key) {
    Table tab;
    tab.columns = {"M", "t", "r"};
    if (with_key) tab.columns.push_back("D");
    if (with_family) tab.columns.push_back("family");
    for (std::size_t i = 0; i < run.size(); ++i) {
        const fop::FopRecord rec = run[i];
        if (cfg.positive_only && rec.degenerate()) continue;
        auto row = record_cells(rec);
        if (with_key) row.push_back(run.key(i));
        if (with_family) row.push_back(Int(static_cast<unsigned long>(rec.family)));
        tab.rows.push_back(std::move(row));
    }
    add_run_stats(tab, run);
    return tab;
}

std::vector<fop::PolyFamily> parse_polys(const std::vector<std::string>& names) {
    if (names.empty()) throw ConfigError("--poly is required");
    std::vector<fop::PolyFamily> out;
    for (const auto& name : names) {
        // t2m<K>: t^2 - K; t2p<K>: t^2 + K.
        if (name.size() < 4 || name.compare(0, 2, "t2") != 0 || (name[2] != 'm' && name[2] != 'p'))
            throw ConfigError("--poly: expected t2m<K> or t2p<K>, got " + name);
        const Int K = parse_int(name.substr(3), "poly");
        if (K < 1) throw ConfigError("--poly: K must be positive");
        out.push_back(fop::primed_family(name[2] == 'm' ? 1 : -1, K));
    }
    return out;
}

// n for a unit E > 1 with fundamental norm S.
std::pair<unsigned long, int> exponent_and_norm(const QuadInt& E) {
    auto pp = primitive_power(E);
    return {pp.n, static_cast<int>(pp.base.norm().get_si())};
}

Table cmd_radicals(const Config& cfg, bool discriminants) {
    auto fams = parse_polys(cfg.polys);
    auto run = fop::run_fop_multi(fams, cfg.bound, discriminants ? fop::DedupKey::discriminant : fop::DedupKey::radical,
                                  fop_options(cfg));
    return list_run(cfg, run, fams.size() > 1, discriminants);
}

Table cmd_units(const Config& cfg) {
    check_sign(cfg.s);
    if (cfg.t_start < 1) throw ConfigError("--t-start must be at least 1");
    auto run = fop::run_fop(fop::unit_family(cfg.s, cfg.t_start), cfg.bound, fop::DedupKey::radical, fop_options(cfg));
    if (!cfg.certify) return list_run(cfg, run, false, false);
    Table tab;
    tab.columns = {"M", "t", "r", "n", "exception"};
    u64 exceptions = 0;
    for (std::size_t i = 0; i < run.size(); ++i) {
        const fop::FopRecord rec = run[i];
        if (rec.degenerate()) {
            if (!cfg.positive_only) tab.rows.push_back({rec.M, Int(static_cast<unsigned long>(rec.t)), rec.r, {}, {}});
            continue;
        }
        auto [n, S] = exponent_and_norm(*fop::record_element(run, rec));
        const bool exc = n != ((cfg.s == 1 && S == -1) ? 2ul : 1ul);
        exceptions += exc;
        tab.rows.push_back({rec.M, Int(static_cast<unsigned long>(rec.t)), rec.r, Int(n), exc});
    }
    add_run_stats(tab, run);
    tab.stats.push_back({"exceptions", Int(static_cast<unsigned long>(exceptions))});
    return tab;
}

Table cmd_norms(const Config& cfg) {
    check_sign(cfg.s);
    const Int nu = parse_int(cfg.nu, "nu");
    if (nu < 1) throw ConfigError("--nu must be at least 1");
    auto run = normeq::fop_norm_solutions(cfg.s, nu, cfg.bound, fop_options(cfg));
    return list_run(cfg, run, false, false);
}

Table cmd_verify_powers(const Config& cfg) {
    check_sign(cfg.s);
    fop::QuadraticFamily qf;
    qf.s = cfg.s;
    qf.t_start = cfg.t_start;
    if (cfg.trace == "linear") {
        qf.trace = fop::PowerTrace{1, 1, 0};
    } else if (cfg.trace == "square") {
        qf.trace = fop::PowerTrace{1, 2, 0};
    } else if (cfg.trace == "prime") {
        qf.trace = fop::PrimeTrace{};
    } else {
        throw ConfigError("--trace must be linear, square or prime");
    }
    if (cfg.t_start < 1) throw ConfigError("--t-start must be at least 1");
    auto run = fop::run_fop(fop::PolyFamily(qf, "verify"), cfg.bound, fop::DedupKey::radical, fop_options(cfg));
    Table tab;
    tab.columns = {"M", "t", "r", "T", "n", "exception"};
    u64 exceptions = 0;
    for (std::size_t i = 0; i < run.size(); ++i) {
        const fop::FopRecord rec = run[i];
        if (rec.degenerate()) continue;
        const QuadInt E = *fop::record_element(run, rec);
        auto [n, S] = exponent_and_norm(E);
        const bool exc = n != ((cfg.s == 1 && S == -1) ? 2ul : 1ul);
        exceptions += exc;
        tab.rows.push_back({rec.M, Int(static_cast<unsigned long>(rec.t)), rec.r, E.trace(), Int(n), exc});
    }
    add_run_stats(tab, run);
    tab.stats.push_back({"exceptions", Int(static_cast<unsigned long>(exceptions))});
    return tab;
}

Table report_table(const Config& cfg, const fop::FopResult& run,
                   const std::vector<prational::PRationalFamily>& families) {
    Table tab;
    tab.columns = {"M", "t", "r", "family", "vp_reg", "n", "exception"};
    u64 exceptions = 0;
    for (std::size_t i = 0; i < run.size(); ++i) {
        const fop::FopRecord rec = run[i];
        if (rec.degenerate()) {
            if (!cfg.positive_only)
                tab.rows.push_back(
                    {rec.M, Int(static_cast<unsigned long>(rec.t)), rec.r, Int(static_cast<unsigned long>(rec.family)), {}, {}, {}});
            continue;
        }
        const auto rep = prational::report(families, rec);
        exceptions += rep.exception;
        tab.rows.push_back({rec.M, Int(static_cast<unsigned long>(rec.t)), rec.r,
                            Int(static_cast<unsigned long>(rec.family)), Int(rep.regulator_valuation),
                            Int(rep.unit_exponent_n), rep.exception});
    }
    add_run_stats(tab, run);
    tab.stats.push_back({"exceptions", Int(static_cast<unsigned long>(exceptions))});
    return tab;
}

Table cmd_prational(const Config& cfg) {
    check_odd_prime(cfg.p);
    std::vector<prational::PRationalFamily> fams;
    if (cfg.variant == "A") {
        if (cfg.t0_zero) throw ConfigError("--t0-zero applies to variant B only");
        fams = prational::build_families(cfg.p, prational::Variant::A);
    } else if (cfg.variant == "B") {
        fams = cfg.t0_zero ? prational::build_families_t0_zero(cfg.p)
                           : prational::build_families(cfg.p, prational::Variant::B);
    } else {
        throw ConfigError("--variant must be A or B");
    }
    auto run = prational::run_families(fams, cfg.bound, fop_options(cfg));
    return report_table(cfg, run, fams);
}

Table cmd_nonrational(const Config& cfg) {
    check_odd_prime(cfg.p);
    if (cfg.q < 3 || !arith::is_prime64(cfg.q) || cfg.q % cfg.p != 1)
        throw ConfigError("--q must be a prime with q = 1 (mod p)");
    auto res = prational::nonrational_list(cfg.p, cfg.q, cfg.bound, cfg.certify, fop_options(cfg));
    if (!cfg.certify) return list_run(cfg, res.run, true, false);
    Table tab;
    tab.columns = {"M", "t", "r", "family", "vp_reg", "n", "exception"};
    for (const auto& rep : res.reports)
        tab.rows.push_back({rep.M, Int(static_cast<unsigned long>(rep.t)), rep.r,
                            Int(static_cast<unsigned long>(rep.family)), Int(rep.regulator_valuation),
                            Int(rep.unit_exponent_n), rep.exception});
    add_run_stats(tab, res.run);
    tab.stats.push_back({"failures", Int(static_cast<unsigned long>(res.failures.size()))});
    tab.stats.push_back({"certified", res.certified});
    return tab;
}

Table cmd_cubic(const Config& cfg) {
    imagclass::CubicOptions opt;
    opt.fop = fop_options(cfg, imagclass::CubicOptions::family_major());
    if (!cfg.h_limit.empty()) opt.h_limit = parse_int(cfg.h_limit, "h-limit");
    for (unsigned t0 : cfg.t0)
        if (t0 != 0 && t0 != 4 && t0 != 5) throw ConfigError("--t0 values must be 0, 4 or 5");
    if (!cfg.filtered && cfg.t0.empty()) throw ConfigError("--t0 must not be empty");
    auto res = imagclass::cubic_pipeline(cfg.bound, cfg.t0, cfg.filtered, opt);
    Table tab;
    tab.columns = {"M", "t", "r", "family", "D", "h", "v3", "n", "exception"};
    u64 trivial = 0, missing = 0;
    for (const auto& rep : res.reports) {
        Value h, v3;
        if (rep.h) {
            h = Int(static_cast<unsigned long>(*rep.h));
            v3 = Int(rep.v3);
            trivial += rep.v3 == 0;
        } else {
            ++missing;
        }
        tab.rows.push_back({rep.M, Int(static_cast<unsigned long>(rep.t)), rep.r,
                            Int(static_cast<unsigned long>(rep.family)), Int(static_cast<long>(rep.D_neg)), h, v3,
                            Int(rep.n), rep.exception});
    }
    add_run_stats(tab, res.run);
    tab.stats.push_back({"v3_zero", Int(static_cast<unsigned long>(trivial))});
    tab.stats.push_back({"h_missing", Int(static_cast<unsigned long>(missing))});
    return tab;
}

Table cmd_quintic(const Config& cfg) {
    check_odd_prime(cfg.p);
    check_sign(cfg.s);
    std::vector<prational::PRationalFamily> fams{{cfg.p, prational::VariantB{cfg.s, Int(0)}, std::nullopt}};
    auto run = prational::run_families(fams, cfg.bound, fop_options(cfg));
    Table tab;
    tab.columns = {"M", "t", "r", "n", "exception"};
    if (cfg.emit_poly) tab.columns.push_back("poly");
    u64 exceptions = 0;
    for (const auto& rec : run.positive()) {
        const auto rep = prational::report(fams, rec);
        exceptions += rep.exception;
        std::vector<Value> row{rec.M, Int(static_cast<unsigned long>(rec.t)), rec.r, Int(rep.unit_exponent_n),
                               rep.exception};
        if (cfg.emit_poly) row.push_back(imagclass::mirror_defining_polynomial(cfg.p, rec.M).to_string("x"));
        tab.rows.push_back(std::move(row));
    }
    add_run_stats(tab, run);
    tab.stats.push_back({"exceptions", Int(static_cast<unsigned long>(exceptions))});
    return tab;
}

Table cmd_mclaughlin(const Config& cfg) {
    mclaughlin::MclFamily fam;
    try {
        fam = mclaughlin::make_mcl(cfg.k, parse_int(cfg.m, "m"), parse_int(cfg.u, "u"), parse_int(cfg.v, "v"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    mclaughlin::MclOptions opt;
    opt.certify = cfg.certify;
    opt.n_cap = cfg.n_cap;
    opt.fop = fop_options(cfg);
    auto res = mclaughlin::fop_mcl(fam, cfg.bound, opt);
    Table tab;
    tab.columns = {"M", "t", "r", "valid", "n", "exception"};
    u64 exceptions = 0;
    for (const auto& rec : res.records) {
        exceptions += rec.exception();
        tab.rows.push_back({rec.M, Int(static_cast<unsigned long>(rec.t)), rec.r, rec.valid,
                            rec.n ? Value(Int(*rec.n)) : Value{}, rec.n ? Value(rec.exception()) : Value{}});
    }
    add_run_stats(tab, res.run);
    tab.stats.push_back({"invalid", Int(static_cast<unsigned long>(res.invalid))});
    tab.stats.push_back({"exceptions", Int(static_cast<unsigned long>(exceptions))});
    return tab;
}

Table cmd_gap(const Config& cfg) {
    check_sign(cfg.s);
    auto run = fop::run_fop(fop::unit_family(cfg.s), cfg.bound, fop::DedupKey::radical, fop_options(cfg));
    const auto g = fop::gap_stats(run);
    Table tab;
    tab.records = false;
    tab.columns = {"B", "N", "gap", "exponent"};
    tab.rows.push_back({Int(static_cast<unsigned long>(cfg.bound)), Int(static_cast<unsigned long>(g.count)),
                        Int(static_cast<unsigned long>(g.gap)), g.exponent});
    return tab;
}

// Output.

std::string text_of(const Value& v) {
    struct {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(const Int& x) const { return x.get_str(); }
        std::string operator()(const std::string& x) const { return x; }
        std::string operator()(bool x) const { return x ? "1" : "0"; }
        std::string operator()(double x) const {
            std::ostringstream os;
            os << std::setprecision(10) << x;
            return os.str();
        }
    } visit;
    return std::visit(visit, v);
}

json json_of(const Value& v) {
    if (const auto* x = std::get_if<Int>(&v)) {
        if (mpz_fits_slong_p(x->get_mpz_t())) return json(x->get_si());
        return json(x->get_str());  // beyond 64 bits: decimal string
    }
    if (const auto* x = std::get_if<bool>(&v)) return json(*x);
    if (const auto* x = std::get_if<double>(&v)) return json(*x);
    if (const auto* x = std::get_if<std::string>(&v)) return json(*x);
    return json();
}

bool json_record_key(const std::string& key) {
    for (const char* k : {"M", "t", "r", "n", "v3", "vp_reg", "exception"})
        if (key == k) return true;
    return false;
}

void write_table(const Table& tab, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        for (std::size_t c = 0; c < tab.columns.size(); ++c) os << (c ? "," : "") << tab.columns[c];
        os << '\n';
        for (const auto& row : tab.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << text_of(row[c]);
            os << '\n';
        }
        if (!tab.stats.empty()) {
            os << '#';
            for (const auto& [k, v] : tab.stats) os << ' ' << k << '=' << text_of(v);
            os << " rows=" << tab.rows.size() << '\n';
        }
    } else if (format == "jsonl") {
        // Record objects carry only the schema keys; the trailing object holds the stats.
        for (const auto& row : tab.rows) {
            json j = json::object();
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (tab.records && !json_record_key(tab.columns[c])) continue;
                if (std::holds_alternative<std::monostate>(row[c])) continue;
                j[tab.columns[c]] = json_of(row[c]);
            }
            os << j.dump() << '\n';
        }
        if (!tab.stats.empty()) {
            json st = json::object();
            for (const auto& [k, v] : tab.stats) st[k] = json_of(v);
            st["rows"] = tab.rows.size();
            os << json{{"stats", st}}.dump() << '\n';
        }
    } else {
        os << '[';
        for (std::size_t c = 0; c < tab.columns.size(); ++c) os << (c ? "," : "") << tab.columns[c];
        os << "]=\n";
        for (std::size_t i = 0; i < tab.rows.size(); ++i) {
            os << (i == 0 ? "" : i % 8 == 0 ? ",\n" : ",") << '[';
            for (std::size_t c = 0; c < tab.rows[i].size(); ++c) os << (c ? "," : "") << text_of(tab.rows[i][c]);
            os << ']';
        }
        if (!tab.rows.empty()) os << '\n';
        for (const auto& [k, v] : tab.stats) os << '#' << k << " = " << text_of(v) << '\n';
    }
}

void emit(const Table& tab, const Config& cfg, std::ostream& out) {
    if (cfg.output.empty()) {
        write_table(tab, cfg.format, out);
        out.flush();
        return;
    }
    const std::string tmp = cfg.output + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp);
        write_table(tab, cfg.format, f);
        f.close();
        if (!f) {
            std::remove(tmp.c_str());
            throw std::runtime_error("write failed: " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), cfg.output.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + cfg.output);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"First-occurrence sweeps over parametrized quadratic radicals", "quadfop"};
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--bound,-B", cfg.bound, "Sweep t = 1..B")->required();
        sub->add_option("--format", cfg.format, "csv, jsonl or pretty")
            ->check(CLI::IsMember({"csv", "jsonl", "pretty"}));
        sub->add_option("--output,-o", cfg.output, "Write here (atomically) instead of stdout");
        sub->add_flag("--positive-only", cfg.positive_only, "Drop degenerate records (M < 2)");
        sub->add_flag("--allow-long", cfg.allow_long, "Permit B above 4000000");
        sub->add_flag("--progress", cfg.progress, "Report sweep progress on stderr");
        sub->add_option("--workers", cfg.workers, "Worker threads (default: QUADFOP_WORKERS or all cores)");
        sub->add_option("--first-order", cfg.first_order, "Tie rule among equal keys")
            ->check(CLI::IsMember({"t-major", "family-major"}));
    };
    auto sign = [&cfg](CLI::App* sub) { sub->add_option("--s,-s", cfg.s, "Norm sign, -1 or 1")->required(); };

    auto* radicals = app.add_subcommand("radicals", "Kummer radicals of t^2 -/+ K");
    common(radicals);
    radicals->add_option("--poly", cfg.polys, "t2m<K> or t2p<K>; repeat for several families")->required();
    auto* discs = app.add_subcommand("discriminants", "Distinct discriminants of t^2 -/+ K");
    common(discs);
    discs->add_option("--poly", cfg.polys, "t2m<K> or t2p<K>; repeat for several families")->required();

    auto* units = app.add_subcommand("units", "Fundamental units from t^2 - 4s");
    common(units);
    sign(units);
    units->add_option("--t-start", cfg.t_start, "First t");
    units->add_flag("--certify", cfg.certify, "Compute n with E = eps^n");

    auto* norms = app.add_subcommand("norms", "Fundamental solutions of norm s*nu");
    common(norms);
    sign(norms);
    norms->add_option("--nu", cfg.nu, "nu >= 1")->required();

    auto* verify = app.add_subcommand("verify-powers", "Exponent of (T + r sqrt M)/2 over eps_M");
    common(verify);
    sign(verify);
    verify->add_option("--trace", cfg.trace, "T = t (linear), t^2 (square) or prime(t) (prime)");
    verify->add_option("--t-start", cfg.t_start, "First t");

    auto* prat = app.add_subcommand("prational", "p-adic regulators of the p-rationality families");
    common(prat);
    prat->add_option("--p", cfg.p, "Odd prime")->required();
    prat->add_option("--variant", cfg.variant, "A or B");
    prat->add_flag("--t0-zero", cfg.t0_zero, "Variant B with t0 = 0 only");

    auto* nonrat = app.add_subcommand("nonrational", "Non-p-rational families filtered mod q");
    common(nonrat);
    nonrat->add_option("--p", cfg.p, "Odd prime")->required();
    nonrat->add_option("--q", cfg.q, "Prime q = 1 (mod p)")->required();
    nonrat->add_flag("--certify", cfg.certify, "Check every record is a local p-th power and not global");

    auto* cubic = app.add_subcommand("cubic", "3-divisibility of h(Q(sqrt(-3M)))");
    common(cubic);
    cubic->add_option("--t0", cfg.t0, "Subset of {0,4,5} for (t0 + 9t)^2 + 4")->delimiter(',');
    cubic->add_flag("--filtered", cfg.filtered, "Use the four families filtered mod 7");
    cubic->add_option("--h-limit", cfg.h_limit, "Skip class numbers for M above this");

    auto* quintic = app.add_subcommand("quintic-list", "Radicals of p^4 t^2 - 4s with the mirror polynomial");
    common(quintic);
    sign(quintic);
    quintic->add_option("--p", cfg.p, "Odd prime")->required();
    quintic->add_flag("--emit-poly", cfg.emit_poly, "Add the defining polynomial of the mirror field");

    auto* mcl = app.add_subcommand("mclaughlin", "McLaughlin families mcl_k");
    common(mcl);
    mcl->add_option("--k", cfg.k, "1..10")->required();
    mcl->add_option("--m", cfg.m, "Square-free base radical")->required();
    mcl->add_option("--u", cfg.u, "Base unit coordinate u")->required();
    mcl->add_option("--v", cfg.v, "Base unit coordinate v")->required();
    mcl->add_flag("--certify", cfg.certify, "Compute n for every record");
    mcl->add_option("--n-cap", cfg.n_cap, "Compute n for this many records only");

    auto* gap = app.add_subcommand("gap", "Count, gap and exponent for t^2 - 4s");
    common(gap);
    sign(gap);

    std::vector<const char*> argv{"quadfop"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "quadfop: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cfg.bound < 1) throw ConfigError("--bound must be at least 1");
        if (cfg.bound > kLongBound && !cfg.allow_long)
            throw ConfigError("--bound above " + std::to_string(kLongBound) + " needs --allow-long");
        Table tab;
        if (radicals->parsed()) tab = cmd_radicals(cfg, false);
        else if (discs->parsed()) tab = cmd_radicals(cfg, true);
        else if (units->parsed()) tab = cmd_units(cfg);
        else if (norms->parsed()) tab = cmd_norms(cfg);
        else if (verify->parsed()) tab = cmd_verify_powers(cfg);
        else if (prat->parsed()) tab = cmd_prational(cfg);
        else if (nonrat->parsed()) tab = cmd_nonrational(cfg);
        else if (cubic->parsed()) tab = cmd_cubic(cfg);
        else if (quintic->parsed()) tab = cmd_quintic(cfg);
        else if (mcl->parsed()) tab = cmd_mclaughlin(cfg);
        else tab = cmd_gap(cfg);
        emit(tab, cfg, out);
    } catch (const ConfigError& e) {
        err << "quadfop: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "quadfop: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace quadfop::cli
