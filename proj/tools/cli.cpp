#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsg/antiatom.hpp"
#include "nsg/core.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/families.hpp"
#include "nsg/json_io.hpp"
#include "nsg/partitions.hpp"
#include "nsg/voidposet.hpp"

namespace nsg::cli {
namespace {

using nlohmann::json;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        if (tok.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || used == 0) throw InvalidInput("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

template <class T>
std::string spaced(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return v.empty() ? "-" : os.str();
}

std::string braced(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

std::string parts_text(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[static_cast<std::size_t>(i)];
    os << ')';
    return os.str();
}

/// Exactly one of the input flags.
struct InputSpec {
    std::string gens, gaps, partition, set;

    int count(const CLI::App& sub) const {
        int n = 0;
        for (const char* name : {"--gens", "--gaps", "--partition", "--set"}) n += sub.count(name) > 0 ? 1 : 0;
        return n;
    }
    void add_to(CLI::App& sub, bool allow_partition) {
        sub.add_option("--gens", gens, "Minimal or non-minimal generators, comma separated");
        sub.add_option("--gaps", gaps, "Gap set, comma separated (empty for N)");
        if (allow_partition) sub.add_option("--partition", partition, "Partition parts, comma separated");
        sub.add_option("--set", set, "Numerical set in text form, e.g. {0,5,7,9,->}");
    }
    NumericalSet numerical_set(const CLI::App& sub) const {
        if (sub.count("--gens")) return NumericalSemigroup::from_generators(parse_list(gens));
        if (sub.count("--gaps")) return NumericalSet::from_gaps(parse_list(gaps));
        if (sub.count("--set")) return parse_text(set);
        throw InvalidInput("no numerical set given");
    }
};

void print_field(std::ostream& out, const std::string& name, const std::string& value) {
    out << std::left << std::setw(20) << name << value << '\n';
}

json semigroup_report_json(const NumericalSemigroup& s) {
    json j;
    j["semigroup"] = to_json(static_cast<const NumericalSet&>(s));
    j["text"] = to_text(s);
    j["minimal_generators"] = s.minimal_generators();
    j["frobenius"] = s.frobenius();
    j["genus"] = s.genus();
    j["multiplicity"] = s.multiplicity();
    j["depth"] = s.depth();
    j["lambda_size"] = size_via_gap_count(s);
    if (s.is_naturals()) {
        j["pa"] = 1;
        j["sizes"] = std::vector<int>{0};
        j["lambda_minimal"] = true;
        j["witness_ideal"] = json::array();
        return j;
    }
    j["type"] = s.type();
    j["pf"] = s.pf();
    j["special_gaps"] = special_gaps(s);
    j["small_elements"] = small_elements(s);
    j["void_poset"] = to_json(VoidPoset(s));
    const auto sol = solve(s);
    j.update(to_json(sol));
    j["min_size"] = sol.min_size;
    j["witness_parts"] = enumeration(sol.witness().numerical_set).parts();
    return j;
}

void semigroup_report_text(std::ostream& out, const NumericalSemigroup& s) {
    print_field(out, "semigroup", to_text(s));
    print_field(out, "gaps", spaced(s.gaps()));
    print_field(out, "minimal generators", spaced(s.minimal_generators()));
    print_field(out, "Frobenius", std::to_string(s.frobenius()));
    print_field(out, "genus", std::to_string(s.genus()));
    print_field(out, "multiplicity", std::to_string(s.multiplicity()));
    print_field(out, "depth", std::to_string(s.depth()));
    const auto lambda = enumeration(s);
    print_field(out, "|lambda(S)|", std::to_string(lambda.size()));
    print_field(out, "Durfee", std::to_string(durfee(lambda)));
    if (s.is_naturals()) {
        print_field(out, "Pa(S)", "1");
        print_field(out, "lambda-minimal", "yes");
        return;
    }
    print_field(out, "type", std::to_string(s.type()));
    print_field(out, "symmetric", s.type() == 1 ? "yes" : "no");
    print_field(out, "PF", spaced(s.pf()));
    print_field(out, "special gaps", spaced(special_gaps(s)));
    print_field(out, "small elements", spaced(small_elements(s)));
    const VoidPoset poset(s);
    print_field(out, "void M(S)", spaced(poset.elements()));
    std::vector<std::string> edges;
    for (auto [x, y] : poset.hasse_edges()) edges.push_back(std::to_string(x) + "<" + std::to_string(y));
    print_field(out, "Hasse edges", spaced(edges));
    const auto sol = solve(s);
    print_field(out, "Pa(S)", std::to_string(sol.pa));
    print_field(out, "sizes", spaced(sol.sizes()));
    print_field(out, "min size", std::to_string(sol.min_size));
    print_field(out, "lambda-minimal", sol.lambda_minimal ? "yes" : "no");
    const auto& w = sol.witness();
    print_field(out, "witness ideal",
                braced(w.ideal.members) + " size " + std::to_string(w.partition_size) + " parts " +
                    parts_text(enumeration(w.numerical_set)));
}

int cmd_analyze(const CLI::App& sub, const InputSpec& in, bool as_json, std::ostream& out) {
    if (in.count(sub) != 1) throw InvalidInput("analyze needs exactly one of --gens, --gaps, --partition, --set");
    json j;
    NumericalSemigroup s;
    if (sub.count("--partition")) {
        const Partition lambda(parse_list(in.partition));
        const NumericalSet t = numerical_set_of(lambda);
        s = atom_monoid(t);
        if (as_json) {
            j["partition"] = to_json(lambda);
            j["partition_size"] = lambda.size();
            j["hook_set"] = hook_set(lambda);
            j["numerical_set"] = to_json(t);
        } else {
            print_field(out, "partition", parts_text(lambda));
            print_field(out, "size", std::to_string(lambda.size()));
            print_field(out, "hook set", spaced(hook_set(lambda)));
            print_field(out, "numerical set", to_text(t));
            out << "hook set is N \\ S for:\n";
        }
    } else {
        const NumericalSet t = in.numerical_set(sub);
        if (!is_semigroup(t))
            throw InvalidInput(to_text(t) + " is not a semigroup (its atom monoid is " + to_text(atom_monoid(t)) +
                               "); use --partition or pass the semigroup");
        s = NumericalSemigroup::from_set(t);
    }
    if (as_json) {
        j.update(semigroup_report_json(s));
        out << j.dump() << '\n';
    } else {
        semigroup_report_text(out, s);
    }
    return kOk;
}

struct ScanArgs {
    int genus = 0;
    int frobenius = 0;
    int only = 0;
    std::string filter;
    unsigned threads = 0;
    std::string expected;
};

EnumerationQuery make_query(const CLI::App& sub, const ScanArgs& a, int max_genus, int max_frobenius) {
    const bool g = sub.count("--genus") > 0;
    const bool f = sub.count("--frobenius") > 0;
    if (g == f) throw InvalidInput("give exactly one of --genus, --frobenius");
    EnumerationQuery q;
    q.mode = g ? EnumerationMode::by_genus : EnumerationMode::by_frobenius;
    q.bound = g ? a.genus : a.frobenius;
    if (sub.count("--only")) q.only = a.only;
    if (sub.count("--filter")) {
        try {
            q.filter = SemigroupFilter::parse(a.filter);
        } catch (const std::invalid_argument& e) {
            throw InvalidInput(e.what());
        }
    }
    q.threads = a.threads;
    try {
        q.validate();
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
    const int top = q.only.value_or(q.bound);
    if (g && top > max_genus) throw BoundExceeded("genus bound " + std::to_string(top) + " exceeds " + std::to_string(max_genus));
    if (f && top > max_frobenius)
        throw BoundExceeded("Frobenius bound " + std::to_string(top) + " exceeds " + std::to_string(max_frobenius));
    return q;
}

const char* mode_name(EnumerationMode m) { return m == EnumerationMode::by_genus ? "genus" : "frobenius"; }

int cmd_enumerate(const CLI::App& sub, const ScanArgs& a, bool count_only, std::ostream& out) {
    const auto q = make_query(sub, a, kEnumerateMaxGenus, kEnumerateMaxFrobenius);
    std::size_t total = 0;
    for (int b : q.buckets()) {
        EnumerationQuery one = q;
        one.only = b;
        one.bound = std::max(q.bound, b);
        const auto level = enumerate(one);
        total += level.size();
        if (count_only)
            out << mode_name(q.mode) << ' ' << b << '\t' << level.size() << '\n';
        else
            for (const auto& s : level) out << to_json(static_cast<const NumericalSet&>(s)).dump() << '\n';
    }
    if (count_only) out << "total\t" << total << "\t(N not counted)\n";
    return kOk;
}

std::vector<NumericalSemigroup> read_expected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read expected file " + path);
    std::vector<NumericalSemigroup> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(semigroup_from_json(json::parse(line)));
        } catch (const std::exception& e) {
            throw InvalidInput("bad line in " + path + ": " + e.what());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cmd_scan(const CLI::App& sub, const ScanArgs& a, bool as_json, std::ostream& out, std::ostream& err) {
    const auto q = make_query(sub, a, kScanMaxGenus, kScanMaxFrobenius);
    std::optional<std::vector<NumericalSemigroup>> expected;
    if (sub.count("--expected")) expected = read_expected(a.expected);
    const auto r = scan_minimality(q);

    if (as_json) {
        json j;
        j["mode"] = mode_name(q.mode);
        j["naturals_excluded"] = true;
        if (q.filter) j["filter"] = q.filter->to_string();
        j["buckets"] = json::array();
        for (const auto& [b, sum] : r.buckets)
            j["buckets"].push_back({{"bucket", b}, {"count", sum.count}, {"non_minimal", sum.non_minimal}});
        j["total"] = r.total;
        j["non_minimal"] = json::array();
        for (const auto& s : r.non_minimal) j["non_minimal"].push_back(to_json(static_cast<const NumericalSet&>(s)));
        out << j.dump() << '\n';
    } else {
        out << mode_name(q.mode) << "\tcount\tnon-minimal\n";
        for (const auto& [b, sum] : r.buckets) out << b << '\t' << sum.count << '\t' << sum.non_minimal << '\n';
        out << "total\t" << r.total << '\t' << r.non_minimal.size() << "\t(N not counted)\n";
        for (const auto& s : r.non_minimal)
            out << "not lambda-minimal: " << to_text(s) << " generators " << braced(s.minimal_generators()) << '\n';
    }
    if (expected && *expected != r.non_minimal) {
        err << "non-minimal list differs from " << a.expected << " (expected " << expected->size() << ", found "
            << r.non_minimal.size() << ")\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_family(const std::string& kind, const std::vector<int>& params, bool as_json, std::ostream& out) {
    auto need = [&](std::size_t n) {
        if (params.size() != n) throw InvalidInput("family " + kind + " takes " + std::to_string(n) + " parameters");
    };
    FamilyInstance inst;
    try {
        if (kind == "staircase") {
            need(3);
            inst = staircase(params[0], params[1], params[2]);
        } else if (kind == "interval-m") {
            need(1);
            inst = interval_m(params[0]);
        } else if (kind == "interval-k") {
            need(2);
            inst = interval_k(params[0], params[1]);
        } else {
            throw InvalidInput("unknown family " + kind + " (staircase, interval-m, interval-k)");
        }
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
    const auto checks = validate(inst);
    if (as_json) {
        json j;
        j["family"] = inst.name();
        j["semigroup"] = to_json(static_cast<const NumericalSet&>(inst.semigroup));
        if (inst.witness) j["witness"] = to_json(*inst.witness);
        j["checks"] = json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"predicted", c.predicted}, {"computed", c.computed}, {"ok", c.ok}});
        j["ok"] = all_ok(checks);
        out << j.dump() << '\n';
    } else {
        out << inst.name() << "  " << to_text(inst.semigroup) << '\n';
        if (inst.witness) out << "witness T  " << to_text(*inst.witness) << '\n';
        out << std::left << std::setw(20) << "check" << std::setw(28) << "predicted" << std::setw(28) << "computed"
            << "ok\n";
        for (const auto& c : checks)
            out << std::setw(20) << c.name << std::setw(28) << c.predicted << std::setw(28) << c.computed
                << (c.ok ? "yes" : "NO") << '\n';
    }
    return all_ok(checks) ? kOk : kMismatch;
}

int cmd_render(const CLI::App& sub, const InputSpec& in, const RenderOptions& opts, std::ostream& out) {
    if (in.count(sub) != 1) throw InvalidInput("render needs exactly one of --gens, --gaps, --partition, --set");
    if (sub.count("--partition")) {
        const Partition lambda(parse_list(in.partition));
        if (opts.walk)
            out << render(numerical_set_of(lambda), opts);
        else
            out << render(lambda, opts);
    } else {
        out << render(in.numerical_set(sub), opts);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical semigroups, hook sets and the anti-atom problem", "nsg"};
    app.require_subcommand(1);

    bool as_json = false;
    InputSpec input;
    ScanArgs scan_args;
    RenderOptions render_opts;
    bool count_only = false;
    std::string family_kind;
    std::vector<int> family_params;

    auto* analyze = app.add_subcommand("analyze", "Invariants, void poset and anti-atom solution of one semigroup");
    input.add_to(*analyze, true);
    analyze->add_flag("--json", as_json, "JSON output");

    auto add_query = [&](CLI::App* sub) {
        sub->add_option("--genus", scan_args.genus, "Genus buckets 1..N");
        sub->add_option("--frobenius", scan_args.frobenius, "Frobenius buckets 1..N");
        sub->add_option("--only", scan_args.only, "Restrict to a single bucket");
        sub->add_option("--filter", scan_args.filter, "Predicates key=value[,key=value] (depth, type, small, multiplicity, genus, frobenius)");
        sub->add_option("--threads", scan_args.threads, "Worker threads (0 = all cores)");
    };
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List semigroups as newline-delimited JSON");
    add_query(enumerate_cmd);
    enumerate_cmd->add_flag("--count", count_only, "Only print per-bucket counts");

    auto* scan = app.add_subcommand("scan", "Count semigroups and list those that are not lambda-minimal");
    add_query(scan);
    scan->add_option("--expected", scan_args.expected, "Newline-delimited JSON of the expected non-minimal list");
    scan->add_flag("--json", as_json, "JSON output");

    auto* family = app.add_subcommand("family", "Closed-form predictions versus computed values");
    family->add_option("kind", family_kind, "staircase | interval-m | interval-k")->required();
    family->add_option("params", family_params, "Family parameters")->required();
    family->add_flag("--json", as_json, "JSON output");

    auto* render_cmd = app.add_subcommand("render", "ASCII Young diagram");
    input.add_to(*render_cmd, true);
    render_cmd->add_flag("--hooks", render_opts.hooks, "Label boxes with hook lengths");
    render_cmd->add_flag("--walk", render_opts.walk, "Append the profile walk");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(*analyze, input, as_json, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(*enumerate_cmd, scan_args, count_only, out);
        if (scan->parsed()) return cmd_scan(*scan, scan_args, as_json, out, err);
        if (family->parsed()) return cmd_family(family_kind, family_params, as_json, out);
        if (render_cmd->parsed()) return cmd_render(*render_cmd, input, render_opts, out);
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBoundExceeded;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace nsg::cli
